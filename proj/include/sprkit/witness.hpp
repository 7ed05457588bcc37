#ifndef SPRKIT_WITNESS_HPP
#define SPRKIT_WITNESS_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "sprkit/determinant.hpp"
#include "sprkit/matrix.hpp"
#include "sprkit/polynomial.hpp"

// Every witness built here is a polynomial expression in A and the given
// right witness, so it lies in any subring containing both.

namespace sprkit {

namespace identity_names {
inline constexpr const char* exponent_shape = "N = n*m";
inline constexpr const char* factored_shape = "p = x^N q(x), q(0) = 1";
inline constexpr const char* p_is_det = "p = det(x^n I - x^(n+1) X)";
inline constexpr const char* c_from_p = "C = -(s_1 I + s_2 A + ... + s_m A^(m-1))";
inline constexpr const char* right_n = "A^n = A^(n+1) X";
inline constexpr const char* right_big_n = "A^N = A^(N+1) C";
inline constexpr const char* commutes = "A w = w A";
inline constexpr const char* drazin_big_n = "A^N = A^(N+1) w";
inline constexpr const char* left_n = "A^n = Y A^(n+1)";
}  // namespace identity_names

/// (A, n, X) with A^n = A^(n+1) X.
template <CommutativeRing R>
class RightWitnessInstance {
 public:
  RightWitnessInstance(Matrix<R> a, std::uint64_t n, Matrix<R> x)
      : a_(std::move(a)), n_(n), x_(std::move(x)) {
    if (n_ == 0) throw Error(ErrorKind::precondition_failed, "exponent n must be positive");
    if (a_.dim() != x_.dim()) throw Error(ErrorKind::dim_mismatch, "A and X differ in dimension");
    if (!(a_.ring() == x_.ring())) throw Error(ErrorKind::spec_mismatch, "A and X over different rings");
    if (!(pow(a_, n_) == pow(a_, n_ + 1) * x_)) {
      throw Error(ErrorKind::precondition_failed, "A^n != A^(n+1) X for n = " + std::to_string(n_));
    }
  }

  /// For deserialized data that must be verified rather than trusted.
  static RightWitnessInstance unchecked(Matrix<R> a, std::uint64_t n, Matrix<R> x) {
    return RightWitnessInstance(std::move(a), n, std::move(x), Unchecked{});
  }

  const Matrix<R>& a() const noexcept { return a_; }
  std::uint64_t n() const noexcept { return n_; }
  const Matrix<R>& x() const noexcept { return x_; }

  friend bool operator==(const RightWitnessInstance& l, const RightWitnessInstance& r) {
    return l.n_ == r.n_ && l.a_ == r.a_ && l.x_ == r.x_;
  }

 private:
  struct Unchecked {};
  RightWitnessInstance(Matrix<R> a, std::uint64_t n, Matrix<R> x, Unchecked)
      : a_(std::move(a)), n_(n), x_(std::move(x)) {}

  Matrix<R> a_;
  std::uint64_t n_;
  Matrix<R> x_;
};

/// w = a^n x^(n+1). Verifies a w = w a and a^n = a^(n+1) w before returning.
template <CommutativeRing R>
Matrix<R> drazin_witness(const Matrix<R>& a, const Matrix<R>& x, std::uint64_t n) {
  if (n == 0) throw Error(ErrorKind::precondition_failed, "exponent n must be positive");
  const Matrix<R> an = pow(a, n);
  const Matrix<R> an1 = an * a;
  if (!(an == an1 * x)) throw Error(ErrorKind::precondition_failed, "a^n != a^(n+1) x");
  Matrix<R> w = an * pow(x, n + 1);
  if (!(a * w == w * a)) throw Error(ErrorKind::internal_lemma_violation, "a w != w a");
  if (!(an == an1 * w)) throw Error(ErrorKind::internal_lemma_violation, "a^n != a^(n+1) w");
  return w;
}

struct ExponentShift {
  std::uint64_t n;
  std::uint64_t m;
};

/// Checks that a^n = a^(n+1) x carries over to a^m = a^(m+1) x and
/// a^n = a^(n+k) x^k with k = m - n.
template <CommutativeRing R>
ExponentShift exponent_raise(const Matrix<R>& a, const Matrix<R>& x, std::uint64_t n, std::uint64_t m) {
  if (n == 0 || m < n) throw Error(ErrorKind::precondition_failed, "need 1 <= n <= m");
  const Matrix<R> an = pow(a, n);
  if (!(an == an * a * x)) throw Error(ErrorKind::precondition_failed, "a^n != a^(n+1) x");
  const Matrix<R> am = pow(a, m);
  if (!(am == am * a * x)) throw Error(ErrorKind::internal_lemma_violation, "a^m != a^(m+1) x");
  if (!(an == am * pow(x, m - n))) throw Error(ErrorKind::internal_lemma_violation, "a^n != a^(n+k) x^k");
  return {n, m};
}

/// Left witness at exponent n from a right witness x at n and a left
/// witness w at N >= n:  Y = w^(N-n+1) a^(N-n).
///
/// a^n = a^N x^(N-n) and a^(2N-n) x^(N-n) = a^N, so
/// a^n = w^(N-n) a^N = w^(N-n+1) a^(N+1) = Y a^(n+1).
template <CommutativeRing R>
Matrix<R> azumaya_lower_left(const Matrix<R>& a, const Matrix<R>& x, const Matrix<R>& w, std::uint64_t big_n,
                             std::uint64_t n) {
  if (n == 0 || big_n < n) throw Error(ErrorKind::precondition_failed, "need 1 <= n <= N");
  const Matrix<R> an = pow(a, n);
  const Matrix<R> an1 = an * a;
  if (!(an == an1 * x)) throw Error(ErrorKind::precondition_failed, "a^n != a^(n+1) x");
  const Matrix<R> aN = pow(a, big_n);
  if (!(aN == w * aN * a)) throw Error(ErrorKind::precondition_failed, "a^N != w a^(N+1)");
  Matrix<R> y = pow(w, big_n - n + 1) * pow(a, big_n - n);
  if (!(an == y * an1)) throw Error(ErrorKind::derivation_violation, "a^n != Y a^(n+1)");
  return y;
}

struct IdentityCheck {
  std::string name;
  bool holds;
};

/// Transcript of the right-to-left conversion. Every field is stored so the
/// identities can be re-derived without trusting the producer.
template <CommutativeRing R>
struct LeftWitnessCertificate {
  RightWitnessInstance<R> instance;
  UniPolynomial<R> p;  // det(x^n I - x^(n+1) X)
  Matrix<R> c;         // A^N = A^(N+1) C
  std::uint64_t big_n;
  Matrix<R> w;  // commutes with A, A^N = A^(N+1) w
  Matrix<R> y;  // A^n = Y A^(n+1)

  friend bool operator==(const LeftWitnessCertificate& l, const LeftWitnessCertificate& r) {
    return l.instance == r.instance && l.p == r.p && l.c == r.c && l.big_n == r.big_n && l.w == r.w && l.y == r.y;
  }
};

/// q(x) = det(I - x X) = 1 + s_1 x + ... + s_m x^m.
template <CommutativeRing R>
UniPolynomial<R> reversed_char_poly(const Matrix<R>& x) {
  const auto id = Matrix<R>::identity(x.ring(), x.dim());
  return det_poly_matrix(MatrixPolynomial<R>(x.ring(), x.dim(), {id, -x}));
}

/// C = -(s_1 I + s_2 A + ... + s_m A^(m-1)) from q = 1 + s_1 x + ... + s_m x^m.
template <CommutativeRing R>
Matrix<R> right_witness_from_q(const Matrix<R>& a, const UniPolynomial<R>& q) {
  const R& ring = a.ring();
  Matrix<R> acc(ring, a.dim());
  Matrix<R> ak = Matrix<R>::identity(ring, a.dim());
  for (std::size_t k = 1; k < q.coefficients().size(); ++k) {
    if (k > 1) ak = ak * a;
    acc = acc + scale(q.coefficients()[k], ak);
  }
  return -acc;
}

/// Right witness (A, n, X) -> verified left witness Y with A^n = Y A^(n+1).
///
/// p = det(x^n I - x^(n+1) X) = x^(nm) det(I - x X). Since A satisfies p
/// (right substitution), A^N = A^(N+1) C with N = nm and C read off
/// q = det(I - x X); C yields a commuting witness w, and w lowers back to a
/// left witness at exponent n.
template <CommutativeRing R>
LeftWitnessCertificate<R> right_to_left_certificate(const RightWitnessInstance<R>& inst) {
  const Matrix<R>& a = inst.a();
  const std::size_t m = a.dim();
  const std::uint64_t n = inst.n();
  const std::uint64_t big_n = n * m;

  const UniPolynomial<R> q = reversed_char_poly(inst.x());
  std::vector<typename R::value_type> pc(big_n, a.ring().zero());
  pc.insert(pc.end(), q.coefficients().begin(), q.coefficients().end());
  UniPolynomial<R> p(a.ring(), std::move(pc));

  Matrix<R> c = right_witness_from_q(a, q);
  const Matrix<R> aN = pow(a, big_n);
  if (!(aN == aN * a * c)) throw Error(ErrorKind::internal_lemma_violation, "A^N != A^(N+1) C");

  Matrix<R> w = drazin_witness(a, c, big_n);
  Matrix<R> y = azumaya_lower_left(a, inst.x(), w, big_n, n);
  return LeftWitnessCertificate<R>{inst, std::move(p), std::move(c), big_n, std::move(w), std::move(y)};
}

struct CertificateVerdict {
  bool verified = true;
  std::vector<IdentityCheck> identities;

  const IdentityCheck* first_failure() const {
    for (const auto& id : identities) {
      if (!id.holds) return &id;
    }
    return nullptr;
  }
};

/// Re-derives every identity from the raw fields. Throws only on
/// structurally malformed data (dimension or ring mismatches).
template <CommutativeRing R>
CertificateVerdict verify_certificate(const LeftWitnessCertificate<R>& cert) {
  const Matrix<R>& a = cert.instance.a();
  const Matrix<R>& x = cert.instance.x();
  const std::uint64_t n = cert.instance.n();
  const std::size_t m = a.dim();
  for (const Matrix<R>* mat : {&x, &cert.c, &cert.w, &cert.y}) {
    if (mat->dim() != m) throw Error(ErrorKind::dim_mismatch, "certificate matrices differ in dimension");
    if (!(mat->ring() == a.ring())) throw Error(ErrorKind::spec_mismatch, "certificate matrices over different rings");
  }
  if (!(cert.p.ring() == a.ring())) throw Error(ErrorKind::spec_mismatch, "certificate polynomial ring");

  CertificateVerdict v;
  auto record = [&v](const char* name, bool holds) {
    v.identities.push_back({name, holds});
    v.verified = v.verified && holds;
  };

  record(identity_names::exponent_shape, cert.big_n == n * m);

  const long order = cert.p.order();
  const bool shape = order >= 0 && static_cast<std::uint64_t>(order) == cert.big_n &&
                     a.ring().equal(cert.p.coeff(cert.big_n), a.ring().one());
  record(identity_names::factored_shape, shape);

  const auto id = Matrix<R>::identity(a.ring(), m);
  const auto f = MatrixPolynomial<R>::term(n, id) - MatrixPolynomial<R>::term(n + 1, x);
  record(identity_names::p_is_det, det_poly_matrix(f) == cert.p);

  if (shape) {
    std::vector<typename R::value_type> qc(cert.p.coefficients().begin() + static_cast<long>(cert.big_n),
                                           cert.p.coefficients().end());
    record(identity_names::c_from_p, right_witness_from_q(a, UniPolynomial<R>(a.ring(), qc)) == cert.c);
  } else {
    record(identity_names::c_from_p, false);
  }

  const Matrix<R> an = pow(a, n);
  const Matrix<R> an1 = an * a;
  const Matrix<R> aN = pow(a, cert.big_n);
  const Matrix<R> aN1 = aN * a;
  record(identity_names::right_n, an == an1 * x);
  record(identity_names::right_big_n, aN == aN1 * cert.c);
  record(identity_names::commutes, a * cert.w == cert.w * a);
  record(identity_names::drazin_big_n, aN == aN1 * cert.w);
  record(identity_names::left_n, an == cert.y * an1);
  return v;
}

}  // namespace sprkit

#endif  // SPRKIT_WITNESS_HPP
