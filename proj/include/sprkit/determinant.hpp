#ifndef SPRKIT_DETERMINANT_HPP
#define SPRKIT_DETERMINANT_HPP

#include <utility>
#include <vector>

#include "sprkit/matrix.hpp"
#include "sprkit/polynomial.hpp"

namespace sprkit {

/// det(xI - A) by Berkowitz's division-free recurrence.
///
/// With A_r the leading r x r block, split as [[A_{r-1}, S], [R, a]], the
/// coefficient vector (high-to-low) of det(xI - A_r) is T_r times that of
/// A_{r-1}, where T_r is the lower-triangular Toeplitz matrix with first
/// column (1, -a, -R S, -R A_{r-1} S, ..., -R A_{r-1}^{r-2} S).
/// Uses O(m^4) ring operations and no division, so it is valid over any
/// commutative ring.
template <CommutativeRing R>
UniPolynomial<R> berkowitz_char_poly(const Matrix<R>& a) {
  using T = typename R::value_type;
  const R& ring = a.ring();
  const std::size_t m = a.dim();

  std::vector<T> c{ring.one(), ring.neg(a(0, 0))};
  for (std::size_t r = 1; r < m; ++r) {
    // column of the Toeplitz matrix, length r + 2
    std::vector<T> col;
    col.reserve(r + 2);
    col.push_back(ring.one());
    col.push_back(ring.neg(a(r, r)));

    std::vector<T> v(r);  // A_{r-1}^j S, starting at S
    for (std::size_t i = 0; i < r; ++i) v[i] = a(i, r);
    for (std::size_t j = 0; j < r; ++j) {
      T dot = ring.zero();
      for (std::size_t i = 0; i < r; ++i) dot = ring.add(dot, ring.mul(a(r, i), v[i]));
      col.push_back(ring.neg(dot));
      if (j + 1 < r) {
        std::vector<T> next(r, ring.zero());
        for (std::size_t i = 0; i < r; ++i)
          for (std::size_t k = 0; k < r; ++k) next[i] = ring.add(next[i], ring.mul(a(i, k), v[k]));
        v = std::move(next);
      }
    }

    std::vector<T> next_c(r + 2, ring.zero());
    for (std::size_t i = 0; i < r + 2; ++i) {
      for (std::size_t j = 0; j <= std::min(i, r); ++j) {
        next_c[i] = ring.add(next_c[i], ring.mul(col[i - j], c[j]));
      }
    }
    c = std::move(next_c);
  }

  std::vector<T> low_to_high(c.rbegin(), c.rend());
  return UniPolynomial<R>(ring, std::move(low_to_high));
}

template <CommutativeRing R>
typename R::value_type determinant(const Matrix<R>& a) {
  const auto chi = berkowitz_char_poly(a);
  auto c0 = chi.coeff(0);
  return a.dim() % 2 == 0 ? c0 : a.ring().neg(c0);
}

/// Sum_k x^k C_k with matrix coefficients C_k, low-to-high.
template <Ring R>
class MatrixPolynomial {
 public:
  MatrixPolynomial(R ring, std::size_t dim) : ring_(std::move(ring)), dim_(dim) {}
  MatrixPolynomial(R ring, std::size_t dim, std::vector<Matrix<R>> coefficients)
      : ring_(std::move(ring)), dim_(dim), coeffs_(std::move(coefficients)) {
    for (const auto& c : coeffs_) {
      if (c.dim() != dim_) throw Error(ErrorKind::dim_mismatch, "matrix polynomial coefficient dimension");
      if (!(c.ring() == ring_)) throw Error(ErrorKind::spec_mismatch, "matrix polynomial coefficient ring");
    }
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  }

  /// x^k * C
  static MatrixPolynomial term(std::size_t k, const Matrix<R>& c) {
    std::vector<Matrix<R>> cs(k + 1, Matrix<R>(c.ring(), c.dim()));
    cs[k] = c;
    return MatrixPolynomial(c.ring(), c.dim(), std::move(cs));
  }

  /// Scalar polynomial lifted through c_k -> c_k I.
  static MatrixPolynomial lift(const UniPolynomial<R>& p, std::size_t dim) {
    std::vector<Matrix<R>> cs;
    for (const auto& c : p.coefficients()) cs.push_back(Matrix<R>::scalar(p.ring(), dim, c));
    return MatrixPolynomial(p.ring(), dim, std::move(cs));
  }

  const R& ring() const noexcept { return ring_; }
  std::size_t dim() const noexcept { return dim_; }
  const std::vector<Matrix<R>>& coefficients() const noexcept { return coeffs_; }

  /// The same object viewed as one matrix over R[x].
  Matrix<PolynomialRing<R>> as_polynomial_matrix() const {
    const PolynomialRing<R> px(ring_);
    Matrix<PolynomialRing<R>> out(px, dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
      for (std::size_t j = 0; j < dim_; ++j) {
        typename PolynomialRing<R>::value_type entry;
        entry.reserve(coeffs_.size());
        for (const auto& c : coeffs_) entry.push_back(c(i, j));
        coeffs::trim(ring_, entry);
        out(i, j) = std::move(entry);
      }
    }
    return out;
  }

  static MatrixPolynomial from_polynomial_matrix(const Matrix<PolynomialRing<R>>& m) {
    const R& ring = m.ring().base();
    std::size_t len = 0;
    for (const auto& e : m.entries()) len = std::max(len, e.size());
    std::vector<Matrix<R>> cs(len, Matrix<R>(ring, m.dim()));
    for (std::size_t i = 0; i < m.dim(); ++i)
      for (std::size_t j = 0; j < m.dim(); ++j)
        for (std::size_t k = 0; k < m(i, j).size(); ++k) cs[k](i, j) = m(i, j)[k];
    return MatrixPolynomial(ring, m.dim(), std::move(cs));
  }

  friend MatrixPolynomial operator+(const MatrixPolynomial& a, const MatrixPolynomial& b) {
    if (a.dim_ != b.dim_) throw Error(ErrorKind::dim_mismatch, "matrix polynomial sum");
    std::vector<Matrix<R>> cs(std::max(a.coeffs_.size(), b.coeffs_.size()), Matrix<R>(a.ring_, a.dim_));
    for (std::size_t k = 0; k < a.coeffs_.size(); ++k) cs[k] = cs[k] + a.coeffs_[k];
    for (std::size_t k = 0; k < b.coeffs_.size(); ++k) cs[k] = cs[k] + b.coeffs_[k];
    return MatrixPolynomial(a.ring_, a.dim_, std::move(cs));
  }

  friend MatrixPolynomial operator-(const MatrixPolynomial& a, const MatrixPolynomial& b) {
    if (a.dim_ != b.dim_) throw Error(ErrorKind::dim_mismatch, "matrix polynomial difference");
    std::vector<Matrix<R>> cs(std::max(a.coeffs_.size(), b.coeffs_.size()), Matrix<R>(a.ring_, a.dim_));
    for (std::size_t k = 0; k < a.coeffs_.size(); ++k) cs[k] = cs[k] + a.coeffs_[k];
    for (std::size_t k = 0; k < b.coeffs_.size(); ++k) cs[k] = cs[k] - b.coeffs_[k];
    return MatrixPolynomial(a.ring_, a.dim_, std::move(cs));
  }

  friend bool operator==(const MatrixPolynomial& a, const MatrixPolynomial& b) {
    return a.dim_ == b.dim_ && a.ring_ == b.ring_ && a.coeffs_ == b.coeffs_;
  }

 private:
  R ring_;
  std::size_t dim_;
  std::vector<Matrix<R>> coeffs_;
};

/// det(f(x)) computed in M_m(R[x]).
template <CommutativeRing R>
UniPolynomial<R> det_poly_matrix(const MatrixPolynomial<R>& f) {
  const auto d = determinant(f.as_polynomial_matrix());
  return UniPolynomial<R>(f.ring(), d);
}

/// Right substitution: sum_k A^k C_k.
template <Ring R>
Matrix<R> right_evaluate_poly(const MatrixPolynomial<R>& f, const Matrix<R>& a) {
  if (f.dim() != a.dim()) throw Error(ErrorKind::dim_mismatch, "evaluation point dimension");
  if (!(f.ring() == a.ring())) throw Error(ErrorKind::spec_mismatch, "evaluation point ring");
  Matrix<R> acc(a.ring(), a.dim());
  Matrix<R> ak = Matrix<R>::identity(a.ring(), a.dim());
  for (std::size_t k = 0; k < f.coefficients().size(); ++k) {
    if (k) ak = ak * a;
    acc = acc + ak * f.coefficients()[k];
  }
  return acc;
}

template <Ring R>
Matrix<R> right_evaluate_poly(const UniPolynomial<R>& p, const Matrix<R>& a) {
  if (!(p.ring() == a.ring())) throw Error(ErrorKind::spec_mismatch, "evaluation point ring");
  return right_evaluate_poly(MatrixPolynomial<R>::lift(p, a.dim()), a);
}

}  // namespace sprkit

#endif  // SPRKIT_DETERMINANT_HPP
