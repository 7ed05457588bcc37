#ifndef SPRKIT_POLYNOMIAL_HPP
#define SPRKIT_POLYNOMIAL_HPP

#include <string>
#include <utility>
#include <vector>

#include "sprkit/ring.hpp"

namespace sprkit {

/// Univariate polynomial over a commutative ring context, dense low-to-high.
template <Ring R>
class UniPolynomial {
 public:
  using value_type = typename R::value_type;

  explicit UniPolynomial(R ring) : ring_(std::move(ring)) {}
  UniPolynomial(R ring, std::vector<value_type> coefficients)
      : ring_(std::move(ring)), coeffs_(std::move(coefficients)) {
    coeffs::trim(ring_, coeffs_);
  }

  /// x^k
  static UniPolynomial monomial(const R& ring, std::size_t k) {
    std::vector<value_type> cs(k + 1, ring.zero());
    cs[k] = ring.one();
    return UniPolynomial(ring, std::move(cs));
  }

  const R& ring() const noexcept { return ring_; }
  const std::vector<value_type>& coefficients() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }

  value_type coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : ring_.zero(); }

  /// Lowest k with a nonzero coefficient; -1 for zero.
  long order() const {
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
      if (!ring_.is_zero(coeffs_[k])) return static_cast<long>(k);
    }
    return -1;
  }

  value_type evaluate(const value_type& at) const {
    value_type acc = ring_.zero();
    for (std::size_t k = coeffs_.size(); k-- > 0;) acc = ring_.add(ring_.mul(acc, at), coeffs_[k]);
    return acc;
  }

  std::string to_string(const std::string& var = "x") const {
    if (coeffs_.empty()) return "0";
    std::string out;
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
      if (ring_.is_zero(coeffs_[k])) continue;
      std::string c = ring_.to_string(coeffs_[k]);
      const std::string mono = k == 0 ? "" : (k == 1 ? var : var + "^" + std::to_string(k));
      std::string term;
      if (k == 0) {
        term = c;
      } else if (c == "1") {
        term = mono;
      } else if (c == "-1") {
        term = "-" + mono;
      } else if (c.find_first_of("+-", 1) != std::string::npos) {
        term = "(" + c + ")*" + mono;
      } else {
        term = c + "*" + mono;
      }
      if (!out.empty() && term[0] != '-') out += "+";
      out += term;
    }
    return out;
  }

  friend UniPolynomial operator+(const UniPolynomial& a, const UniPolynomial& b) {
    return UniPolynomial(a.ring_, coeffs::add(a.ring_, a.coeffs_, b.coeffs_));
  }
  friend UniPolynomial operator-(const UniPolynomial& a, const UniPolynomial& b) {
    return UniPolynomial(a.ring_, coeffs::sub(a.ring_, a.coeffs_, b.coeffs_));
  }
  friend UniPolynomial operator*(const UniPolynomial& a, const UniPolynomial& b) {
    return UniPolynomial(a.ring_, coeffs::mul(a.ring_, a.coeffs_, b.coeffs_));
  }
  friend bool operator==(const UniPolynomial& a, const UniPolynomial& b) {
    return a.ring_ == b.ring_ && coeffs::equal(a.ring_, a.coeffs_, b.coeffs_);
  }

 private:
  R ring_;
  std::vector<value_type> coeffs_;
};

/// Ring context for R[x]; values are trimmed coefficient sequences.
template <Ring R>
class PolynomialRing {
 public:
  using value_type = std::vector<typename R::value_type>;
  static constexpr bool commutative = R::commutative;

  explicit PolynomialRing(R base) : base_(std::move(base)) {}

  const R& base() const noexcept { return base_; }

  value_type zero() const { return {}; }
  value_type one() const { return constant(base_.one()); }
  value_type from_integer(const Integer& k) const { return constant(base_.from_integer(k)); }
  value_type constant(const typename R::value_type& c) const {
    value_type out{c};
    coeffs::trim(base_, out);
    return out;
  }
  value_type variable() const { return UniPolynomial<R>::monomial(base_, 1).coefficients(); }

  value_type add(const value_type& a, const value_type& b) const { return coeffs::add(base_, a, b); }
  value_type sub(const value_type& a, const value_type& b) const { return coeffs::sub(base_, a, b); }
  value_type mul(const value_type& a, const value_type& b) const { return coeffs::mul(base_, a, b); }
  value_type neg(const value_type& a) const { return coeffs::neg(base_, a); }
  bool equal(const value_type& a, const value_type& b) const { return coeffs::equal(base_, a, b); }
  bool is_zero(const value_type& a) const { return a.empty(); }
  std::string to_string(const value_type& a) const { return UniPolynomial<R>(base_, a).to_string(); }

  friend bool operator==(const PolynomialRing& a, const PolynomialRing& b) { return a.base_ == b.base_; }

 private:
  R base_;
};

}  // namespace sprkit

#endif  // SPRKIT_POLYNOMIAL_HPP
