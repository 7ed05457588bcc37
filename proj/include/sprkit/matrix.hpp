#ifndef SPRKIT_MATRIX_HPP
#define SPRKIT_MATRIX_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "sprkit/errors.hpp"
#include "sprkit/ring.hpp"

namespace sprkit {

/// Square matrix over a ring context, row-major. Multiplication keeps the
/// order of entry products, so R need not be commutative.
template <Ring R>
class Matrix {
 public:
  using ring_type = R;
  using value_type = typename R::value_type;

  Matrix(R ring, std::size_t dim) : ring_(std::move(ring)), dim_(dim) {
    if (dim_ == 0) throw Error(ErrorKind::dim_mismatch, "matrix dimension must be at least 1");
    entries_.assign(dim_ * dim_, ring_.zero());
  }

  Matrix(R ring, std::size_t dim, std::vector<value_type> entries)
      : ring_(std::move(ring)), dim_(dim), entries_(std::move(entries)) {
    if (dim_ == 0) throw Error(ErrorKind::dim_mismatch, "matrix dimension must be at least 1");
    if (entries_.size() != dim_ * dim_) {
      throw Error(ErrorKind::dim_mismatch, "expected " + std::to_string(dim_ * dim_) + " entries, got " +
                                               std::to_string(entries_.size()));
    }
    if constexpr (MembershipChecked<R>) {
      for (const auto& e : entries_) {
        if (!ring_.contains(e)) throw Error(ErrorKind::spec_mismatch, "matrix entry outside the ring");
      }
    }
  }

  static Matrix identity(const R& ring, std::size_t dim) { return scalar(ring, dim, ring.one()); }

  static Matrix scalar(const R& ring, std::size_t dim, const value_type& c) {
    Matrix out(ring, dim);
    for (std::size_t i = 0; i < dim; ++i) out(i, i) = c;
    return out;
  }

  /// E_{row,col}: one at (row, col), zero elsewhere.
  static Matrix unit(const R& ring, std::size_t dim, std::size_t row, std::size_t col) {
    Matrix out(ring, dim);
    out(row, col) = ring.one();
    return out;
  }

  const R& ring() const noexcept { return ring_; }
  std::size_t dim() const noexcept { return dim_; }
  const std::vector<value_type>& entries() const noexcept { return entries_; }

  const value_type& operator()(std::size_t i, std::size_t j) const { return entries_[i * dim_ + j]; }
  value_type& operator()(std::size_t i, std::size_t j) { return entries_[i * dim_ + j]; }

  bool is_zero() const {
    for (const auto& e : entries_) {
      if (!ring_.is_zero(e)) return false;
    }
    return true;
  }

  Matrix transpose() const {
    Matrix out(ring_, dim_);
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = 0; j < dim_; ++j) out(j, i) = (*this)(i, j);
    return out;
  }

  /// Literal form "[[e,e],[e,e]]".
  std::string to_string() const {
    std::string out = "[";
    for (std::size_t i = 0; i < dim_; ++i) {
      out += i ? ",[" : "[";
      for (std::size_t j = 0; j < dim_; ++j) {
        if (j) out += ",";
        out += ring_.to_string((*this)(i, j));
      }
      out += "]";
    }
    return out + "]";
  }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    check_compatible(a, b);
    Matrix out(a.ring_, a.dim_);
    for (std::size_t k = 0; k < a.entries_.size(); ++k) out.entries_[k] = a.ring_.add(a.entries_[k], b.entries_[k]);
    return out;
  }

  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    check_compatible(a, b);
    Matrix out(a.ring_, a.dim_);
    for (std::size_t k = 0; k < a.entries_.size(); ++k) out.entries_[k] = a.ring_.sub(a.entries_[k], b.entries_[k]);
    return out;
  }

  friend Matrix operator-(const Matrix& a) {
    Matrix out(a.ring_, a.dim_);
    for (std::size_t k = 0; k < a.entries_.size(); ++k) out.entries_[k] = a.ring_.neg(a.entries_[k]);
    return out;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    check_compatible(a, b);
    const std::size_t n = a.dim_;
    const R& r = a.ring_;
    Matrix out(r, n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        value_type acc = r.zero();
        for (std::size_t k = 0; k < n; ++k) acc = r.add(acc, r.mul(a(i, k), b(k, j)));
        out(i, j) = std::move(acc);
      }
    }
    return out;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    if (a.dim_ != b.dim_ || !(a.ring_ == b.ring_)) return false;
    for (std::size_t k = 0; k < a.entries_.size(); ++k) {
      if (!a.ring_.equal(a.entries_[k], b.entries_[k])) return false;
    }
    return true;
  }

 private:
  static void check_compatible(const Matrix& a, const Matrix& b) {
    if (a.dim_ != b.dim_) {
      throw Error(ErrorKind::dim_mismatch,
                  std::to_string(a.dim_) + "x" + std::to_string(a.dim_) + " vs " + std::to_string(b.dim_) + "x" +
                      std::to_string(b.dim_));
    }
    if (!(a.ring_ == b.ring_)) throw Error(ErrorKind::spec_mismatch, "matrices over different rings");
  }

  R ring_;
  std::size_t dim_;
  std::vector<value_type> entries_;
};

template <Ring R>
Matrix<R> pow(const Matrix<R>& a, std::uint64_t exp) {
  Matrix<R> result = Matrix<R>::identity(a.ring(), a.dim());
  Matrix<R> base = a;
  while (exp > 0) {
    if (exp & 1U) result = result * base;
    exp >>= 1U;
    if (exp > 0) base = base * base;
  }
  return result;
}

/// c * A (scalar on the left).
template <Ring R>
Matrix<R> scale(const typename R::value_type& c, const Matrix<R>& a) {
  if constexpr (MembershipChecked<R>) {
    if (!a.ring().contains(c)) throw Error(ErrorKind::spec_mismatch, "scalar outside the ring");
  }
  std::vector<typename R::value_type> out;
  out.reserve(a.entries().size());
  for (const auto& e : a.entries()) out.push_back(a.ring().mul(c, e));
  return Matrix<R>(a.ring(), a.dim(), std::move(out));
}

/// Powers A^0 .. A^count-1.
template <Ring R>
std::vector<Matrix<R>> powers(const Matrix<R>& a, std::size_t count) {
  std::vector<Matrix<R>> out;
  out.reserve(count);
  if (count == 0) return out;
  out.push_back(Matrix<R>::identity(a.ring(), a.dim()));
  for (std::size_t k = 1; k < count; ++k) out.push_back(out.back() * a);
  return out;
}

}  // namespace sprkit

#endif  // SPRKIT_MATRIX_HPP
