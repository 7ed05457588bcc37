#ifndef SPRKIT_RING_HPP
#define SPRKIT_RING_HPP

#include <algorithm>
#include <concepts>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "sprkit/errors.hpp"

namespace sprkit {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// A ring context is a small copyable value that knows how to combine the
// elements of one ring. Elements are plain values; the context carries
// whatever shared description the ring needs (modulus, tables, ...).
template <class R>
concept Ring = std::copy_constructible<R> &&
    requires(const R& r, const typename R::value_type& a, const typename R::value_type& b,
             const Integer& k) {
      typename R::value_type;
      { R::commutative } -> std::convertible_to<bool>;
      { r.zero() } -> std::same_as<typename R::value_type>;
      { r.one() } -> std::same_as<typename R::value_type>;
      { r.from_integer(k) } -> std::same_as<typename R::value_type>;
      { r.add(a, b) } -> std::same_as<typename R::value_type>;
      { r.sub(a, b) } -> std::same_as<typename R::value_type>;
      { r.mul(a, b) } -> std::same_as<typename R::value_type>;
      { r.neg(a) } -> std::same_as<typename R::value_type>;
      { r.equal(a, b) } -> std::convertible_to<bool>;
      { r.is_zero(a) } -> std::convertible_to<bool>;
      { r.to_string(a) } -> std::convertible_to<std::string>;
      { r == r } -> std::convertible_to<bool>;
    };

template <class R>
concept CommutativeRing = Ring<R> && R::commutative;

/// Optional membership hook: contexts that can tell whether a value belongs
/// to them expose `contains`.
template <class R>
concept MembershipChecked = Ring<R> && requires(const R& r, const typename R::value_type& a) {
  { r.contains(a) } -> std::convertible_to<bool>;
};

template <Ring R>
typename R::value_type power(const R& ring, typename R::value_type base, std::uint64_t exp) {
  auto result = ring.one();
  while (exp > 0) {
    if (exp & 1U) result = ring.mul(result, base);
    exp >>= 1U;
    if (exp > 0) base = ring.mul(base, base);
  }
  return result;
}

// Dense coefficient sequences, low-to-high, trailing zeros stripped.
namespace coeffs {

template <Ring R>
using Seq = std::vector<typename R::value_type>;

template <Ring R>
void trim(const R& ring, Seq<R>& a) {
  while (!a.empty() && ring.is_zero(a.back())) a.pop_back();
}

template <Ring R>
Seq<R> add(const R& ring, const Seq<R>& a, const Seq<R>& b) {
  const Seq<R>& longer = a.size() >= b.size() ? a : b;
  const Seq<R>& shorter = a.size() >= b.size() ? b : a;
  Seq<R> out = longer;
  for (std::size_t i = 0; i < shorter.size(); ++i) out[i] = ring.add(a[i], b[i]);
  trim(ring, out);
  return out;
}

template <Ring R>
Seq<R> neg(const R& ring, const Seq<R>& a) {
  Seq<R> out;
  out.reserve(a.size());
  for (const auto& c : a) out.push_back(ring.neg(c));
  return out;
}

template <Ring R>
Seq<R> sub(const R& ring, const Seq<R>& a, const Seq<R>& b) {
  Seq<R> out(std::max(a.size(), b.size()), ring.zero());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] = ring.sub(out[i], b[i]);
  trim(ring, out);
  return out;
}

template <Ring R>
Seq<R> mul(const R& ring, const Seq<R>& a, const Seq<R>& b) {
  if (a.empty() || b.empty()) return {};
  Seq<R> out(a.size() + b.size() - 1, ring.zero());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (ring.is_zero(a[i])) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      out[i + j] = ring.add(out[i + j], ring.mul(a[i], b[j]));
    }
  }
  trim(ring, out);
  return out;
}

template <Ring R>
Seq<R> scale(const R& ring, const typename R::value_type& c, const Seq<R>& a) {
  Seq<R> out;
  out.reserve(a.size());
  for (const auto& x : a) out.push_back(ring.mul(c, x));
  trim(ring, out);
  return out;
}

template <Ring R>
bool equal(const R& ring, const Seq<R>& a, const Seq<R>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!ring.equal(a[i], b[i])) return false;
  }
  return true;
}

/// Remainder of `a` modulo a monic `modulus`. Needs no inverses.
template <Ring R>
Seq<R> rem_monic(const R& ring, Seq<R> a, const Seq<R>& modulus) {
  const std::size_t d = modulus.size() - 1;
  trim(ring, a);
  while (a.size() > d) {
    const std::size_t shift = a.size() - 1 - d;
    const auto lead = a.back();
    for (std::size_t i = 0; i <= d; ++i) {
      a[shift + i] = ring.sub(a[shift + i], ring.mul(lead, modulus[i]));
    }
    // the leading coefficient is now exactly zero since modulus is monic
    a.pop_back();
    trim(ring, a);
  }
  return a;
}

}  // namespace coeffs
}  // namespace sprkit

#endif  // SPRKIT_RING_HPP
