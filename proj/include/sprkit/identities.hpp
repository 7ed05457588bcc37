#ifndef SPRKIT_IDENTITIES_HPP
#define SPRKIT_IDENTITIES_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include "sprkit/matrix.hpp"
#include "sprkit/ring_spec.hpp"

namespace sprkit {

inline constexpr std::size_t max_standard_degree = 8;

/// Advances `perm` to its lexicographic successor and flips `sign` by the
/// parity of the change. Returns false after the last permutation.
inline bool next_permutation_signed(std::vector<std::size_t>& perm, int& sign) {
  const std::size_t k = perm.size();
  if (k < 2) return false;
  std::size_t i = k - 1;
  while (i > 0 && perm[i - 1] >= perm[i]) --i;
  if (i == 0) return false;
  std::size_t j = k - 1;
  while (perm[j] <= perm[i - 1]) --j;
  std::swap(perm[i - 1], perm[j]);
  // one swap, then reversing a suffix of length L costs floor(L/2) swaps
  const std::size_t suffix = k - i;
  const std::size_t swaps = 1 + suffix / 2;
  if (swaps % 2 == 1) sign = -sign;
  std::reverse(perm.begin() + static_cast<long>(i), perm.end());
  return true;
}

/// s_k(x_1..x_k) = sum over permutations of sgn(sigma) x_sigma(1) ... x_sigma(k).
template <Ring R>
Matrix<R> standard_identity_eval(std::span<const Matrix<R>> elems) {
  const std::size_t k = elems.size();
  if (k == 0) throw Error(ErrorKind::degree_too_large, "standard polynomial needs at least one argument");
  if (k > max_standard_degree) {
    throw Error(ErrorKind::degree_too_large, "degree " + std::to_string(k) + " exceeds " +
                                                 std::to_string(max_standard_degree));
  }
  const R& ring = elems[0].ring();
  const std::size_t dim = elems[0].dim();
  for (const auto& e : elems) {
    if (e.dim() != dim) throw Error(ErrorKind::dim_mismatch, "standard polynomial arguments differ in dimension");
    if (!(e.ring() == ring)) throw Error(ErrorKind::spec_mismatch, "standard polynomial arguments differ in ring");
  }

  std::vector<std::size_t> perm(k);
  std::iota(perm.begin(), perm.end(), 0);
  int sign = 1;
  // prefix[i] = x_perm[0] ... x_perm[i-1]; only the changed tail is recomputed
  std::vector<Matrix<R>> prefix(k + 1, Matrix<R>::identity(ring, dim));
  std::vector<std::size_t> prev(k, k);
  Matrix<R> acc(ring, dim);
  do {
    std::size_t first_changed = 0;
    while (first_changed < k && prev[first_changed] == perm[first_changed]) ++first_changed;
    for (std::size_t i = first_changed; i < k; ++i) prefix[i + 1] = prefix[i] * elems[perm[i]];
    prev = perm;
    acc = sign > 0 ? acc + prefix[k] : acc - prefix[k];
  } while (next_permutation_signed(perm, sign));
  return acc;
}

template <Ring R>
Matrix<R> standard_identity_eval(const std::vector<Matrix<R>>& elems) {
  return standard_identity_eval(std::span<const Matrix<R>>(elems));
}

struct IdentityReport {
  RingSpec ring;
  std::size_t dim = 0;
  std::size_t degree = 0;
  std::size_t samples = 0;
  bool all_vanish = true;
  std::optional<std::vector<Matrix<DynRing>>> witness;
};

inline Matrix<DynRing> sample_matrix(const RingSpec& spec, std::size_t dim, std::mt19937_64& rng,
                                     std::int64_t bound = 9) {
  std::vector<RingElem> entries;
  entries.reserve(dim * dim);
  for (std::size_t i = 0; i < dim * dim; ++i) entries.push_back(sample_element(spec, rng, bound));
  return Matrix<DynRing>(DynRing(spec), dim, std::move(entries));
}

/// Evaluates s_k on `samples` seeded random k-tuples of m x m matrices and
/// keeps the first non-vanishing tuple.
inline IdentityReport check_identity_on_samples(const RingSpec& ring, std::size_t m, std::size_t k,
                                                std::size_t samples, std::uint64_t seed, std::int64_t bound = 9) {
  if (k == 0 || k > max_standard_degree) {
    throw Error(ErrorKind::degree_too_large, "degree " + std::to_string(k));
  }
  IdentityReport report{ring, m, k, samples, true, std::nullopt};
  std::mt19937_64 rng(seed);
  for (std::size_t s = 0; s < samples; ++s) {
    std::vector<Matrix<DynRing>> tuple;
    tuple.reserve(k);
    for (std::size_t i = 0; i < k; ++i) tuple.push_back(sample_matrix(ring, m, rng, bound));
    if (!standard_identity_eval(tuple).is_zero()) {
      report.all_vanish = false;
      report.witness = std::move(tuple);
      break;
    }
  }
  return report;
}

/// Exhaustive scan over k-tuples of matrix units E_ij (row-major unit order,
/// tuples in lexicographic order). Returns the first tuple with s_k != 0.
inline std::optional<std::vector<Matrix<DynRing>>> search_nonvanishing(const RingSpec& ring, std::size_t m,
                                                                       std::size_t k) {
  if (k == 0 || k > max_standard_degree) {
    throw Error(ErrorKind::degree_too_large, "degree " + std::to_string(k));
  }
  const DynRing r(ring);
  std::vector<Matrix<DynRing>> units;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) units.push_back(Matrix<DynRing>::unit(r, m, i, j));

  std::vector<std::size_t> idx(k, 0);
  while (true) {
    // repeated arguments make s_k vanish, skip them cheaply
    bool distinct = true;
    for (std::size_t a = 0; a < k && distinct; ++a)
      for (std::size_t b = a + 1; b < k && distinct; ++b) distinct = idx[a] != idx[b];
    if (distinct) {
      std::vector<Matrix<DynRing>> tuple;
      for (std::size_t i : idx) tuple.push_back(units[i]);
      if (!standard_identity_eval(tuple).is_zero()) return tuple;
    }
    std::size_t pos = k;
    while (pos > 0 && idx[pos - 1] + 1 == units.size()) idx[--pos] = 0;
    if (pos == 0) return std::nullopt;
    ++idx[pos - 1];
  }
}

}  // namespace sprkit

#endif  // SPRKIT_IDENTITIES_HPP
