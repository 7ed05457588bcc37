#ifndef SPRKIT_LAB_HPP
#define SPRKIT_LAB_HPP

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sprkit/matrix.hpp"
#include "sprkit/parallel.hpp"
#include "sprkit/table_ring.hpp"
#include "sprkit/witness.hpp"

// Exhaustive experiments over matrix rings M_m(S) with S finite.

namespace sprkit::lab {

using FiniteMatrix = Matrix<TableRing>;

inline constexpr std::uint64_t default_budget = std::uint64_t{1} << 20;

/// Number of m x m matrices over `ring`, or BudgetExceeded.
inline std::uint64_t matrix_count(const TableRing& ring, std::size_t m, std::uint64_t budget = default_budget) {
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < m * m; ++i) {
    if (total > budget / ring.order()) {
      throw Error(ErrorKind::budget_exceeded, "M_" + std::to_string(m) + "(" + ring.spec().to_string() +
                                                  ") exceeds the budget of " + std::to_string(budget) + " matrices");
    }
    total *= ring.order();
  }
  return total;
}

/// The index-th matrix in enumeration order: entries row-major, entry (0,0)
/// most significant, each entry in ring enumeration order.
inline FiniteMatrix matrix_at(const TableRing& ring, std::size_t m, std::uint64_t index) {
  std::vector<TableRing::value_type> entries(m * m);
  for (std::size_t k = m * m; k-- > 0;) {
    entries[k] = static_cast<TableRing::value_type>(index % ring.order());
    index /= ring.order();
  }
  return FiniteMatrix(ring, m, std::move(entries));
}

/// A, A^2, A^3, ... is eventually periodic: A^index is the first power on
/// the cycle and the cycle has length `period`.
struct PowerCycle {
  std::uint64_t index;
  std::uint64_t period;
};

/// Floyd's tortoise-and-hare on M -> M A starting from A.
inline PowerCycle power_cycle(const FiniteMatrix& a) {
  auto step = [&a](const FiniteMatrix& m) { return m * a; };
  FiniteMatrix tortoise = step(a);
  FiniteMatrix hare = step(step(a));
  while (!(tortoise == hare)) {
    tortoise = step(tortoise);
    hare = step(step(hare));
  }
  std::uint64_t index = 1;
  tortoise = a;
  while (!(tortoise == hare)) {
    tortoise = step(tortoise);
    hare = step(hare);
    ++index;
  }
  std::uint64_t period = 1;
  hare = step(tortoise);
  while (!(tortoise == hare)) {
    hare = step(hare);
    ++period;
  }
  return {index, period};
}

enum class Side { right, left };

/// Brute force: the first X in enumeration order with A^n = A^(n+1) X
/// (right side) or Y A^(n+1) = A^n (left side).
inline std::optional<FiniteMatrix> witness_search_brute_force(const FiniteMatrix& a, std::uint64_t n, Side side,
                                                              std::uint64_t budget = default_budget) {
  if (n == 0) throw Error(ErrorKind::precondition_failed, "exponent n must be positive");
  const FiniteMatrix an = pow(a, n);
  const FiniteMatrix an1 = an * a;
  const std::uint64_t total = matrix_count(a.ring(), a.dim(), budget);
  for (std::uint64_t i = 0; i < total; ++i) {
    FiniteMatrix x = matrix_at(a.ring(), a.dim(), i);
    if (side == Side::right ? an == an1 * x : an == x * an1) return x;
  }
  return std::nullopt;
}

inline std::optional<FiniteMatrix> right_witness_search(const FiniteMatrix& a, std::uint64_t n) {
  return witness_search_brute_force(a, n, Side::right);
}

inline std::optional<FiniteMatrix> left_witness_search(const FiniteMatrix& a, std::uint64_t n) {
  return witness_search_brute_force(a, n, Side::left);
}

/// Same result as the brute force, found column by column: A^(n+1) X = A^n
/// splits into A^(n+1) x_j = (A^n)_j for each column, so it suffices to scan
/// the q^m vectors once. Taking the first preimage of each column in
/// vector order reproduces the first X in matrix order. The left side works
/// on rows of Y against A^(n+1) acting from the right.
class WitnessFinder {
 public:
  explicit WitnessFinder(const TableRing& ring, std::size_t dim) : ring_(ring), dim_(dim) {
    vectors_ = 1;
    for (std::size_t i = 0; i < dim; ++i) vectors_ *= ring.order();
    first_.assign(vectors_, -1);
    vec_.resize(dim);
    img_.resize(dim);
  }

  std::optional<FiniteMatrix> find(const FiniteMatrix& a, std::uint64_t n, Side side) {
    const FiniteMatrix an = pow(a, n);
    return find_from_powers(an, an * a, side);
  }

  /// With target = A^n and factor = A^(n+1).
  std::optional<FiniteMatrix> find_from_powers(const FiniteMatrix& target, const FiniteMatrix& factor, Side side) {
    const std::size_t m = dim_;
    const std::size_t q = ring_.order();
    std::fill(first_.begin(), first_.end(), -1);
    std::fill(vec_.begin(), vec_.end(), 0);
    for (std::uint64_t code = 0; code < vectors_; ++code) {
      if (code) {
        // increment vec_ as a base-q number, last coordinate least significant
        std::size_t i = m;
        while (i-- > 0) {
          if (++vec_[i] < q) break;
          vec_[i] = 0;
        }
      }
      for (std::size_t i = 0; i < m; ++i) {
        TableRing::value_type acc = 0;
        for (std::size_t k = 0; k < m; ++k) {
          const auto f = side == Side::right ? factor(i, k) : factor(k, i);
          acc = ring_.add(acc, side == Side::right ? ring_.mul(f, vec_[k]) : ring_.mul(vec_[k], f));
        }
        img_[i] = acc;
      }
      const std::uint64_t img = encode(img_);
      if (first_[img] < 0) first_[img] = static_cast<std::int64_t>(code);
    }

    std::vector<TableRing::value_type> out(m * m);
    std::vector<TableRing::value_type> want(m);
    for (std::size_t j = 0; j < m; ++j) {
      for (std::size_t i = 0; i < m; ++i) want[i] = side == Side::right ? target(i, j) : target(j, i);
      const std::int64_t pre = first_[encode(want)];
      if (pre < 0) return std::nullopt;
      std::uint64_t code = static_cast<std::uint64_t>(pre);
      for (std::size_t i = m; i-- > 0;) {
        const auto v = static_cast<TableRing::value_type>(code % q);
        code /= q;
        if (side == Side::right) {
          out[i * m + j] = v;
        } else {
          out[j * m + i] = v;
        }
      }
    }
    return FiniteMatrix(ring_, m, std::move(out));
  }

 private:
  std::uint64_t encode(const std::vector<TableRing::value_type>& v) const {
    std::uint64_t code = 0;
    for (auto x : v) code = code * ring_.order() + x;
    return code;
  }

  TableRing ring_;
  std::size_t dim_;
  std::uint64_t vectors_ = 1;
  std::vector<std::int64_t> first_;
  std::vector<TableRing::value_type> vec_;
  std::vector<TableRing::value_type> img_;
};

struct ExponentWitness {
  std::uint64_t n;
  FiniteMatrix witness;
};

struct ClassificationRecord {
  FiniteMatrix a;
  PowerCycle cycle;
  std::uint64_t checked_up_to;
  std::vector<ExponentWitness> right;  // exponents with a right witness
  std::vector<ExponentWitness> left;   // exponents with a left witness
  bool agrees;
};

/// Right and left strong pi-regularity of A at n = 1 .. min(n_bound, index + 1).
/// The right side always holds at the cycle index (A^index = A^(index+1)
/// A^(period-1)); failing that raises InternalViolation.
inline ClassificationRecord classify(const FiniteMatrix& a, WitnessFinder& finder,
                                     std::optional<std::uint64_t> n_bound = std::nullopt) {
  const PowerCycle cycle = power_cycle(a);
  std::uint64_t bound = cycle.index + 1;
  if (n_bound) bound = std::min(bound, *n_bound);
  ClassificationRecord rec{a, cycle, bound, {}, {}, true};
  FiniteMatrix an = a;
  for (std::uint64_t n = 1; n <= bound; ++n) {
    const FiniteMatrix an1 = an * a;
    auto r = finder.find_from_powers(an, an1, Side::right);
    auto l = finder.find_from_powers(an, an1, Side::left);
    if (r) {
      if (!(an == an1 * *r)) throw Error(ErrorKind::internal_violation, "stored right witness fails");
      rec.right.push_back({n, std::move(*r)});
    }
    if (l) {
      if (!(an == *l * an1)) throw Error(ErrorKind::internal_violation, "stored left witness fails");
      rec.left.push_back({n, std::move(*l)});
    }
    if (r.has_value() != l.has_value()) rec.agrees = false;
    an = an1;
  }
  if (bound >= cycle.index && (rec.right.empty() || rec.right.front().n > cycle.index)) {
    throw Error(ErrorKind::internal_violation, "right witness first appears beyond the power-cycle index for " +
                                                   a.to_string());
  }
  return rec;
}

inline std::vector<ClassificationRecord> classify_all(const RingSpec& spec, std::size_t m,
                                                      std::optional<std::uint64_t> n_bound = std::nullopt,
                                                      std::size_t workers = default_workers(),
                                                      std::uint64_t budget = default_budget) {
  const TableRing ring(spec);
  const std::uint64_t total = matrix_count(ring, m, budget);
  auto chunks = parallel_chunks(total, workers, [&](std::uint64_t begin, std::uint64_t end) {
    WitnessFinder finder(ring, m);
    std::vector<ClassificationRecord> out;
    out.reserve(end - begin);
    for (std::uint64_t i = begin; i < end; ++i) out.push_back(classify(matrix_at(ring, m, i), finder, n_bound));
    return out;
  });
  std::vector<ClassificationRecord> records;
  records.reserve(total);
  for (auto& c : chunks)
    for (auto& r : c) records.push_back(std::move(r));
  return records;
}

struct TransposeClosureReport {
  RingSpec ring;
  std::size_t dim = 0;
  std::uint64_t n = 0;
  std::uint64_t total = 0;
  bool holds = true;
  std::vector<FiniteMatrix> failures;
};

struct CpCounterexample {
  FiniteMatrix a;
  bool right;
  bool left;
};

struct CpReport {
  RingSpec ring;
  std::size_t dim = 0;
  std::uint64_t n = 0;
  std::uint64_t total = 0;
  std::uint64_t both = 0;
  std::uint64_t right_only = 0;
  std::uint64_t left_only = 0;
  std::uint64_t neither = 0;
  std::uint64_t certified = 0;
  std::uint64_t pipeline_failures = 0;
  std::vector<CpCounterexample> counterexamples;
  TransposeClosureReport transpose;
  double wall_seconds = 0;

  bool ok() const { return counterexamples.empty() && pipeline_failures == 0; }
};

struct CpOptions {
  std::size_t workers = default_workers();
  std::uint64_t budget = default_budget;
  /// feed every right strongly pi-regular A through right_to_left_certificate
  bool cross_validate = true;
};

/// Compares right and left strong pi-regularity at exponent n for every
/// m x m matrix over a finite ring, checks transpose closure on the way, and
/// cross-validates the right-to-left pipeline on every right witness found.
inline CpReport cp_report(const RingSpec& spec, std::size_t m, std::uint64_t n, const CpOptions& options = {}) {
  if (n == 0) throw Error(ErrorKind::precondition_failed, "exponent n must be positive");
  const auto started = std::chrono::steady_clock::now();
  const TableRing ring(spec);
  const std::uint64_t total = matrix_count(ring, m, options.budget);

  struct Chunk {
    std::uint64_t both = 0, right_only = 0, left_only = 0, neither = 0, certified = 0, pipeline_failures = 0;
    std::vector<CpCounterexample> counterexamples;
    std::vector<FiniteMatrix> transpose_failures;
  };

  auto chunks = parallel_chunks(total, options.workers, [&](std::uint64_t begin, std::uint64_t end) {
    Chunk out;
    WitnessFinder finder(ring, m);
    for (std::uint64_t i = begin; i < end; ++i) {
      const FiniteMatrix a = matrix_at(ring, m, i);
      const FiniteMatrix an = pow(a, n);
      const FiniteMatrix an1 = an * a;
      auto x = finder.find_from_powers(an, an1, Side::right);
      const bool left = finder.find_from_powers(an, an1, Side::left).has_value();
      const bool right = x.has_value();
      const FiniteMatrix at = a.transpose();
      const FiniteMatrix atn = pow(at, n);
      const bool right_t = finder.find_from_powers(atn, atn * at, Side::right).has_value();

      if (right && left) ++out.both;
      if (right && !left) ++out.right_only;
      if (!right && left) ++out.left_only;
      if (!right && !left) ++out.neither;
      if (right != left) out.counterexamples.push_back({a, right, left});
      if (right != right_t) out.transpose_failures.push_back(a);

      if (right && options.cross_validate) {
        bool good = false;
        try {
          const auto cert = right_to_left_certificate(RightWitnessInstance<TableRing>(a, n, *x));
          good = verify_certificate(cert).verified;
        } catch (const Error&) {
          good = false;
        }
        if (good) {
          ++out.certified;
        } else {
          ++out.pipeline_failures;
        }
      }
    }
    return out;
  });

  CpReport report;
  report.ring = spec;
  report.dim = m;
  report.n = n;
  report.total = total;
  report.transpose.ring = spec;
  report.transpose.dim = m;
  report.transpose.n = n;
  report.transpose.total = total;
  for (auto& c : chunks) {
    report.both += c.both;
    report.right_only += c.right_only;
    report.left_only += c.left_only;
    report.neither += c.neither;
    report.certified += c.certified;
    report.pipeline_failures += c.pipeline_failures;
    for (auto& ce : c.counterexamples) report.counterexamples.push_back(std::move(ce));
    for (auto& f : c.transpose_failures) report.transpose.failures.push_back(std::move(f));
  }
  report.transpose.holds = report.transpose.failures.empty();
  report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return report;
}

inline CpReport cp_report(const Integer& k, std::size_t m, std::uint64_t n, const CpOptions& options = {}) {
  return cp_report(RingSpec::integers_mod(k), m, n, options);
}

/// right-SR(A, n) <=> right-SR(A^T, n) for every A; by transposition this is
/// the same statement as right-SR <=> left-SR.
inline TransposeClosureReport transpose_closure_check(const RingSpec& spec, std::size_t m, std::uint64_t n,
                                                      std::size_t workers = default_workers(),
                                                      std::uint64_t budget = default_budget) {
  if (n == 0) throw Error(ErrorKind::precondition_failed, "exponent n must be positive");
  const TableRing ring(spec);
  const std::uint64_t total = matrix_count(ring, m, budget);
  auto chunks = parallel_chunks(total, workers, [&](std::uint64_t begin, std::uint64_t end) {
    WitnessFinder finder(ring, m);
    std::vector<FiniteMatrix> failures;
    for (std::uint64_t i = begin; i < end; ++i) {
      const FiniteMatrix a = matrix_at(ring, m, i);
      const FiniteMatrix at = a.transpose();
      const bool r = finder.find(a, n, Side::right).has_value();
      const bool rt = finder.find(at, n, Side::right).has_value();
      if (r != rt) failures.push_back(a);
    }
    return failures;
  });
  TransposeClosureReport report{spec, m, n, total, true, {}};
  for (auto& c : chunks)
    for (auto& f : c) report.failures.push_back(std::move(f));
  report.holds = report.failures.empty();
  return report;
}

}  // namespace sprkit::lab

#endif  // SPRKIT_LAB_HPP
