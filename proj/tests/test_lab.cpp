#include <gtest/gtest.h>

#include "oracles.hpp"
#include "sprkit/json_io.hpp"
#include "sprkit/lab.hpp"

using namespace sprkit;
using namespace sprkit::lab;

namespace {

FiniteMatrix fm(const TableRing& ring, const char* text) { return lower(ring, parse_matrix(text, ring.spec())); }

}  // namespace

TEST(MatrixEnumeration, OrderMatchesOracle) {
  const auto spec = RingSpec::integers_mod(3);
  const TableRing ring(spec);
  const auto all = oracle::all_matrices(spec, 2);
  ASSERT_EQ(matrix_count(ring, 2), all.size());
  for (std::uint64_t i = 0; i < all.size(); ++i) ASSERT_EQ(lift(matrix_at(ring, 2, i)), all[i]);
  EXPECT_THROW(matrix_count(TableRing(RingSpec::integers_mod(64)), 3), Error);
}

TEST(WitnessSearch, Examples) {
  const TableRing z4(RingSpec::integers_mod(4));
  const auto id = FiniteMatrix::identity(z4, 2);
  EXPECT_EQ(right_witness_search(id, 1), id);
  EXPECT_FALSE(right_witness_search(fm(z4, "[[0,1],[0,0]]"), 1).has_value());
  const auto a = fm(z4, "[[2,0],[0,1]]");
  const auto x = right_witness_search(a, 2);
  ASSERT_TRUE(x.has_value());
  EXPECT_EQ(pow(a, 2), pow(a, 3) * *x);
  EXPECT_EQ(pow(a, 2), pow(a, 3) * id);
}

TEST(WitnessSearch, BruteForceMatchesDynOracle) {
  const auto spec = RingSpec::integers_mod(3);
  const TableRing ring(spec);
  const auto universe = oracle::all_matrices(spec, 2);
  for (std::uint64_t i = 0; i < universe.size(); i += 7) {
    const auto a = matrix_at(ring, 2, i);
    for (std::uint64_t n = 1; n <= 2; ++n) {
      const auto r = right_witness_search(a, n);
      const auto l = left_witness_search(a, n);
      const auto ro = oracle::brute_witness(lift(a), n, true, universe);
      const auto lo = oracle::brute_witness(lift(a), n, false, universe);
      ASSERT_EQ(r.has_value(), ro.has_value());
      ASSERT_EQ(l.has_value(), lo.has_value());
      if (r) {
        ASSERT_EQ(lift(*r), *ro);
      }
      if (l) {
        ASSERT_EQ(lift(*l), *lo);
      }
    }
  }
}

// The column-wise finder must return the same first witness as the scan.
TEST(WitnessFinder, SameFirstWitnessAsBruteForce) {
  for (const char* r : {"zmod:4", "zmod:6", "quot:poly:zmod:2:t:t^2"}) {
    const TableRing ring(parse_ring_spec(r));
    WitnessFinder finder(ring, 2);
    const auto total = matrix_count(ring, 2);
    for (std::uint64_t i = 0; i < total; i += (total > 500 ? 5 : 1)) {
      const auto a = matrix_at(ring, 2, i);
      for (std::uint64_t n = 1; n <= 3; ++n) {
        ASSERT_EQ(finder.find(a, n, Side::right), right_witness_search(a, n)) << r << " " << a.to_string();
        ASSERT_EQ(finder.find(a, n, Side::left), left_witness_search(a, n)) << r << " " << a.to_string();
      }
    }
  }
  const TableRing z2(RingSpec::integers_mod(2));
  WitnessFinder finder3(z2, 3);
  for (std::uint64_t i = 0; i < matrix_count(z2, 3); i += 3) {
    const auto a = matrix_at(z2, 3, i);
    ASSERT_EQ(finder3.find(a, 1, Side::right), right_witness_search(a, 1));
    ASSERT_EQ(finder3.find(a, 1, Side::left), left_witness_search(a, 1));
  }
}

TEST(PowerCycle, DetectsIndexAndPeriod) {
  const TableRing z4(RingSpec::integers_mod(4));
  EXPECT_EQ(power_cycle(fm(z4, "[[0,1],[0,0]]")).index, 2u);  // A, 0, 0, ...
  const auto d = power_cycle(fm(z4, "[[2,0],[0,1]]"));
  EXPECT_EQ(d.index, 2u);
  EXPECT_EQ(d.period, 1u);
  const auto swap = power_cycle(fm(z4, "[[0,1],[1,0]]"));
  EXPECT_EQ(swap.index, 1u);
  EXPECT_EQ(swap.period, 2u);
  // index/period against a direct scan
  const auto total = matrix_count(z4, 2);
  for (std::uint64_t i = 0; i < total; ++i) {
    const auto a = matrix_at(z4, 2, i);
    const auto c = power_cycle(a);
    std::vector<FiniteMatrix> seq{a};
    while (true) {
      const auto next = seq.back() * a;
      const auto it = std::find(seq.begin(), seq.end(), next);
      if (it != seq.end()) {
        ASSERT_EQ(c.index, static_cast<std::uint64_t>(it - seq.begin()) + 1);
        ASSERT_EQ(c.period, static_cast<std::uint64_t>(seq.end() - it));
        break;
      }
      seq.push_back(next);
    }
  }
}

TEST(Classify, Examples) {
  EXPECT_EQ(classify_all(RingSpec::integers_mod(4), 2).size(), 256u);
  const auto z9 = classify_all(RingSpec::integers_mod(9), 2);
  EXPECT_EQ(z9.size(), 6561u);

  const TableRing z4(RingSpec::integers_mod(4));
  WitnessFinder finder(z4, 2);
  const auto rec = classify(fm(z4, "[[0,1],[0,0]]"), finder);
  EXPECT_TRUE(rec.agrees);
  ASSERT_FALSE(rec.right.empty());
  ASSERT_FALSE(rec.left.empty());
  EXPECT_EQ(rec.right.front().n, 2u);
  EXPECT_EQ(rec.left.front().n, 2u);
  EXPECT_TRUE(rec.right.front().witness.is_zero());  // first matrix in order
}

TEST(Classify, RecordsConsistent) {
  for (int k : {4, 9}) {
    for (const auto& rec : classify_all(RingSpec::integers_mod(k), 2)) {
      ASSERT_TRUE(rec.agrees);
      for (const auto& w : rec.right) ASSERT_EQ(pow(rec.a, w.n), pow(rec.a, w.n + 1) * w.witness);
      for (const auto& w : rec.left) ASSERT_EQ(pow(rec.a, w.n), w.witness * pow(rec.a, w.n + 1));
      ASSERT_FALSE(rec.right.empty());
      ASSERT_LE(rec.right.front().n, rec.cycle.index);
      // once right-SR, always right-SR
      for (std::size_t i = 1; i < rec.right.size(); ++i) ASSERT_EQ(rec.right[i].n, rec.right[i - 1].n + 1);
    }
  }
}

TEST(Classify, BoundRespected) {
  const auto recs = classify_all(RingSpec::integers_mod(4), 2, 1);
  for (const auto& r : recs) EXPECT_LE(r.checked_up_to, 1u);
}

TEST(Classify, BudgetExceeded) {
  try {
    classify_all(RingSpec::integers_mod(64), 2, std::nullopt, 1, 1000);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::budget_exceeded);
  }
  EXPECT_THROW(classify_all(RingSpec::integers(), 2), Error);
}

TEST(CpReport, ZeroCounterexamples) {
  for (int k : {4, 9}) {
    const auto r = cp_report(Integer(k), 2, 1);
    EXPECT_TRUE(r.counterexamples.empty()) << k;
    EXPECT_EQ(r.total, static_cast<std::uint64_t>(k * k * k * k));
    EXPECT_EQ(r.both + r.neither + r.right_only + r.left_only, r.total);
    EXPECT_EQ(r.certified, r.both);
    EXPECT_EQ(r.pipeline_failures, 0u);
    EXPECT_TRUE(r.transpose.holds);
    EXPECT_TRUE(r.ok());
  }
}

TEST(CpReport, CountsMatchOracleOverZ4) {
  const auto spec = RingSpec::integers_mod(4);
  const TableRing ring(spec);
  std::uint64_t right = 0;
  for (std::uint64_t i = 0; i < 256; ++i)
    if (right_witness_search(matrix_at(ring, 2, i), 1)) ++right;
  const auto r = cp_report(spec, 2, 1);
  EXPECT_EQ(r.both, right);
}

TEST(CpReport, OtherRingsAndExponents) {
  for (const char* r : {"quot:poly:zmod:2:t:t^2", "zmod:6", "zmod:8"}) {
    for (std::uint64_t n = 1; n <= 2; ++n) {
      const auto rep = cp_report(parse_ring_spec(r), 2, n);
      EXPECT_TRUE(rep.ok()) << r;
      EXPECT_TRUE(rep.transpose.holds) << r;
    }
  }
  const auto m3 = cp_report(RingSpec::integers_mod(2), 3, 1);
  EXPECT_TRUE(m3.ok());
  EXPECT_EQ(m3.total, 512u);
}

TEST(TransposeClosure, Examples) {
  const auto r = transpose_closure_check(RingSpec::integers_mod(4), 2, 1);
  EXPECT_TRUE(r.holds);
  EXPECT_EQ(r.total, 256u);
  const TableRing z4(RingSpec::integers_mod(4));
  const auto d = fm(z4, "[[2,0],[0,1]]");
  EXPECT_EQ(d.transpose(), d);
  const auto nil = fm(z4, "[[0,1],[0,0]]");
  EXPECT_FALSE(right_witness_search(nil, 1).has_value());
  EXPECT_FALSE(right_witness_search(nil.transpose(), 1).has_value());
}

TEST(TransposeClosure, AgreesWithCpReport) {
  for (int k : {4, 9}) {
    const auto spec = RingSpec::integers_mod(k);
    for (std::uint64_t n = 1; n <= 2; ++n) {
      const auto t = transpose_closure_check(spec, 2, n);
      const auto c = cp_report(spec, 2, n);
      EXPECT_EQ(t.holds, c.counterexamples.empty());
      EXPECT_EQ(t.holds, c.transpose.holds);
    }
  }
}

TEST(Determinism, IndependentOfWorkerCount) {
  const auto spec = RingSpec::integers_mod(9);
  std::string first;
  for (std::size_t workers : {1, 2, 3, 8}) {
    CpOptions o;
    o.workers = workers;
    const auto text = canonical_dump(cp_report_to_json(cp_report(spec, 2, 1, o)));
    if (first.empty()) first = text;
    EXPECT_EQ(text, first) << workers;
  }
  std::string records_first;
  for (std::size_t workers : {1, 4}) {
    std::string lines;
    for (const auto& r : classify_all(RingSpec::integers_mod(4), 2, std::nullopt, workers))
      lines += classification_record_to_json(r).dump() + "\n";
    if (records_first.empty()) records_first = lines;
    EXPECT_EQ(lines, records_first);
  }
}

TEST(Parallel, ChunksInOrderAndPropagatesErrors) {
  const auto chunks = parallel_chunks(1000, 4, [](std::uint64_t b, std::uint64_t e) {
    return std::make_pair(b, e);
  });
  std::uint64_t expect = 0;
  for (const auto& [b, e] : chunks) {
    EXPECT_EQ(b, expect);
    expect = e;
  }
  EXPECT_EQ(expect, 1000u);
  EXPECT_THROW(parallel_chunks(100, 3,
                               [](std::uint64_t b, std::uint64_t) {
                                 if (b > 50) throw Error(ErrorKind::internal_violation, "boom");
                                 return 0;
                               }),
               Error);
  EXPECT_TRUE(parallel_chunks(0, 2, [](std::uint64_t, std::uint64_t) { return 1; }).empty());
}
