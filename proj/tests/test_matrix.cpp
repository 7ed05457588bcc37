#include <gtest/gtest.h>

#include "oracles.hpp"
#include "sprkit/free_algebra.hpp"
#include "sprkit/parse.hpp"

using namespace sprkit;
using oracle::DMat;

namespace {
DMat lit(const char* text, const char* spec) { return parse_matrix(text, parse_ring_spec(spec)); }
}  // namespace

TEST(MatrixArithmetic, Examples) {
  const auto a = lit("[[1,2],[3,4]]", "int");
  EXPECT_EQ(DMat::identity(a.ring(), 2) * a, a);
  EXPECT_EQ(pow(lit("[[2,0],[0,1]]", "zmod:4"), 2), lit("[[0,0],[0,1]]", "zmod:4"));
  EXPECT_TRUE(pow(lit("[[0,1],[0,0]]", "int"), 2).is_zero());
  EXPECT_EQ(pow(a, 0), DMat::identity(a.ring(), 2));
}

TEST(MatrixArithmetic, Operations) {
  const auto a = lit("[[1,2],[3,4]]", "int");
  const auto b = lit("[[0,-1],[5,2]]", "int");
  EXPECT_EQ(a + b, lit("[[1,1],[8,6]]", "int"));
  EXPECT_EQ(a - b, lit("[[1,3],[-2,2]]", "int"));
  EXPECT_EQ(-a, lit("[[-1,-2],[-3,-4]]", "int"));
  EXPECT_EQ(a * b, lit("[[10,3],[20,5]]", "int"));
  EXPECT_EQ(scale(RingElem::from_integer(RingSpec::integers(), 3), a), lit("[[3,6],[9,12]]", "int"));
  EXPECT_EQ(a.transpose(), lit("[[1,3],[2,4]]", "int"));
  EXPECT_EQ(pow(a, 3), a * a * a);
  EXPECT_EQ(a.to_string(), "[[1,2],[3,4]]");
}

TEST(MatrixArithmetic, Errors) {
  const auto a = lit("[[1,2],[3,4]]", "int");
  try {
    (void)(a * lit("[[1]]", "int"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::dim_mismatch);
  }
  try {
    (void)(a + lit("[[1,2],[3,4]]", "zmod:5"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::spec_mismatch);
  }
  EXPECT_THROW(DMat(DynRing(RingSpec::integers()), 0), Error);
  EXPECT_THROW(DMat(DynRing(RingSpec::integers()), 2, {RingElem::one(RingSpec::integers())}), Error);
  // entry from a different ring
  const auto z5 = RingSpec::integers_mod(5);
  EXPECT_THROW(DMat(DynRing(RingSpec::integers()), 1, {RingElem::one(z5)}), Error);
}

TEST(MatrixArithmetic, RingLawsOnSamples) {
  std::mt19937_64 rng(99);
  for (const char* text : {"int", "zmod:12", "quot:poly:zmod:3:t:t^2"}) {
    const auto spec = parse_ring_spec(text);
    for (int i = 0; i < 100; ++i) {
      const std::size_t m = 1 + i % 3;
      const auto a = oracle::random_matrix(spec, m, rng);
      const auto b = oracle::random_matrix(spec, m, rng);
      const auto c = oracle::random_matrix(spec, m, rng);
      ASSERT_EQ((a * b) * c, a * (b * c));
      ASSERT_EQ(a * (b + c), a * b + a * c);
      ASSERT_EQ((a * b).transpose(), b.transpose() * a.transpose());
    }
  }
}

TEST(MatrixParse, Literals) {
  const auto spec = parse_ring_spec("quot:poly:zmod:3:t:t^2");
  const auto m = parse_matrix("[[1+t, 2], [t, 0]]", spec);
  EXPECT_EQ(m(0, 0), parse_element("t+1", spec));
  EXPECT_EQ(parse_matrix(m.to_string(), spec), m);
  for (const char* bad : {"[[1,2],[3]]", "[1,2]", "[[1,2],[3,4]", "[[1,2,3],[4,5,6]]", "[[x]]", ""}) {
    EXPECT_THROW(parse_matrix(bad, parse_ring_spec("int")), Error) << bad;
  }
}

TEST(MatrixNoncommutative, ProductKeepsEntryOrder) {
  using P = NCPolynomial;
  const Matrix<FreeAlgebra> a(FreeAlgebra{}, 1, {P::monomial("a")});
  const Matrix<FreeAlgebra> w(FreeAlgebra{}, 1, {P::monomial("w")});
  EXPECT_EQ((a * w)(0, 0), P::monomial("aw"));
  EXPECT_EQ((w * a)(0, 0), P::monomial("wa"));
}
