#include <gtest/gtest.h>

#include "latred/reference.hpp"
#include "latred/svp_oracle.hpp"
#include "test_support.hpp"

namespace latred {
namespace {

using testing::basis;
using testing::ints;
using testing::q;
using testing::vec;

TEST(EnumerateShortestTest, Examples) {
  EXPECT_EQ(enumerate_shortest(LatticeBasis::identity(3)).coords, vec({"1", "0", "0"}));
  const auto v = enumerate_shortest(basis({vec({"2", "0"}), vec({"1", "2"})}));
  EXPECT_EQ(norm_sq(v.coords), 4);
  EXPECT_EQ(v.coeffs, ints({1, 0}));
  EXPECT_EQ(norm_sq(enumerate_shortest(basis({vec({"1", "0"}), vec({"5", "1"})})).coords), 1);
  // (1/2,1/2) and (1/2,-1/2) tie at norm^2 1/2.
  EXPECT_EQ(enumerate_shortest(basis({vec({"1", "0"}), vec({"1/2", "1/2"})})).coords, vec({"1/2", "1/2"}));
}

TEST(EnumerateShortestTest, RespectsDimensionLimit) {
  EXPECT_THROW(enumerate_shortest(LatticeBasis::identity(4), 3), std::invalid_argument);
}

TEST(EnumerateShortestTest, MatchesReferenceMinima) {
  testing::TestRng rng(6);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = static_cast<std::size_t>(rng.uniform(2, 4));
    const auto b = testing::random_basis(rng, n, n, 10);
    const auto v = enumerate_shortest(b);
    EXPECT_EQ(b.matrix().apply(v.coeffs), v.coords);
    EXPECT_TRUE(is_elementary(v));
    EXPECT_EQ(norm_sq(v.coords), successive_minima(b)[0]);
    EXPECT_LE(norm_sq(v.coords), testing::box_shortest_sq(b, 3));
  }
}

TEST(EnumerateShortVectorsTest, ListsOnePerSignPair) {
  const auto all = enumerate_short_vectors(LatticeBasis::identity(2), Rational(2));
  ASSERT_EQ(all.size(), 4u);
  // Lexicographic: (0,1), (1,-1), (1,0), (1,1).
  EXPECT_EQ(all[0].coeffs, ints({0, 1}));
  EXPECT_EQ(all[1].coeffs, ints({1, -1}));
  EXPECT_EQ(all[2].coeffs, ints({1, 0}));
  EXPECT_EQ(all[3].coeffs, ints({1, 1}));
}

TEST(OracleQueryTest, Examples) {
  const auto id2 = LatticeBasis::identity(2);
  const auto exact = oracle_query(OracleSpec::exact(), id2);
  EXPECT_EQ(norm_sq(exact.vector.coords), 1);
  EXPECT_EQ(exact.gamma_sq, 1);

  const auto adv = oracle_query(OracleSpec::adversarial(Rational(2), 0), id2);
  EXPECT_EQ(norm_sq(adv.vector.coords), 2);
  EXPECT_TRUE(is_elementary(adv.vector));
  EXPECT_EQ(adv.gamma_sq, 4);

  const auto skew = basis({vec({"1", "0"}), vec({"5", "1"})});
  const auto via_lll = oracle_query(OracleSpec::lll(2), skew);
  EXPECT_EQ(norm_sq(via_lll.vector.coords), 1);
  EXPECT_EQ(via_lll.gamma_sq, 2);
}

TEST(OracleQueryTest, ContractOnRandomBases) {
  testing::TestRng rng(12);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = static_cast<std::size_t>(rng.uniform(2, 4));
    const auto b = testing::random_basis(rng, n, n, 8);
    const Rational lambda1_sq = successive_minima(b)[0];
    for (const auto& spec : {OracleSpec::exact(), OracleSpec::lll(n),
                             OracleSpec::adversarial(q("3/2"), static_cast<std::uint64_t>(trial)),
                             OracleSpec::adversarial(Rational(2), 7)}) {
      const auto result = oracle_query(spec, b);
      EXPECT_FALSE(result.vector.coords.is_zero());
      EXPECT_TRUE(is_elementary(result.vector));
      EXPECT_EQ(b.matrix().apply(result.vector.coeffs), result.vector.coords);
      EXPECT_LE(norm_sq(result.vector.coords), result.gamma_sq * lambda1_sq) << spec.to_string();
    }
  }
}

TEST(OracleQueryTest, AdversarialIsSeedDeterministic) {
  testing::TestRng rng(1);
  const auto b = testing::random_basis(rng, 3, 3, 6);
  const auto spec = OracleSpec::adversarial(Rational(2), 99);
  EXPECT_EQ(oracle_query(spec, b).vector, oracle_query(spec, b).vector);
}

TEST(OracleSpecTest, ParseAndFormat) {
  EXPECT_EQ(OracleSpec::parse("exact", 3), OracleSpec::exact());
  EXPECT_EQ(OracleSpec::parse("lll", 3).gamma_sq, 4);
  const auto adv = OracleSpec::parse("adversarial:3/2:17", 3);
  EXPECT_EQ(adv.gamma_sq, q("9/4"));
  EXPECT_EQ(adv.seed, 17u);
  EXPECT_EQ(adv.to_string(), "adversarial:3/2:17");
  EXPECT_THROW(OracleSpec::parse("adversarial:1/2:1", 3), std::invalid_argument);
  EXPECT_THROW(OracleSpec::parse("adversarial:2", 3), std::invalid_argument);
  EXPECT_THROW(OracleSpec::parse("adversarial:2:x", 3), std::invalid_argument);
  EXPECT_THROW(OracleSpec::parse("bkz", 3), std::invalid_argument);
}

TEST(OracleSpecTest, ExponentialGate) {
  EXPECT_TRUE(gamma_below_exponential(Rational(15), 2));
  EXPECT_FALSE(gamma_below_exponential(Rational(16), 2));
  EXPECT_TRUE(gamma_below_exponential(OracleSpec::lll(6).gamma_sq, 6));
}

}  // namespace
}  // namespace latred
