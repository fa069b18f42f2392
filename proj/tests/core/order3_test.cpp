#include "mvg/core/order3.hpp"

#include <gtest/gtest.h>

#include "../support/oracles.hpp"
#include "mvg/core/axioms.hpp"
#include "mvg/core/error.hpp"

namespace mvg {
namespace {

using Nested = std::vector<std::vector<std::vector<std::int64_t>>>;

Nested nested(const MultivaluedGroup& g) {
  const std::size_t k = g.order();
  Nested t(k, std::vector<std::vector<std::int64_t>>(k));
  for (Element x = 0; x < k; ++x)
    for (Element y = 0; y < k; ++y) {
      auto r = g.row(x, y);
      t[x][y].assign(r.begin(), r.end());
    }
  return t;
}

TEST(BuildType1Test, PetersenGoldenTable) {
  auto g = build_type1(6, 2, 1, 0);
  EXPECT_EQ(product(g, 1, 1), (Multiset{{0, 2}, {2, 4}}));
  EXPECT_EQ(product(g, 2, 2), (Multiset{{0, 1}, {1, 2}, {2, 3}}));
  EXPECT_EQ(product(g, 1, 2), (Multiset{{1, 2}, {2, 4}}));
  EXPECT_EQ(product(g, 2, 1), (Multiset{{1, 2}, {2, 4}}));
}

TEST(BuildType1Test, MatchesPentagonCosetGroup) {
  auto g = build_type1(2, 1, 1, 0);
  EXPECT_EQ(product(g, 1, 1), (Multiset{{0, 1}, {2, 1}}));
  EXPECT_EQ(product(g, 2, 2), (Multiset{{0, 1}, {1, 1}}));
  EXPECT_EQ(product(g, 1, 2), (Multiset{{1, 1}, {2, 1}}));
  EXPECT_EQ(nested(g), testing::brute_force_cyclic_coset(5, {1, 4}));
}

TEST(BuildType1Test, NonIntegralParameters) {
  EXPECT_THROW(build_type1(6, 4, 1, 0), ParameterError);
  EXPECT_THROW(build_type1(0, 1, 1, 0), ParameterError);
  EXPECT_THROW(build_type1(3, 2, 1, 2), ParameterError);
}

TEST(BuildType1Test, UncorrectedDiagonalFormulaBreaksAxioms) {
  // Petersen parameters with m[y][y][x] = r * a(x,y) = 1 instead of
  // r * (n - a(x,y)) = 2.
  auto g = MultivaluedGroup::from_nested(6, 0, {0, 1, 2},
                                         {{{6, 0, 0}, {0, 6, 0}, {0, 0, 6}},
                                          {{0, 6, 0}, {2, 0, 4}, {0, 2, 4}},
                                          {{0, 0, 6}, {0, 2, 4}, {1, 1, 4}}});
  auto r = full_report(g);
  EXPECT_FALSE(r.associative);
  EXPECT_FALSE(r.reciprocity_holds);
  EXPECT_FALSE(testing::naive_multiset_associative(g));
}

TEST(BuildType1Test, SweepOnlyEmitsVerifiedGroups) {
  // Every integral parameter set turns out to be associative.
  int built = 0, rejected = 0;
  for (std::int64_t n = 1; n <= 12; ++n)
    for (std::int64_t m1 = 1; m1 <= n; ++m1)
      for (std::int64_t m2 = 1; m2 <= n; ++m2)
        for (std::int64_t a = 0; a + m1 <= n; ++a) {
          try {
            auto g = build_type1(n, m1, m2, a);
            ++built;
            EXPECT_TRUE(testing::naive_multiset_associative(g));
            EXPECT_TRUE(check_reciprocity(g));
            EXPECT_EQ(g.unit_multiplicity(1), m1);
            EXPECT_EQ(g.unit_multiplicity(2), m2);
            EXPECT_EQ(g.m(1, 1, 1), a);
          } catch (const ParameterError&) {
          } catch (const NotAGroupError&) {
            ++rejected;
          }
        }
  EXPECT_GT(built, 100);
  EXPECT_EQ(rejected, 0);
}

TEST(BuildType2Test, XOneMatchesSevenElementCoset) {
  auto g = build_type2(3, 1);
  EXPECT_EQ(product(g, 1, 1), (Multiset{{1, 1}, {2, 2}}));
  EXPECT_EQ(nested(g), testing::brute_force_cyclic_coset(7, {1, 2, 4}));
}

TEST(BuildType2Test, OneValuedIsCyclic) {
  auto g = build_type2(1, 0);
  EXPECT_EQ(product(g, 1, 1), (Multiset{{2, 1}}));
  EXPECT_EQ(product(g, 1, 2), (Multiset{{0, 1}}));
  EXPECT_EQ(product(g, 2, 2), (Multiset{{1, 1}}));
}

TEST(BuildType2Test, RangeChecks) {
  EXPECT_THROW(build_type2(4, 3), ParameterError);
  EXPECT_THROW(build_type2(4, -1), ParameterError);
  // 2a = n leaves no identity in x*y.
  EXPECT_THROW(build_type2(4, 2), NotAGroupError);
}

TEST(BuildType2Test, AssociativeWheneverInverseExists) {
  for (std::int64_t n = 1; n <= 15; ++n)
    for (std::int64_t a = 0; 2 * a < n; ++a) {
      auto g = build_type2(n, a);
      EXPECT_TRUE(testing::naive_multiset_associative(g)) << n << " " << a;
    }
}

TEST(BuildXkTest, SmallCases) {
  EXPECT_EQ(build_xk(1), build_type2(3, 1));
  EXPECT_EQ(build_xk(0), build_type2(1, 0));
  auto g = build_xk(2);
  EXPECT_EQ(product(g, 1, 2), (Multiset{{0, 1}, {1, 2}, {2, 2}}));
  std::vector<int> residues = {1, 3, 4, 5, 9};
  EXPECT_EQ(nested(g), testing::brute_force_cyclic_coset(11, residues));
  EXPECT_THROW(build_xk(-1), ParameterError);
}

TEST(SignatureTest, Examples) {
  auto sym = Signature::Kind::kSymmetricStar;
  auto petersen = signature(build_type1(6, 2, 1, 0));
  EXPECT_EQ(petersen.kind, sym);
  EXPECT_EQ(petersen.ratios, (std::vector<Ratio>{Ratio(1, 3), Ratio(1, 6), Ratio(0)}));

  auto x1 = signature(build_xk(1));
  EXPECT_EQ(x1.kind, Signature::Kind::kSwapStar);
  EXPECT_EQ(x1.ratios, (std::vector<Ratio>{Ratio(1, 3)}));

  EXPECT_EQ(signature(build_type1(12, 4, 2, 0)), petersen);
}

TEST(SignatureTest, CanonicalOrderIgnoresLabeling) {
  auto g = build_type1(6, 2, 1, 0);
  auto swapped = relabel(g, {0, 2, 1});
  EXPECT_EQ(signature(swapped), signature(g));
  EXPECT_EQ(canonical_pair(swapped), (std::pair<Element, Element>{2, 1}));
}

TEST(SignatureTest, Preconditions) {
  std::vector<std::int64_t> one = {1};
  EXPECT_THROW(signature(MultivaluedGroup::from_table(1, 0, {0}, one)), UnsupportedError);
}

}  // namespace
}  // namespace mvg
