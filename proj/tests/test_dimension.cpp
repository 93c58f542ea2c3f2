#include <gtest/gtest.h>

#include <random>

#include "corpus.hpp"
#include "posetdim/constructions.hpp"
#include "posetdim/dimension.hpp"

using namespace posetdim;
using posetdim::testing::oracle_dimension;
using posetdim::testing::oracle_reversible;

namespace {

int id(const Poset& P, const char* s) { return *P.find(s); }

}  // namespace

TEST(Dimension, IncomparablePairs) {
  EXPECT_TRUE(incomparable_pairs(Poset::chain(4)).empty());
  EXPECT_EQ(incomparable_pairs(Poset::antichain(3)).size(), 6u);
  Poset S2 = standard_example(2);
  PairSet expected{{id(S2, "a_1"), id(S2, "b_1")}, {id(S2, "a_2"), id(S2, "b_2")}};
  std::sort(expected.begin(), expected.end());
  auto got = inc_between(S2, min_elements(S2), max_elements(S2));
  std::sort(got.begin(), got.end());
  EXPECT_EQ(got, expected);
}

TEST(Dimension, Reversibility) {
  Poset S2 = standard_example(2);
  EXPECT_TRUE(is_reversible(S2, {}).reversible);
  const Pair p1{id(S2, "a_1"), id(S2, "b_1")}, p2{id(S2, "a_2"), id(S2, "b_2")};
  auto one = is_reversible(S2, {p1});
  EXPECT_TRUE(one.reversible);
  EXPECT_TRUE(reverses_all(S2, one.extension, {p1}));
  auto both = is_reversible(S2, {p1, p2});
  ASSERT_FALSE(both.reversible);
  ASSERT_TRUE(both.cycle.has_value());
  EXPECT_EQ(both.cycle->pairs.size(), 2u);
  EXPECT_TRUE(is_strict_alt_cycle(S2, *both.cycle));
}

TEST(Dimension, ComparablePairIsRejected) {
  Poset C = Poset::chain(2);
  EXPECT_THROW(is_reversible(C, {{0, 1}}), PairNotIncomparable);
}

TEST(Dimension, ReversibilityMatchesPermutationOracle) {
  std::mt19937_64 rng(99);
  auto corpus = posetdim::testing::small_corpus(60);
  for (const auto& P : corpus) {
    auto inc = incomparable_pairs(P);
    for (int t = 0; t < 10 && !inc.empty(); ++t) {
      PairSet I;
      for (const auto& p : inc)
        if (rng() % 3 == 0) I.push_back(p);
      auto r = is_reversible(P, I);
      ASSERT_EQ(r.reversible, oracle_reversible(P, I));
      if (r.reversible) EXPECT_TRUE(reverses_all(P, r.extension, I));
      else EXPECT_TRUE(is_strict_alt_cycle(P, *r.cycle));
    }
  }
}

TEST(Dimension, StandardExamples) {
  for (int k = 2; k <= 5; ++k) {
    Poset S = standard_example(k);
    auto r = dim_of_set(S, incomparable_pairs(S));
    EXPECT_EQ(r.value, k);
    EXPECT_TRUE(is_valid_partition(S, incomparable_pairs(S), r.partition));
  }
  EXPECT_EQ(dim_of_set(Poset::chain(3), incomparable_pairs(Poset::chain(3))).value, 1);
  auto d = dimension(standard_example(4));
  EXPECT_EQ(d.value, 4);
  EXPECT_TRUE(is_realizer(standard_example(4), d.realizer));
  EXPECT_EQ(dimension(Poset::antichain(2)).value, 2);
  EXPECT_EQ(dimension(Poset::chain(3)).value, 1);
  EXPECT_EQ(dimension(Poset::antichain(1)).value, 1);
}

TEST(Dimension, KellyThreeMatchesBruteForce) {
  Poset K = kelly(3).poset;
  const int brute = brute_force_dimension(K, 5000000);
  EXPECT_EQ(dim_of_set(K, incomparable_pairs(K)).value, brute);
  EXPECT_EQ(dimension(K).value, brute);
}

TEST(Dimension, BruteForceOracle) {
  EXPECT_EQ(brute_force_dimension(standard_example(2)), 2);
  EXPECT_EQ(brute_force_dimension(Poset::chain(4)), 1);
  std::mt19937_64 rng(5);
  for (int t = 0; t < 40; ++t) {
    Poset P = random_connected_poset(6, 0.3, rng());
    const int brute = brute_force_dimension(P);
    EXPECT_EQ(brute, oracle_dimension(P));
    EXPECT_EQ(dim_of_set(P, incomparable_pairs(P)).value, brute);
    EXPECT_EQ(dimension(P).value, brute);
  }
}

TEST(Dimension, DimOfSetMatchesBruteForceOnSubsets) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 30; ++t) {
    Poset P = random_connected_poset(6, 0.25, rng());
    PairSet I;
    for (const auto& p : incomparable_pairs(P))
      if (rng() % 2) I.push_back(p);
    EXPECT_EQ(dim_of_set(P, I).value, brute_force_dim_of_set(P, I));
  }
}

TEST(Dimension, MinMaxAndAB) {
  Poset S3 = standard_example(3);
  EXPECT_EQ(minmax_dimension(S3).value, 3);
  EXPECT_EQ(dim_AB(S3, min_elements(S3), max_elements(S3)).value, 3);
  EXPECT_EQ(dim_AB(S3, {id(S3, "a_1")}, max_elements(S3)).value, 1);
}

TEST(Dimension, MinMaxReductionOfChain) {
  auto R = minmax_reduction(Poset::chain(3));
  EXPECT_EQ(R.q.size(), 7);
  EXPECT_EQ(height(R.q), 3);
  EXPECT_EQ(min_elements(R.q).size(), 3u);
  EXPECT_EQ(max_elements(R.q).size(), 3u);
}

TEST(Dimension, MinMaxReductionOfStandardExample) {
  // Every b_j is non-minimal and every a_i non-maximal, so each gets a pendant.
  Poset S = standard_example(4);
  auto R = minmax_reduction(S);
  EXPECT_EQ(R.q.size(), 16);
  EXPECT_EQ(height(R.q), 2);
  const auto mins = min_elements(R.q), maxs = max_elements(R.q);
  for (const auto& p : incomparable_pairs(S)) {
    auto [x, y] = R.lift(p);
    EXPECT_TRUE(std::binary_search(mins.begin(), mins.end(), x));
    EXPECT_TRUE(std::binary_search(maxs.begin(), maxs.end(), y));
    EXPECT_TRUE(R.q.incomparable(x, y));
  }
  EXPECT_EQ(minmax_dimension(R.q).value, 4);
}

TEST(Dimension, StandardExampleSearch) {
  auto K = kelly(4).poset;
  auto w = contains_standard_example(K, 4);
  ASSERT_TRUE(w.has_value());
  EXPECT_TRUE(is_standard_example_witness(K, *w));
  EXPECT_FALSE(contains_standard_example(Poset::chain(4), 2).has_value());
  auto T = treewidth3_construction(6).poset;
  auto w8 = contains_standard_example(T, 8);
  ASSERT_TRUE(w8.has_value());
  EXPECT_TRUE(is_standard_example_witness(T, *w8));
}

TEST(Dimension, BudgetExhaustionReportsBounds) {
  // Large and sparse enough that the exact search cannot finish in zero time.
  const Poset P = random_connected_poset(150, 0.03, 1);
  try {
    dimension(P, Budget{std::chrono::milliseconds(0)});
    FAIL() << "expected ResourceLimit";
  } catch (const ResourceLimit& e) {
    EXPECT_GE(e.lower, 2);
    EXPECT_LE(e.lower, e.upper);
    EXPECT_LE(e.upper, width(P));
  }
}

// Crown S_n^k: n+k minimal and n+k maximal elements, a_i below every b_j
// except b_i..b_{i+k} (indices mod n+k). Its dimension is ceil(2(n+k)/(k+2)).
Poset crown(int n, int k) {
  const int N = n + k;
  std::vector<Pair> rel;
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j)
      if ((j - i + N) % N > k) rel.push_back({i, N + j});
  return Poset::from_relations(2 * N, rel);
}

TEST(Dimension, CrownsMatchClosedForm) {
  for (auto [n, k] : std::vector<std::pair<int, int>>{{3, 1}, {6, 1}, {9, 1}, {6, 2}, {12, 2}, {17, 3}, {22, 4}}) {
    const int expected = (2 * (n + k) + k + 1) / (k + 2);
    EXPECT_EQ(dimension(crown(n, k)).value, expected) << "n=" << n << " k=" << k;
  }
}
