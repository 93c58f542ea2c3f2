#include <gtest/gtest.h>

#include "corpus.hpp"
#include "posetdim/constructions.hpp"
#include "posetdim/unfolding.hpp"

using namespace posetdim;

namespace {

ElementSet ids(const Poset& P, std::initializer_list<const char*> names) {
  ElementSet out;
  for (const char* s : names) out.push_back(*P.find(s));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST(Unfolding, StandardExampleFromMinimal) {
  Poset S3 = standard_example(3);
  auto U = unfold(S3, *S3.find("a_1"));
  EXPECT_EQ(U.A[0], ids(S3, {"a_1"}));
  EXPECT_EQ(U.B[1], ids(S3, {"b_2", "b_3"}));
  EXPECT_EQ(U.A[1], ids(S3, {"a_2", "a_3"}));
  EXPECT_EQ(U.B[2], ids(S3, {"b_1"}));
  EXPECT_TRUE(unfolding_violations(U).empty());
}

TEST(Unfolding, StandardExampleFromMaximal) {
  Poset S3 = standard_example(3);
  auto U = unfold(S3, *S3.find("b_1"));
  EXPECT_TRUE(U.A[0].empty());
  EXPECT_EQ(U.B[1], ids(S3, {"b_1"}));
  EXPECT_EQ(U.A[1], ids(S3, {"a_2", "a_3"}));
  EXPECT_EQ(U.B[2], ids(S3, {"b_2", "b_3"}));
  EXPECT_EQ(U.A[2], ids(S3, {"a_1"}));
  EXPECT_TRUE(unfolding_violations(U).empty());
}

TEST(Unfolding, Chain) {
  auto U = unfold(Poset::chain(3), 0);
  EXPECT_EQ(U.A[0], (ElementSet{0}));
  EXPECT_EQ(U.B[1], (ElementSet{2}));
  auto T = assign_parents(U);
  EXPECT_EQ(T.parent, (std::vector<int>{-1, 0, 1}));
  EXPECT_EQ(zigzag_path(U, 2), (std::vector<int>{0, 1, 2}));
  EXPECT_EQ(zigzag_path(U, 1), (std::vector<int>{0, 1}));
}

TEST(Unfolding, Preconditions) {
  EXPECT_THROW(unfold(standard_example(2), 0), NotConnected);
  EXPECT_THROW(unfold(Poset::chain(3), 1), BadBase);
  EXPECT_THROW(verify_unfolding_lemma(Poset::chain(3), 0), PreconditionFailed);
}

TEST(Unfolding, ParentsSpanStandardExample) {
  Poset S3 = standard_example(3);
  auto U = unfold(S3, *S3.find("a_1"));
  auto T = assign_parents(U);
  EXPECT_EQ(T.edges.size(), 5u);
  auto covers = cover_relations(S3);
  for (auto [child, parent] : T.edges) {
    bool cover = std::find(covers.begin(), covers.end(), Pair{child, parent}) != covers.end() ||
                 std::find(covers.begin(), covers.end(), Pair{parent, child}) != covers.end();
    EXPECT_TRUE(cover);
  }
  EXPECT_EQ(T.parent[*S3.find("b_1")], *S3.find("a_2"));
  auto path = zigzag_path(U, *S3.find("b_1"));
  EXPECT_EQ(path.front(), *S3.find("a_1"));
  EXPECT_EQ(path.back(), *S3.find("b_1"));
}

TEST(Unfolding, LemmaWitnesses) {
  Poset S3 = standard_example(3);
  auto w = verify_unfolding_lemma(S3, *S3.find("a_1"));
  EXPECT_EQ(w.dim_ab, 3);
  EXPECT_GE(2 * w.dim_local, w.dim_ab);
  auto K = kelly(4).poset;
  auto wk = verify_unfolding_lemma(K, *K.find("a_1"));
  EXPECT_GE(2 * wk.dim_local, wk.dim_ab);
}

TEST(Unfolding, CorpusProperties) {
  for (const auto& P : posetdim::testing::connected_corpus(40)) {
    const int x0 = min_elements(P).front();
    auto U = unfold(P, x0);
    EXPECT_TRUE(unfolding_violations(U).empty());
    auto T = assign_parents(U);
    EXPECT_EQ(T.edges.size(), static_cast<std::size_t>(P.size() - 1));
    for (int x = 0; x < P.size(); ++x) EXPECT_NO_THROW(zigzag_path(U, x));
    auto w = verify_unfolding_lemma(P, x0);
    EXPECT_GE(2 * w.dim_local, w.dim_ab);
  }
}

TEST(Unfolding, CoreOfTreewidthFamily) {
  auto T = treewidth3_construction(6).poset;
  auto c = find_core(T, *T.find("a_1"), Budget{std::chrono::milliseconds(120000)});
  EXPECT_GE(c.minmax_dim, 4);
  EXPECT_TRUE(is_connected(c.poset));
  EXPECT_TRUE(is_convex(T, c.members));
}

TEST(Unfolding, CoreNeedsLargeDimension) {
  Poset S4 = standard_example(4);
  EXPECT_THROW(find_core(S4, *S4.find("a_1")), PreconditionFailed);
}
