#include <gtest/gtest.h>

#include "corpus.hpp"
#include "posetdim/constructions.hpp"
#include "posetdim/partition.hpp"

using namespace posetdim;

namespace {

ElementSet maxima_above(const Poset& P, int x0) {
  ElementSet B;
  for (int b : max_elements(P))
    if (P.leq(x0, b)) B.push_back(b);
  return B;
}

void expect_sound(const PlanarDiagram& D, const ElementSet& B, const PartitionReport& r) {
  const Poset& P = D.poset;
  const int h = height(P);
  EXPECT_LE(r.class_count(), 6 * h + 3);
  auto I = inc_between(P, min_elements(P), B);
  EXPECT_TRUE(is_valid_partition(P, I, r.partition));
  for (const auto& c : r.partition.classes) EXPECT_TRUE(is_reversible(P, c).reversible);
}

}  // namespace

TEST(Partition, ChainHasNoPairs) {
  auto D = straight_line_diagram(Poset::chain(3), {pt(0, 0), pt(1, 1), pt(0, 2)});
  auto r = partition_minmax_below(D, {2}, 0);
  EXPECT_EQ(r.class_count(), 0);
}

TEST(Partition, KellyThree) {
  auto K = kelly(3);
  const Poset& P = K.poset;
  const int x0 = *P.find("a_1");
  auto B = maxima_above(P, x0);
  auto r = partition_minmax_below(*K.diagram, B, x0);
  expect_sound(*K.diagram, B, r);
}

TEST(Partition, KellyFourAgainstExactSolver) {
  auto K = kelly(4);
  const Poset& P = K.poset;
  const int x0 = *P.find("a_1");
  auto B = maxima_above(P, x0);
  auto r = partition_minmax_below(*K.diagram, B, x0);
  expect_sound(*K.diagram, B, r);
  const int exact = dim_AB(P, min_elements(P), B).value;
  EXPECT_LE(exact, r.class_count() == 0 ? 1 : r.class_count());
  EXPECT_LE(exact, 6 * height(P) + 3);
}

TEST(Partition, MirroredKelly) {
  auto K = kelly(4);
  auto M = mirror(*K.diagram);
  const int x0 = *K.poset.find("a_1");
  auto B = maxima_above(K.poset, x0);
  expect_sound(M, B, partition_minmax_below(M, B, x0));
}

TEST(Partition, RandomPlanarDiagrams) {
  for (const auto& inst : posetdim::testing::planar_corpus(25)) {
    auto r = partition_minmax_below(*inst.output.diagram, inst.b, inst.x0);
    expect_sound(*inst.output.diagram, inst.b, r);
    int in_families = 0;
    for (const auto& f : r.families) in_families += static_cast<int>(f.pairs.size());
    EXPECT_EQ(static_cast<std::size_t>(in_families) + r.i1p.size() + r.i2p.size() + r.i2pp.size(),
              inc_between(inst.output.poset, min_elements(inst.output.poset), inst.b).size());
  }
}

TEST(Partition, RejectsBadInput) {
  auto K = kelly(3);
  const Poset& P = K.poset;
  EXPECT_THROW(partition_minmax_below(*K.diagram, max_elements(P), *P.find("a_1")), PreconditionFailed);
  EXPECT_THROW(partition_minmax_below(*K.diagram, {*P.find("x_1")}, *P.find("a_1")), PreconditionFailed);
}
