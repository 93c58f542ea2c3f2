#pragma once

#include <vector>

#include "posetdim/dimension.hpp"
#include "posetdim/poset.hpp"

namespace posetdim {

// Unfolding A_0, B_1, A_1, B_2, ... of a connected poset from x0. Indices match
// the usual numbering: A[i] is A_i for i >= 0 and B[i] is B_i for i >= 1
// (B[0] is always empty). Trailing sets are empty.
struct UnfoldingSequence {
  Poset poset;
  int x0 = -1;
  std::vector<ElementSet> A;
  std::vector<ElementSet> B;
  std::vector<Bits> up_a;    // Up(A_i)
  std::vector<Bits> down_b;  // D(B_i)
  std::vector<int> alpha;    // smallest i with x in Up(A_i)
  std::vector<int> beta;     // smallest j >= 1 with x in D(B_j)
  std::vector<int> parent;   // -1 for x0

  int length() const { return static_cast<int>(A.size()); }  // A_0..A_{m}, last one empty
};

UnfoldingSequence unfold(const Poset& P, int x0);

// Checks the partition, two-downset and alpha/beta properties; empty when all hold.
std::vector<std::string> unfolding_violations(const UnfoldingSequence& U);

struct ZigzagTree {
  std::vector<int> parent;
  std::vector<Pair> edges;  // (child, parent)
};

// Parent of x: a cover neighbour in D(B_i) above x when alpha = beta = i, or in
// Up(A_i) below x when beta = alpha + 1 = i + 1; the smallest such id.
ZigzagTree assign_parents(UnfoldingSequence& U);

// Path x0 .. x in the parent tree. Checks the chain and unique-minimum
// properties wherever they apply and throws FalsifiedClaim on failure.
std::vector<int> zigzag_path(const UnfoldingSequence& U, int x);
// Number of indices i for which x lies in Up(A_{i-1}), Up(A_i) and D(B_i).
int zigzag_applicable(const UnfoldingSequence& U, int x);

struct UnfoldingWitness {
  int i = -1;
  int j = -1;            // i or i + 1
  int dim_ab = 0;        // dim(Min, Max)
  int dim_local = 0;     // dim(A_i, B_j)
};

UnfoldingWitness verify_unfolding_lemma(const Poset& P, int x0, Budget budget = {});

enum class Facing { left, right };

struct Core {
  ElementSet members;  // ids in the parent poset
  Poset poset;         // induced on members
  int source_index = -1;
  Facing facing = Facing::left;
  int minmax_dim = 0;
  int parent_minmax_dim = 0;
};

Core find_core(const Poset& P, int x0, Budget budget = {});

}  // namespace posetdim
