#pragma once

#include <chrono>
#include <optional>
#include <vector>

#include "posetdim/poset.hpp"

namespace posetdim {

using IncPair = Pair;
using PairSet = std::vector<IncPair>;

// Pairs (x_1,y_1)..(x_k,y_k) with x_i <= y_j iff j = i+1 (indices mod k).
struct StrictAltCycle {
  std::vector<IncPair> pairs;
};

struct IncPairPartition {
  std::vector<PairSet> classes;
  std::vector<std::vector<int>> witnesses;  // one linear extension per class
};

struct Reversibility {
  bool reversible = false;
  std::vector<int> extension;            // set when reversible
  std::optional<StrictAltCycle> cycle;   // set when not
};

struct DimResult {
  int value = 0;
  IncPairPartition partition;
};

struct DimensionResult {
  int value = 0;
  std::vector<std::vector<int>> realizer;
  IncPairPartition critical_partition;
};

struct Budget {
  std::chrono::milliseconds time{30000};
};

PairSet incomparable_pairs(const Poset& P);
PairSet inc_between(const Poset& P, const ElementSet& A, const ElementSet& B);
PairSet critical_pairs(const Poset& P);

bool is_strict_alt_cycle(const Poset& P, const StrictAltCycle& c);
Reversibility is_reversible(const Poset& P, const PairSet& I);
bool reverses_all(const Poset& P, const std::vector<int>& extension, const PairSet& I);

// Minimum number of reversible classes partitioning I (1 for empty I).
DimResult dim_of_set(const Poset& P, const PairSet& I, Budget budget = {});
DimensionResult dimension(const Poset& P, Budget budget = {});
DimResult minmax_dimension(const Poset& P, Budget budget = {});
DimResult dim_AB(const Poset& P, const ElementSet& A, const ElementSet& B, Budget budget = {});

bool is_realizer(const Poset& P, const std::vector<std::vector<int>>& extensions);
bool is_valid_partition(const Poset& P, const PairSet& I, const IncPairPartition& part);

// Exhaustive oracle: enumerates every linear extension, independent of the
// alternating cycle machinery.
int brute_force_dimension(const Poset& P, std::uint64_t extension_budget = 200000);
// Exhaustive oracle for dim(I).
int brute_force_dim_of_set(const Poset& P, const PairSet& I, std::uint64_t extension_budget = 200000);
// Exhaustive: some linear extension reverses every pair of I.
bool brute_force_reversible(const Poset& P, const PairSet& I, std::uint64_t extension_budget = 200000);

struct MinMaxReduction {
  Poset q;
  std::vector<int> below;  // element x of P -> fresh minimal m_x in Q, or -1
  std::vector<int> above;  // element x of P -> fresh maximal M_x in Q, or -1
  // Elements of P keep their ids in Q.
  IncPair lift(IncPair p) const;
};

MinMaxReduction minmax_reduction(const Poset& P);

struct StandardExampleWitness {
  std::vector<int> a;
  std::vector<int> b;
};

bool is_standard_example_witness(const Poset& P, const StandardExampleWitness& w);
std::optional<StandardExampleWitness> contains_standard_example(const Poset& P, int k,
                                                                std::uint64_t node_budget = 50000000);

}  // namespace posetdim
