#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "posetdim/diagram.hpp"
#include "posetdim/dimension.hpp"
#include "posetdim/graph_tools.hpp"
#include "posetdim/poset.hpp"

namespace posetdim {

enum class PlanarityKind { none, cover_graph, diagram };

struct Guarantees {
  std::optional<int> height;
  int dimension_lower_bound = 1;
  std::optional<StandardExampleWitness> witness;  // induced S_k, k = witness size
  PlanarityKind planarity = PlanarityKind::none;
  bool unique_min = false;
  bool unique_max = false;
  std::optional<int> max_treewidth;
  bool minmax_subtrees_meet = false;  // T_a and T_b meet for every incomparable min/max pair
};

struct ConstructionOutput {
  std::string family;
  Poset poset;
  std::optional<PlanarDiagram> diagram;
  std::optional<TreeDecomposition> decomposition;
  Guarantees guarantees;
};

// Re-verifies every declared guarantee from scratch; returns the failures.
std::vector<std::string> verify_guarantees(const ConstructionOutput& c);

Poset standard_example(int k);
ConstructionOutput standard_example_output(int k);
ConstructionOutput kelly(int k);
ConstructionOutput planar_linear_construction(int h);
ConstructionOutput spider_net(int k);
ConstructionOutput double_spider_construction(int h);
ConstructionOutput treewidth3_construction(int h);

Poset random_connected_poset(int n, double density, std::uint64_t seed);

enum class Extremes { any, unique_min, unique_min_max };
ConstructionOutput random_planar_diagram_poset(int n, std::uint64_t seed, Extremes extremes = Extremes::any);

}  // namespace posetdim
