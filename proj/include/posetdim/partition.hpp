#pragma once

#include <string>
#include <vector>

#include "posetdim/diagram.hpp"
#include "posetdim/dimension.hpp"

namespace posetdim {

// One of the six families handled by level colouring: pairs of one side
// (right: as drawn, left: after mirroring) with a fixed separator/danger type.
struct LevelFamily {
  std::string name;
  PairSet pairs;
  std::vector<PairSet> levels;
  std::vector<std::pair<int, int>> edges;  // indices into pairs
  std::size_t cycles = 0;                  // strict cycles examined
};

struct PartitionReport {
  int x0 = -1;  // minimal element actually used as base
  int height = 0;
  PairSet i1p, i2p, i2pp;
  std::vector<LevelFamily> families;
  IncPairPartition partition;  // every nonempty class with its witness

  int class_count() const { return static_cast<int>(partition.classes.size()); }
};

struct PartitionCaps {
  int cycle_size_cap = -1;  // -1: size of the family
  std::uint64_t node_budget = 1000000;
};

// Partitions Inc(Min(P), B) into reversible classes following the layered
// construction: y-order layer, two visibility layers, then up to h level
// classes for each of six families. Every emitted class is re-verified.
PartitionReport partition_minmax_below(const PlanarDiagram& D, const ElementSet& B, int x0,
                                       const PartitionCaps& caps = {});

}  // namespace posetdim
