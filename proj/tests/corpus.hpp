#pragma once

#include <string>
#include <vector>

#include "posetdim/constructions.hpp"
#include "posetdim/poset.hpp"

namespace posetdim::testing {

// Seeded random posets with 1..7 elements.
std::vector<Poset> small_corpus(int count = 300);

// Seeded connected posets with at most 12 elements and dim(Min, Max) >= 2.
std::vector<Poset> connected_corpus(int count = 200);

struct PlanarInstance {
  ConstructionOutput output;
  int x0 = -1;
  ElementSet b;  // maximal elements above x0
};

// Seeded random planar diagrams, each with an element x0 and the maximal
// elements above it.
std::vector<PlanarInstance> planar_corpus(int count = 100, int n = 10);

struct NamedPoset {
  std::string name;
  Poset poset;
};

// Everything above plus the construction families at desk scale.
std::vector<NamedPoset> full_corpus();

// Exhaustive checks over all permutations; only for tiny posets.
// Positions of every element, one row per linear extension.
std::vector<std::vector<int>> extension_positions(const Poset& P);
bool oracle_reversible(const std::vector<std::vector<int>>& positions, const std::vector<Pair>& pairs);
bool oracle_reversible(const Poset& P, const std::vector<Pair>& pairs);
int oracle_dimension(const Poset& P);

}  // namespace posetdim::testing
