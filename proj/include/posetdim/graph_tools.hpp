#pragma once

#include <string>
#include <utility>
#include <vector>

#include "posetdim/poset.hpp"

namespace posetdim {

struct CoverGraph {
  int n = 0;
  std::vector<Pair> edges;  // (lower, upper) cover pairs, undirected use
  std::vector<std::vector<int>> adjacency() const;
};

CoverGraph cover_graph(const Poset& P);
CoverGraph complete_graph(int n);

enum class KuratowskiKind { none, k5, k33 };

struct PlanarityResult {
  bool planar = false;
  std::vector<std::vector<int>> rotation;  // per vertex, neighbours in clockwise order
  std::vector<Pair> kuratowski;            // edges of a K5 or K3,3 subdivision
  KuratowskiKind kind = KuratowskiKind::none;
};

PlanarityResult is_planar(const CoverGraph& G);

// Independent witness checks: Euler's formula on the faces traced by the
// rotation system, and branch-vertex structure of the subdivision.
bool verify_planar_embedding(const CoverGraph& G, const std::vector<std::vector<int>>& rotation);
KuratowskiKind verify_kuratowski(const CoverGraph& G, const std::vector<Pair>& edges);

struct TreeDecomposition {
  std::vector<ElementSet> bags;
  std::vector<Pair> tree_edges;
  int width() const;
};

struct TreeDecompositionCheck {
  bool ok = false;
  int width = -1;
  std::vector<std::string> violations;
};

TreeDecompositionCheck verify_tree_decomposition(const CoverGraph& G, const TreeDecomposition& td);

// Nodes of the tree whose bags contain v.
std::vector<int> bag_nodes(const TreeDecomposition& td, int v);
bool subtrees_intersect(const TreeDecomposition& td, int u, int v);

}  // namespace posetdim
