#include "posetdim/graph_tools.hpp"

#include <algorithm>
#include <map>
#include <set>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>
#include <boost/graph/graph_traits.hpp>

namespace posetdim {

std::vector<std::vector<int>> CoverGraph::adjacency() const {
  std::vector<std::vector<int>> adj(n);
  for (auto [u, v] : edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  for (auto& a : adj) std::sort(a.begin(), a.end());
  return adj;
}

CoverGraph cover_graph(const Poset& P) { return {P.size(), cover_relations(P)}; }

CoverGraph complete_graph(int n) {
  CoverGraph G{n, {}};
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) G.edges.emplace_back(u, v);
  return G;
}

namespace {

using BGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS, boost::no_property,
                                     boost::property<boost::edge_index_t, int>>;
using BEdge = boost::graph_traits<BGraph>::edge_descriptor;

std::set<Pair> edge_set(const CoverGraph& G) {
  std::set<Pair> s;
  for (auto [u, v] : G.edges) s.emplace(std::min(u, v), std::max(u, v));
  return s;
}

}  // namespace

PlanarityResult is_planar(const CoverGraph& G) {
  BGraph g(G.n);
  int idx = 0;
  for (auto [u, v] : edge_set(G)) {
    auto e = boost::add_edge(u, v, g).first;
    boost::put(boost::edge_index, g, e, idx++);
  }
  std::vector<std::vector<BEdge>> embedding(G.n);
  std::vector<BEdge> kuratowski;
  PlanarityResult r;
  r.planar = boost::boyer_myrvold_planarity_test(
      boost::boyer_myrvold_params::graph = g,
      boost::boyer_myrvold_params::embedding =
          boost::make_iterator_property_map(embedding.begin(), boost::get(boost::vertex_index, g)),
      boost::boyer_myrvold_params::kuratowski_subgraph = std::back_inserter(kuratowski));
  if (r.planar) {
    r.rotation.resize(G.n);
    for (int v = 0; v < G.n; ++v)
      for (const auto& e : embedding[v]) {
        int s = static_cast<int>(boost::source(e, g)), t = static_cast<int>(boost::target(e, g));
        r.rotation[v].push_back(s == v ? t : s);
      }
  } else {
    for (const auto& e : kuratowski) {
      int s = static_cast<int>(boost::source(e, g)), t = static_cast<int>(boost::target(e, g));
      r.kuratowski.emplace_back(std::min(s, t), std::max(s, t));
    }
    std::sort(r.kuratowski.begin(), r.kuratowski.end());
    r.kind = verify_kuratowski(G, r.kuratowski);
  }
  return r;
}

bool verify_planar_embedding(const CoverGraph& G, const std::vector<std::vector<int>>& rotation) {
  if (static_cast<int>(rotation.size()) != G.n) return false;
  auto adj = G.adjacency();
  for (auto& a : adj) a.erase(std::unique(a.begin(), a.end()), a.end());
  std::map<Pair, int> pos;  // (v, w) -> index of w in rotation[v]
  std::size_t darts = 0;
  for (int v = 0; v < G.n; ++v) {
    auto r = rotation[v];
    std::sort(r.begin(), r.end());
    if (r != adj[v]) return false;
    for (int i = 0; i < static_cast<int>(rotation[v].size()); ++i) pos[{v, rotation[v][i]}] = i;
    darts += rotation[v].size();
  }
  // Trace faces: from dart (u,v) continue with (v, successor of u around v).
  std::set<Pair> seen;
  int faces = 0;
  for (const auto& [d, i] : pos) {
    if (seen.count(d)) continue;
    ++faces;
    Pair cur = d;
    while (!seen.count(cur)) {
      seen.insert(cur);
      auto [u, v] = cur;
      const auto& rv = rotation[v];
      int j = pos.at({v, u});
      cur = {v, rv[(j + 1) % rv.size()]};
    }
  }
  // Euler per component: V - E + F = 1 + C, isolated vertices contribute one face-free component each.
  int comps = 0;
  std::vector<int> comp(G.n, -1);
  for (int s = 0; s < G.n; ++s) {
    if (comp[s] != -1 || adj[s].empty()) continue;
    ++comps;
    std::vector<int> stack{s};
    comp[s] = s;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : adj[v])
        if (comp[w] == -1) {
          comp[w] = s;
          stack.push_back(w);
        }
    }
  }
  int verts = 0;
  for (int v = 0; v < G.n; ++v)
    if (!adj[v].empty()) ++verts;
  const int edges = static_cast<int>(darts / 2);
  return verts - edges + faces == 2 * comps;
}

KuratowskiKind verify_kuratowski(const CoverGraph& G, const std::vector<Pair>& edges) {
  auto all = edge_set(G);
  std::map<int, std::vector<int>> adj;
  for (auto [u, v] : edges) {
    if (!all.count({std::min(u, v), std::max(u, v)})) return KuratowskiKind::none;
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  std::vector<int> branch;
  for (const auto& [v, nb] : adj) {
    if (nb.size() >= 3) branch.push_back(v);
    else if (nb.size() != 2) return KuratowskiKind::none;
  }
  // Suppress degree-2 vertices: follow each branch edge to the next branch vertex.
  std::map<Pair, int> paths;  // each branch path is traced once from each end
  std::set<int> is_branch(branch.begin(), branch.end());
  for (int b : branch)
    for (int first : adj[b]) {
      int prev = b, cur = first;
      int steps = 0;
      while (!is_branch.count(cur)) {
        const auto& nb = adj[cur];
        int next = nb[0] == prev ? nb[1] : nb[0];
        prev = cur;
        cur = next;
        if (++steps > static_cast<int>(edges.size())) return KuratowskiKind::none;
      }
      if (cur == b) return KuratowskiKind::none;
      ++paths[{std::min(b, cur), std::max(b, cur)}];
    }
  std::set<Pair> contracted;
  for (auto [e, count] : paths) {
    if (count != 2) return KuratowskiKind::none;
    contracted.insert(e);
  }
  if (branch.size() == 5) {
    for (int v : branch)
      if (adj[v].size() != 4) return KuratowskiKind::none;
    return contracted.size() == 10 ? KuratowskiKind::k5 : KuratowskiKind::none;
  }
  if (branch.size() == 6 && contracted.size() == 9) {
    for (int v : branch)
      if (adj[v].size() != 3) return KuratowskiKind::none;
    // Bipartition by 2-colouring the contracted graph.
    std::map<int, int> colour;
    std::vector<int> stack{branch[0]};
    colour[branch[0]] = 0;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (auto [x, y] : contracted) {
        if (x != v && y != v) continue;
        int w = x == v ? y : x;
        if (!colour.count(w)) {
          colour[w] = 1 - colour[v];
          stack.push_back(w);
        } else if (colour[w] == colour[v]) {
          return KuratowskiKind::none;
        }
      }
    }
    int ones = 0;
    for (auto& [v, c] : colour) ones += c;
    return colour.size() == 6 && ones == 3 ? KuratowskiKind::k33 : KuratowskiKind::none;
  }
  return KuratowskiKind::none;
}

int TreeDecomposition::width() const {
  int w = -1;
  for (const auto& b : bags) w = std::max(w, static_cast<int>(b.size()) - 1);
  return w;
}

std::vector<int> bag_nodes(const TreeDecomposition& td, int v) {
  std::vector<int> out;
  for (int i = 0; i < static_cast<int>(td.bags.size()); ++i)
    if (std::binary_search(td.bags[i].begin(), td.bags[i].end(), v)) out.push_back(i);
  return out;
}

bool subtrees_intersect(const TreeDecomposition& td, int u, int v) {
  for (const auto& b : td.bags)
    if (std::binary_search(b.begin(), b.end(), u) && std::binary_search(b.begin(), b.end(), v)) return true;
  return false;
}

TreeDecompositionCheck verify_tree_decomposition(const CoverGraph& G, const TreeDecomposition& td) {
  TreeDecompositionCheck c;
  const int m = static_cast<int>(td.bags.size());
  auto fail = [&](std::string s) { c.violations.push_back(std::move(s)); };
  if (m == 0) {
    if (G.n > 0) fail("no bags");
  }
  for (int i = 0; i < m; ++i) {
    const auto& b = td.bags[i];
    if (!std::is_sorted(b.begin(), b.end()) || std::adjacent_find(b.begin(), b.end()) != b.end())
      fail("bag " + std::to_string(i) + " is not a sorted set");
    for (int v : b)
      if (v < 0 || v >= G.n) fail("bag " + std::to_string(i) + " holds unknown vertex " + std::to_string(v));
  }
  // The tree: m-1 edges, in range, connected.
  std::vector<std::vector<int>> tadj(m);
  bool edges_ok = true;
  for (auto [s, t] : td.tree_edges) {
    if (s < 0 || s >= m || t < 0 || t >= m || s == t) {
      fail("tree edge (" + std::to_string(s) + "," + std::to_string(t) + ") invalid");
      edges_ok = false;
      continue;
    }
    tadj[s].push_back(t);
    tadj[t].push_back(s);
  }
  if (m > 0 && static_cast<int>(td.tree_edges.size()) != m - 1) fail("tree has the wrong number of edges");
  if (m > 0 && edges_ok) {
    std::vector<char> seen(m, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : tadj[v])
        if (!seen[w]) {
          seen[w] = 1;
          ++reached;
          stack.push_back(w);
        }
    }
    if (reached != m) fail("tree is not connected");
  }
  // Every vertex: nonempty connected set of nodes.
  for (int v = 0; v < G.n && edges_ok; ++v) {
    auto nodes = bag_nodes(td, v);
    if (nodes.empty()) {
      fail("vertex " + std::to_string(v) + " is in no bag");
      continue;
    }
    std::set<int> in(nodes.begin(), nodes.end()), seen{nodes[0]};
    std::vector<int> stack{nodes[0]};
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int w : tadj[x])
        if (in.count(w) && seen.insert(w).second) stack.push_back(w);
    }
    if (seen.size() != in.size()) fail("bags of vertex " + std::to_string(v) + " are not connected in the tree");
  }
  for (auto [u, v] : G.edges)
    if (!subtrees_intersect(td, u, v))
      fail("edge (" + std::to_string(u) + "," + std::to_string(v) + ") is in no bag");
  c.ok = c.violations.empty();
  c.width = td.width();
  return c;
}

}  // namespace posetdim
