#include "posetdim/partition.hpp"

#include <algorithm>
#include <map>

namespace posetdim {

namespace {

std::string pair_text(const Poset& P, IncPair p) { return "(" + P.name(p.first) + "," + P.name(p.second) + ")"; }

void add_class(const Poset& P, PartitionReport& r, const PairSet& cls, const std::string& what) {
  if (cls.empty()) return;
  auto rev = is_reversible(P, cls);
  if (!rev.reversible) throw FalsifiedClaim(what + " class is not reversible");
  r.partition.classes.push_back(cls);
  r.partition.witnesses.push_back(rev.extension);
}

// Builds the special-pair digraph on J and splits J into longest-path levels.
LevelFamily level_family(const PlanarDiagram& D, std::string name, PairSet J, const PartitionCaps& caps, int h) {
  const Poset& P = D.poset;
  LevelFamily f;
  f.name = std::move(name);
  f.pairs = std::move(J);
  const int k = static_cast<int>(f.pairs.size());
  if (k == 0) return f;
  std::map<IncPair, int> index;
  for (int i = 0; i < k; ++i) index[f.pairs[i]] = i;

  auto cycles = enumerate_strict_cycles(P, f.pairs, caps.cycle_size_cap, caps.node_budget);
  f.cycles = cycles.size();
  std::vector<std::vector<int>> succ(k);
  for (const auto& c : cycles) {
    auto r = rotate_topmost_b(D, c);
    auto j = special_pair_index(D, r);
    if (!j) throw FalsifiedClaim(f.name + ": strict alternating cycle without a special pair");
    int u = index.at(r.pairs[*j]);
    int v = index.at(r.pairs[(*j + 1) % r.pairs.size()]);
    if (std::find(succ[u].begin(), succ[u].end(), v) == succ[u].end()) {
      succ[u].push_back(v);
      f.edges.emplace_back(u, v);
    }
  }
  std::sort(f.edges.begin(), f.edges.end());

  // Longest path from the sources; Kahn order doubles as the cycle check.
  std::vector<int> indeg(k, 0), level(k, 0);
  for (auto [u, v] : f.edges) ++indeg[v];
  std::vector<int> queue;
  for (int i = 0; i < k; ++i)
    if (indeg[i] == 0) queue.push_back(i);
  for (std::size_t q = 0; q < queue.size(); ++q) {
    int u = queue[q];
    for (int v : succ[u]) {
      level[v] = std::max(level[v], level[u] + 1);
      if (--indeg[v] == 0) queue.push_back(v);
    }
  }
  if (static_cast<int>(queue.size()) != k) throw FalsifiedClaim(f.name + ": special-pair digraph has a directed cycle");
  int levels = *std::max_element(level.begin(), level.end()) + 1;
  if (levels > h)
    throw FalsifiedClaim(f.name + ": " + std::to_string(levels) + " levels exceed height " + std::to_string(h));
  f.levels.assign(levels, {});
  for (int i = 0; i < k; ++i) f.levels[level[i]].push_back(f.pairs[i]);
  return f;
}

}  // namespace

PartitionReport partition_minmax_below(const PlanarDiagram& D, const ElementSet& B, int x0, const PartitionCaps& caps) {
  const Poset& P = D.poset;
  P.check_id(x0);
  auto bad = validate_diagram(D);
  if (!bad.empty()) throw PreconditionFailed("invalid diagram: " + bad.front().kind + " " + bad.front().detail);
  const ElementSet maxima = max_elements(P);
  for (int b : B) {
    P.check_id(b);
    if (!std::binary_search(maxima.begin(), maxima.end(), b))
      throw PreconditionFailed("element " + P.name(b) + " of B is not maximal");
    if (!P.leq(x0, b)) throw PreconditionFailed("x0 is not below " + P.name(b));
  }

  PartitionReport r;
  r.height = height(P);
  // A minimal element below x0 is below every element of B as well.
  r.x0 = to_set(P.down(x0) & to_bits(P.size(), min_elements(P))).front();
  if (B.empty()) return r;

  auto layers = classify_pairs(D, min_elements(P), B);
  r.i1p = layers.i1p;
  r.i2p = layers.i2p;
  r.i2pp = layers.i2pp;

  if (!r.i1p.empty()) {
    std::vector<int> by_y(P.size());
    for (int i = 0; i < P.size(); ++i) by_y[i] = i;
    std::sort(by_y.begin(), by_y.end(), [&](int u, int v) { return D.y(u) < D.y(v); });
    if (!is_linear_extension(P, by_y) || !reverses_all(P, by_y, r.i1p))
      throw FalsifiedClaim("the y-order does not reverse the above/below layer");
    r.partition.classes.push_back(r.i1p);
    r.partition.witnesses.push_back(by_y);
  }
  add_class(P, r, r.i2p, "a-blind");
  add_class(P, r, r.i2pp, "b-blind");

  const PlanarDiagram mirrored = mirror(D);
  const std::pair<const PlanarDiagram*, const PairSet*> sides[] = {{&D, &layers.i3pp}, {&mirrored, &layers.i3p}};
  const char* side_name[] = {"right", "left"};
  for (int s = 0; s < 2; ++s) {
    const PlanarDiagram& E = *sides[s].first;
    PairSet fam[3];
    for (IncPair p : *sides[s].second) {
      bool sep = has_separator(E, p.first, p.second).has_value();
      bool dangerous = is_dangerous(E, r.x0, p.first, p.second);
      if (sep && dangerous) throw FalsifiedClaim("pair " + pair_text(P, p) + " has a separator and is dangerous");
      fam[sep ? 0 : (dangerous ? 2 : 1)].push_back(p);
    }
    const char* kinds[] = {"sep", "no-sep", "no-sep-dangerous"};
    for (int t = 0; t < 3; ++t) {
      auto f = level_family(E, std::string(side_name[s]) + "/" + kinds[t], fam[t], caps, r.height);
      for (const auto& cls : f.levels) add_class(P, r, cls, f.name);
      r.families.push_back(std::move(f));
    }
  }

  if (r.class_count() > 6 * r.height + 3)
    throw FalsifiedClaim(std::to_string(r.class_count()) + " classes exceed 6h+3");
  if (!is_valid_partition(P, inc_between(P, min_elements(P), B), r.partition))
    throw FalsifiedClaim("emitted classes do not partition the min/B pairs");
  return r;
}

}  // namespace posetdim
