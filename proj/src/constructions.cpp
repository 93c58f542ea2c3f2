#include "posetdim/constructions.hpp"

#include <algorithm>
#include <map>
#include <random>

namespace posetdim {

namespace {

// Named elements and relations, closed into a labelled poset.
struct Builder {
  std::vector<std::string> names;
  std::map<std::string, int> ids;
  std::vector<Pair> rel;

  int id(const std::string& s) {
    auto [it, fresh] = ids.emplace(s, static_cast<int>(names.size()));
    if (fresh) names.push_back(s);
    return it->second;
  }
  void less(const std::string& a, const std::string& b) { rel.emplace_back(id(a), id(b)); }
  Poset build() const {
    Poset P = Poset::from_relations(static_cast<int>(names.size()), rel);
    P.set_labels(names);
    return P;
  }
};

std::string idx(const std::string& base, int i) { return base + "_" + std::to_string(i); }

StandardExampleWitness witness_by_label(const Poset& P, const std::vector<std::string>& a,
                                        const std::vector<std::string>& b) {
  StandardExampleWitness w;
  for (const auto& s : a) w.a.push_back(*P.find(s));
  for (const auto& s : b) w.b.push_back(*P.find(s));
  return w;
}

std::uint64_t below(std::mt19937_64& rng, std::uint64_t bound) { return rng() % bound; }
double unit(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

}  // namespace

std::vector<std::string> verify_guarantees(const ConstructionOutput& c) {
  std::vector<std::string> bad;
  const Poset& P = c.poset;
  const Guarantees& g = c.guarantees;
  if (g.height && height(P) != *g.height)
    bad.push_back("height " + std::to_string(height(P)) + " differs from " + std::to_string(*g.height));
  if (g.witness) {
    if (!is_standard_example_witness(P, *g.witness)) bad.push_back("standard example witness is not induced");
    if (static_cast<int>(g.witness->a.size()) < g.dimension_lower_bound)
      bad.push_back("witness is smaller than the declared dimension bound");
  }
  if (g.planarity == PlanarityKind::diagram) {
    if (!c.diagram) bad.push_back("diagram declared but missing");
    else if (!(c.diagram->poset == P)) bad.push_back("diagram is drawn for another poset");
    else if (auto v = validate_diagram(*c.diagram); !v.empty()) bad.push_back("diagram: " + v.front().kind + " " + v.front().detail);
  }
  if (g.planarity != PlanarityKind::none) {
    auto G = cover_graph(P);
    auto r = is_planar(G);
    if (!r.planar || !verify_planar_embedding(G, r.rotation)) bad.push_back("cover graph is not planar");
  }
  if (g.unique_min && min_elements(P).size() != 1) bad.push_back("minimal element is not unique");
  if (g.unique_max && max_elements(P).size() != 1) bad.push_back("maximal element is not unique");
  if (g.max_treewidth || g.minmax_subtrees_meet) {
    if (!c.decomposition) {
      bad.push_back("tree decomposition declared but missing");
    } else {
      auto check = verify_tree_decomposition(cover_graph(P), *c.decomposition);
      if (!check.ok) bad.push_back("tree decomposition: " + check.violations.front());
      if (g.max_treewidth && check.width > *g.max_treewidth)
        bad.push_back("width " + std::to_string(check.width) + " exceeds " + std::to_string(*g.max_treewidth));
      if (g.minmax_subtrees_meet)
        for (auto [a, b] : inc_between(P, min_elements(P), max_elements(P)))
          if (!subtrees_intersect(*c.decomposition, a, b)) {
            bad.push_back("subtrees of " + P.name(a) + " and " + P.name(b) + " are disjoint");
            break;
          }
    }
  }
  return bad;
}

Poset standard_example(int k) {
  if (k < 1) throw BadParameter("standard example needs k >= 1");
  Builder b;
  for (int i = 1; i <= k; ++i) b.id(idx("a", i));
  for (int j = 1; j <= k; ++j) b.id(idx("b", j));
  for (int i = 1; i <= k; ++i)
    for (int j = 1; j <= k; ++j)
      if (i != j) b.less(idx("a", i), idx("b", j));
  return b.build();
}

ConstructionOutput standard_example_output(int k) {
  ConstructionOutput c;
  c.family = "standard";
  c.poset = standard_example(k);
  c.guarantees.height = k >= 2 ? 2 : 1;
  c.guarantees.dimension_lower_bound = k;
  StandardExampleWitness w;
  for (int i = 0; i < k; ++i) {
    w.a.push_back(i);
    w.b.push_back(k + i);
  }
  if (k >= 2) c.guarantees.witness = w;
  return c;
}

ConstructionOutput kelly(int k) {
  if (k < 3) throw BadParameter("kelly needs k >= 3");
  Builder b;
  std::map<std::string, Point> at;
  // Each step nests the next quadruple inside the previous one at a fifth of the scale.
  Point O = pt(0, 0);
  Rational S = 1;
  auto place = [&](const std::string& s, const Rational& dx, const Rational& dy) {
    b.id(s);
    at[s] = {O.x + S * dx, O.y + S * dy};
  };
  b.id("a_1");
  at["a_1"] = pt(0, -1);
  place("x_1", 0, 0);
  place("a_2", 1, 1);
  place("b_2", 0, 2);
  place("z_2", 1, 3);
  b.id("b_1");
  at["b_1"] = pt(1, 4);
  for (int m = 2; m <= k - 1; ++m) {
    O = {O.x + S / 2, O.y + S * Rational(5, 4)};
    S /= 5;
    place(idx("x", m), 0, 0);
    place(idx("a", m + 1), 1, 1);
    place(idx("b", m + 1), 0, 2);
    place(idx("z", m + 1), 1, 3);
  }
  for (int i = 1; i <= k - 1; ++i) b.less(idx("a", i), idx("x", i));
  for (int i = 1; i <= k - 2; ++i) b.less(idx("x", i), idx("x", i + 1));
  for (int j = 2; j <= k; ++j) b.less(idx("x", j - 1), idx("b", j));
  for (int i = 2; i <= k; ++i) b.less(idx("a", i), idx("z", i));
  for (int i = 2; i <= k - 1; ++i) b.less(idx("z", i + 1), idx("z", i));
  for (int j = 1; j <= k - 1; ++j) b.less(idx("z", j + 1), idx("b", j));

  ConstructionOutput c;
  c.family = "kelly";
  c.poset = b.build();
  std::vector<Point> pts;
  for (const auto& s : b.names) pts.push_back(at.at(s));
  c.diagram = straight_line_diagram(c.poset, pts);
  std::vector<std::string> as, bs;
  for (int i = 1; i <= k; ++i) {
    as.push_back(idx("a", i));
    bs.push_back(idx("b", i));
  }
  c.guarantees.height = k + 1;
  c.guarantees.dimension_lower_bound = k;
  c.guarantees.witness = witness_by_label(c.poset, as, bs);
  c.guarantees.planarity = PlanarityKind::diagram;
  return c;
}

namespace {

// Base of the height-4 planar family: S_6 on the labelled elements, a_1 drawn
// lowest, b_1 highest, and b_6 below a_6 with the open segment between them
// inside a face.
struct BaseElement {
  const char* name;
  long long x, y;
};

#include "planar_base.inc"

}  // namespace

ConstructionOutput planar_linear_construction(int h) {
  if (h < 1 || h % 3 != 1) throw BadParameter("planar_linear_construction needs h = 1 mod 3");
  ConstructionOutput c;
  c.family = "planar-linear";
  if (h == 1) {
    c.poset = Poset::antichain(2);
    c.poset.set_labels({"a_1", "a_2"});
    c.diagram = straight_line_diagram(c.poset, {pt(0, 0), pt(1, 1)});
    c.guarantees.height = 1;
    c.guarantees.dimension_lower_bound = 2;
    c.guarantees.planarity = PlanarityKind::diagram;
    return c;
  }
  const int copies = (h - 1) / 3;
  std::map<std::string, int> base_id;
  for (const auto& e : kBaseElements) base_id.emplace(e.name, static_cast<int>(base_id.size()));

  Builder b;
  std::vector<Point> pts;
  // Copy t element names: base names prefixed with the copy number; the
  // identified elements keep the outer name.
  auto name = [&](int t, const std::string& s) {
    if (t > 1 && s == "a_1") return std::to_string(t - 1) + "." + "b_6";
    if (t > 1 && s == "b_1") return std::to_string(t - 1) + "." + "a_6";
    return std::to_string(t) + "." + s;
  };
  // Affine placement of copy t: x' = cx + ax*x + bx*y, y' = cy + dy*y.
  Rational ax = 1, bx = 0, cx = 0, dy = 1, cy = 0;
  const auto& A1 = kBaseElements[base_id.at("a_1")];
  const auto& B1 = kBaseElements[base_id.at("b_1")];
  const auto& A6 = kBaseElements[base_id.at("a_6")];
  const auto& B6 = kBaseElements[base_id.at("b_6")];
  auto image = [&](const BaseElement& e) { return Point{cx + ax * e.x + bx * e.y, cy + dy * e.y}; };
  for (int t = 1; t <= copies; ++t) {
    if (t > 1) {
      // Map this copy's a_1 to the previous b_6 and its b_1 to the previous a_6,
      // squeezing it horizontally so that it stays near the free segment.
      Point lo = image(B6), hi = image(A6);
      Rational ndy = (hi.y - lo.y) / Rational(B1.y - A1.y);
      Rational ncy = lo.y - ndy * A1.y;
      Rational nax = ax * (ndy / dy) / Rational(kBaseSqueeze);
      Rational nbx = ((hi.x - lo.x) - nax * Rational(B1.x - A1.x)) / Rational(B1.y - A1.y);
      Rational ncx = lo.x - nax * A1.x - nbx * A1.y;
      ax = nax, bx = nbx, cx = ncx, dy = ndy, cy = ncy;
    }
    for (const auto& e : kBaseElements) {
      std::string s = name(t, e.name);
      if (b.ids.count(s)) continue;
      b.id(s);
      pts.push_back(image(e));
    }
    for (const auto& [lo, hi] : kBaseCovers) b.less(name(t, lo), name(t, hi));
  }
  c.poset = b.build();
  c.diagram = straight_line_diagram(c.poset, pts);
  std::vector<std::string> as, bs;
  for (int t = 1; t <= copies; ++t)
    for (int i = 1; i <= 6; ++i) {
      if ((t > 1 && i == 1) || (t < copies && i == 6)) continue;
      as.push_back(name(t, idx("a", i)));
      bs.push_back(name(t, idx("b", i)));
    }
  c.guarantees.height = h;
  c.guarantees.dimension_lower_bound = static_cast<int>(as.size());
  c.guarantees.witness = witness_by_label(c.poset, as, bs);
  c.guarantees.planarity = PlanarityKind::diagram;
  return c;
}

ConstructionOutput spider_net(int k) {
  if (k < 3) throw BadParameter("spider_net needs k >= 3");
  // Cyclic intervals [s, s+l-1] of Z_k ordered by inclusion; singletons are the
  // a_i, intervals missing j are the b_j.
  auto interval = [&](int s, int l) {
    s = ((s % k) + k) % k;
    if (l == 1) return idx("a", s + 1);
    if (l == k - 1) return idx("b", (s + k - 1) % k + 1);
    return "c_" + std::to_string(s) + "_" + std::to_string(l);
  };
  Builder b;
  for (int l = 1; l < k - 1; ++l)
    for (int s = 0; s < k; ++s) {
      b.less(interval(s, l), interval(s, l + 1));
      b.less(interval(s, l), interval(s - 1, l + 1));
    }
  for (int s = 0; s < k; ++s) {
    b.less("bottom", interval(s, 1));
    b.less(interval(s, k - 1), "top");
  }
  ConstructionOutput c;
  c.family = "spider-net";
  c.poset = b.build();
  std::vector<std::string> as, bs;
  for (int i = 1; i <= k; ++i) {
    as.push_back(idx("a", i));
    bs.push_back(idx("b", i));
  }
  c.guarantees.height = k + 1;
  c.guarantees.dimension_lower_bound = k;
  c.guarantees.witness = witness_by_label(c.poset, as, bs);
  c.guarantees.planarity = PlanarityKind::cover_graph;
  c.guarantees.unique_min = c.guarantees.unique_max = true;
  return c;
}

ConstructionOutput double_spider_construction(int h) {
  if (h < 3) throw BadParameter("double_spider_construction needs h >= 3");
  const int m = 2 * h - 2;
  // Rings 1..h of m nodes. The lower rings form two interleaved nets grown
  // outwards from the a-ring; the top two steps join them to the b-ring.
  auto node = [&](int l, int s) {
    s = ((s % m) + m) % m;
    if (l == 1) return idx("a", s + 1);
    if (l == h) return idx("b", (s + m - 1) % m + 1);  // b_j sits one position after a_j
    return "v_" + std::to_string(l) + "_" + std::to_string(s);
  };
  Builder b;
  for (int s = 0; s < m; ++s) b.id(node(1, s));
  for (int l = 1; l <= h - 3; ++l)
    for (int s = 0; s < m; ++s) {
      b.less(node(l, s), node(l + 1, s));
      b.less(node(l, s), node(l + 1, s - 2));
    }
  for (int s = 0; s < m; ++s) {
    b.less(node(h - 2, s), node(h - 1, s));
    b.less(node(h - 2, s + 1), node(h - 1, s));
    b.less(node(h - 1, s), node(h, s));
    b.less(node(h - 1, s + 1), node(h, s));
  }
  ConstructionOutput c;
  c.family = "double-spider";
  c.poset = b.build();
  std::vector<std::string> as, bs;
  for (int i = 1; i <= m; ++i) {
    as.push_back(idx("a", i));
    bs.push_back(idx("b", i));
  }
  c.guarantees.height = h;
  c.guarantees.dimension_lower_bound = m;
  c.guarantees.witness = witness_by_label(c.poset, as, bs);
  c.guarantees.planarity = PlanarityKind::cover_graph;
  return c;
}

ConstructionOutput treewidth3_construction(int h) {
  if (h < 2 || h % 2 != 0) throw BadParameter("treewidth3_construction needs an even h >= 2");
  Builder b;
  TreeDecomposition td;
  std::vector<std::vector<std::string>> bags;
  // Current minimal and maximal elements, index-matched into incomparable pairs.
  std::vector<std::string> mins{"a_1", "a_2"}, maxs{"b_1", "b_2"};
  for (const auto& s : {"a_1", "a_2", "b_1", "b_2"}) b.id(s);
  b.less("a_1", "b_2");
  b.less("a_2", "b_1");
  bags.push_back({"a_1", "b_1", "b_2"});
  bags.push_back({"a_2", "b_1", "b_2"});
  td.tree_edges.emplace_back(0, 1);
  std::vector<int> meet{0, 1};  // a node where T_{a_i} and T_{b_i} meet
  for (int level = 4; level <= h; level += 2) {
    std::vector<std::string> nmins, nmaxs;
    std::vector<int> nmeet;
    for (std::size_t i = 0; i < mins.size(); ++i) {
      // Rename the current extremes so that the new ones can take the a_/b_ names.
      std::string a = mins[i], bb = maxs[i];
      std::string tag = "@" + std::to_string(level) + "." + std::to_string(i + 1);
      std::string a1 = "a1" + tag, a2 = "a2" + tag, b1 = "b1" + tag, b2 = "b2" + tag;
      b.less(a1, b2);
      b.less(a2, b1);
      b.less(a1, a);
      b.less(a2, a);
      b.less(bb, b1);
      b.less(bb, b2);
      int x = static_cast<int>(bags.size());
      bags.push_back({a, bb, b1, b2});
      bags.push_back({a, a1, b1, b2});
      bags.push_back({a, a2, b1, b2});
      td.tree_edges.emplace_back(x, x + 1);
      td.tree_edges.emplace_back(x, x + 2);
      td.tree_edges.emplace_back(x, meet[i]);
      nmins.insert(nmins.end(), {a1, a2});
      nmaxs.insert(nmaxs.end(), {b1, b2});
      nmeet.insert(nmeet.end(), {x + 1, x + 2});
    }
    mins = std::move(nmins);
    maxs = std::move(nmaxs);
    meet = std::move(nmeet);
  }
  // Final labels: the extremes become a_i/b_i, inner elements get their level tag.
  std::map<std::string, std::string> rename;
  for (std::size_t i = 0; i < mins.size(); ++i) {
    rename[mins[i]] = idx("a", static_cast<int>(i) + 1);
    rename[maxs[i]] = idx("b", static_cast<int>(i) + 1);
  }
  ConstructionOutput c;
  c.family = "treewidth3";
  c.poset = b.build();
  std::vector<std::string> labels = b.names;
  for (auto& s : labels) {
    if (auto it = rename.find(s); it != rename.end()) s = it->second;
    else if (h > 2) s = "in:" + s;
  }
  c.poset.set_labels(labels);
  for (const auto& bag : bags) {
    ElementSet ids;
    for (const auto& s : bag) ids.push_back(b.ids.at(s));
    std::sort(ids.begin(), ids.end());
    td.bags.push_back(ids);
  }
  c.decomposition = td;
  std::vector<std::string> as, bs;
  for (std::size_t i = 0; i < mins.size(); ++i) {
    as.push_back(idx("a", static_cast<int>(i) + 1));
    bs.push_back(idx("b", static_cast<int>(i) + 1));
  }
  c.guarantees.height = h;
  c.guarantees.dimension_lower_bound = static_cast<int>(mins.size());
  c.guarantees.witness = witness_by_label(c.poset, as, bs);
  c.guarantees.max_treewidth = 3;
  c.guarantees.minmax_subtrees_meet = true;
  return c;
}

Poset random_connected_poset(int n, double density, std::uint64_t seed) {
  if (n < 1) throw BadParameter("random_connected_poset needs n >= 1");
  std::mt19937_64 rng(seed);
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  for (int i = n - 1; i > 0; --i) std::swap(order[i], order[below(rng, i + 1)]);
  std::vector<Pair> rel;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (unit(rng) < density) rel.emplace_back(order[i], order[j]);
  // Join components by relating a random element of each later component to the first.
  std::vector<int> comp(n);
  for (int i = 0; i < n; ++i) comp[i] = i;
  auto find = [&](int x) {
    while (comp[x] != x) x = comp[x] = comp[comp[x]];
    return x;
  };
  for (auto [u, v] : rel) comp[find(u)] = find(v);
  for (int i = 1; i < n; ++i) {
    int u = order[below(rng, i)], v = order[i];
    if (find(u) != find(v)) {
      rel.emplace_back(u, v);
      comp[find(u)] = find(v);
    }
  }
  return Poset::from_relations(n, rel);
}

namespace {

bool segment_fits(const std::vector<Point>& pts, const std::vector<Pair>& edges, int u, int v) {
  for (int w = 0; w < static_cast<int>(pts.size()); ++w)
    if (w != u && w != v && on_segment(pts[w], pts[u], pts[v])) return false;
  for (auto [p, q] : edges) {
    auto r = intersect(pts[u], pts[v], pts[p], pts[q]);
    if (r.kind == SegmentIntersection::none) continue;
    if (r.kind == SegmentIntersection::overlap) return false;
    bool shared = (p == u || p == v || q == u || q == v) && (r.at == pts[u] || r.at == pts[v]);
    if (!shared) return false;
  }
  return true;
}

}  // namespace

ConstructionOutput random_planar_diagram_poset(int n, std::uint64_t seed, Extremes extremes) {
  if (n < 1) throw BadParameter("random_planar_diagram_poset needs n >= 1");
  std::mt19937_64 rng(seed);
  const long long width = 2LL * n + 1;
  for (;;) {
    // Element i is drawn at height i; x is random, edges are inserted greedily.
    std::vector<Point> pts(n);
    std::vector<Pair> edges;
    bool failed = false;
    for (int v = 0; v < n && !failed; ++v) {
      bool placed = false;
      for (int attempt = 0; attempt < 64 && !placed; ++attempt) {
        pts[v] = pt(static_cast<long long>(below(rng, width)), v);
        bool on_edge = false;
        for (auto [p, q] : edges)
          if (on_segment(pts[v], pts[p], pts[q])) on_edge = true;
        if (on_edge) continue;
        std::vector<int> lower(v);
        for (int u = 0; u < v; ++u) lower[u] = u;
        std::sort(lower.begin(), lower.end(), [&](int p, int q) { return pts[p].x < pts[q].x; });
        std::vector<Pair> added;
        auto current = edges;
        for (int u : lower) {
          if (unit(rng) >= 0.45) continue;
          if (segment_fits(pts, current, u, v)) {
            current.emplace_back(u, v);
            added.emplace_back(u, v);
          }
        }
        if (added.empty() && v > 0 && extremes != Extremes::any) {
          for (int u : lower)
            if (segment_fits(pts, current, u, v)) {
              current.emplace_back(u, v);
              added.emplace_back(u, v);
              break;
            }
          if (added.empty()) continue;
        }
        edges = std::move(current);
        placed = true;
      }
      if (!placed) failed = true;
    }
    if (!failed && extremes == Extremes::unique_min_max) {
      for (int v = n - 2; v >= 0 && !failed; --v) {
        bool has_upper = false;
        for (auto [p, q] : edges)
          if (p == v) has_upper = true;
        if (has_upper) continue;
        bool linked = false;
        for (int w = v + 1; w < n && !linked; ++w)
          if (segment_fits(pts, edges, v, w)) {
            edges.emplace_back(v, w);
            linked = true;
          }
        if (!linked) failed = true;
      }
    }
    if (failed) continue;
    ConstructionOutput c;
    c.family = "random-planar";
    c.poset = Poset::from_relations(n, edges);
    c.diagram = straight_line_diagram(c.poset, pts);
    c.guarantees.planarity = PlanarityKind::diagram;
    c.guarantees.unique_min = extremes != Extremes::any;
    c.guarantees.unique_max = extremes == Extremes::unique_min_max;
    return c;
  }
}

}  // namespace posetdim
