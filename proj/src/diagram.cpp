#include "posetdim/diagram.hpp"

#include <algorithm>
#include <deque>

namespace posetdim {

PlanarDiagram straight_line_diagram(const Poset& P, std::vector<Point> points) {
  if (static_cast<int>(points.size()) != P.size()) throw InvalidId("point count does not match poset size");
  PlanarDiagram D;
  D.poset = P;
  D.point = std::move(points);
  for (auto [u, v] : cover_relations(P)) D.curves[{u, v}] = {D.point[u], D.point[v]};
  return D;
}

PlanarDiagram mirror(const PlanarDiagram& D) {
  PlanarDiagram M = D;
  for (auto& p : M.point) p.x = -p.x;
  for (auto& [e, c] : M.curves)
    for (auto& p : c) p.x = -p.x;
  return M;
}

namespace {

std::string pair_name(const Poset& P, Pair e) { return "(" + P.name(e.first) + "," + P.name(e.second) + ")"; }

std::string point_name(const Point& p) { return "(" + to_string(p.x) + "," + to_string(p.y) + ")"; }

}  // namespace

std::vector<Violation> validate_diagram(const PlanarDiagram& D) {
  std::vector<Violation> out;
  const Poset& P = D.poset;
  const int n = P.size();
  if (static_cast<int>(D.point.size()) != n) {
    out.push_back({"points", "expected " + std::to_string(n) + " points"});
    return out;
  }
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (D.point[a].y == D.point[b].y)
        out.push_back({"same-height", P.name(a) + " and " + P.name(b) + " share a y-coordinate"});

  auto covers = cover_relations(P);
  for (auto e : covers)
    if (!D.curves.count(e)) out.push_back({"missing-curve", "no curve for cover " + pair_name(P, e)});
  for (const auto& [e, c] : D.curves) {
    if (!std::binary_search(covers.begin(), covers.end(), e)) {
      out.push_back({"extra-curve", "curve " + pair_name(P, e) + " is not a cover relation"});
      continue;
    }
    if (c.size() < 2 || !(c.front() == D.point[e.first]) || !(c.back() == D.point[e.second]))
      out.push_back({"endpoints", "curve " + pair_name(P, e) + " does not join its elements"});
    for (std::size_t i = 1; i < c.size(); ++i)
      if (!(c[i - 1].y < c[i].y)) {
        out.push_back({"not-upward", "curve " + pair_name(P, e) + " is not strictly increasing"});
        break;
      }
  }
  if (!out.empty()) return out;

  // Elements inside curves they do not belong to.
  for (const auto& [e, c] : D.curves)
    for (int w = 0; w < n; ++w) {
      if (w == e.first || w == e.second) continue;
      for (std::size_t i = 1; i < c.size(); ++i)
        if (on_segment(D.point[w], c[i - 1], c[i])) {
          out.push_back({"element-on-curve", P.name(w) + " lies on curve " + pair_name(P, e)});
          break;
        }
    }

  // Curves may only meet in a common endpoint element.
  std::vector<std::pair<Pair, const Polyline*>> all;
  for (const auto& [e, c] : D.curves) all.emplace_back(e, &c);
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = i + 1; j < all.size(); ++j) {
      auto [e1, c1] = all[i];
      auto [e2, c2] = all[j];
      std::vector<int> shared;
      for (int s : {e1.first, e1.second})
        if (s == e2.first || s == e2.second) shared.push_back(s);
      bool reported = false;
      for (std::size_t s1 = 1; s1 < c1->size() && !reported; ++s1)
        for (std::size_t s2 = 1; s2 < c2->size() && !reported; ++s2) {
          auto r = intersect((*c1)[s1 - 1], (*c1)[s1], (*c2)[s2 - 1], (*c2)[s2]);
          if (r.kind == SegmentIntersection::none) continue;
          bool ok = false;
          if (r.kind == SegmentIntersection::point)
            for (int s : shared)
              if (D.point[s] == r.at) ok = true;
          if (!ok) {
            std::string where = r.kind == SegmentIntersection::overlap ? "overlap" : "at " + point_name(r.at);
            out.push_back({"crossing", "curves " + pair_name(P, e1) + " and " + pair_name(P, e2) + " meet " + where});
            reported = true;
          }
        }
    }
  return out;
}

Rational crossing_x(const Polyline& c, const Rational& Y) {
  for (std::size_t i = 1; i < c.size(); ++i)
    if (c[i - 1].y <= Y && Y <= c[i].y) {
      const Point& p = c[i - 1];
      const Point& q = c[i];
      return p.x + (q.x - p.x) * (Y - p.y) / (q.y - p.y);
    }
  throw InvalidId("level outside curve");
}

namespace {

bool passes(const PlanarDiagram& D, int endpoint, Direction dir, const ReachFilter& f) {
  const Poset& P = D.poset;
  switch (f.kind) {
    case ReachFilter::none:
      return true;
    case ReachFilter::element:
      return dir == Direction::up ? P.leq(endpoint, f.e) : P.leq(f.e, endpoint);
    case ReachFilter::level: {
      const Bits& reach = dir == Direction::up ? P.up(endpoint) : P.down(endpoint);
      for (auto w = reach.find_first(); w != Bits::npos; w = reach.find_next(w))
        if (dir == Direction::up ? D.y(static_cast<int>(w)) > f.z : D.y(static_cast<int>(w)) < f.z) return true;
      return false;
    }
  }
  return false;
}

}  // namespace

LineCrossings line_crossings(const PlanarDiagram& D, int p, const Rational& Y, Direction dir,
                             const ReachFilter& filter) {
  const Poset& P = D.poset;
  P.check_id(p);
  LineCrossings lc;
  lc.source = p;
  lc.level = Y;
  lc.dir = dir;
  for (const auto& [e, c] : D.curves) {
    auto [u, v] = e;
    if (!(D.y(u) < Y && Y < D.y(v))) continue;
    if (dir == Direction::up ? !P.leq(p, u) : !P.leq(v, p)) continue;
    if (!passes(D, dir == Direction::up ? v : u, dir, filter)) continue;
    lc.xs.push_back(crossing_x(c, Y));
  }
  // A walk may also meet the level exactly in an element.
  for (int w = 0; w < P.size(); ++w) {
    if (D.y(w) != Y) continue;
    if (dir == Direction::up ? !P.leq(p, w) : !P.leq(w, p)) continue;
    if (!passes(D, w, dir, filter)) continue;
    lc.xs.push_back(D.x(w));
  }
  std::sort(lc.xs.begin(), lc.xs.end());
  return lc;
}

namespace {

Direction towards(const PlanarDiagram& D, int p, int q) { return D.y(q) > D.y(p) ? Direction::up : Direction::down; }

}  // namespace

bool sees_line(const PlanarDiagram& D, int p, int q) {
  if (p == q) throw InvalidId("sees_line needs distinct elements");
  return !line_crossings(D, p, D.y(q), towards(D, p, q)).xs.empty();
}

Side side_seen(const PlanarDiagram& D, int p, int q) {
  if (p == q) throw InvalidId("side_seen needs distinct elements");
  auto lc = line_crossings(D, p, D.y(q), towards(D, p, q));
  bool left = false, right = false;
  for (const auto& x : lc.xs) {
    if (x <= D.x(q)) left = true;
    if (x >= D.x(q)) right = true;
  }
  if (left && right) return Side::both;
  if (left) return Side::left;
  if (right) return Side::right;
  return Side::none;
}

bool sees_side(Side s, Side which) { return s == Side::both || s == which; }

const char* to_string(Side s) {
  switch (s) {
    case Side::none:
      return "none";
    case Side::left:
      return "left";
    case Side::right:
      return "right";
    case Side::both:
      return "both";
  }
  return "?";
}

ClassifiedPairs classify_pairs(const PlanarDiagram& D, const ElementSet& A, const ElementSet& B) {
  ClassifiedPairs c;
  for (auto [a, b] : inc_between(D.poset, A, B)) {
    if (D.y(a) > D.y(b)) {
      c.i1p.emplace_back(a, b);
    } else if (!sees_line(D, a, b)) {
      c.i2p.emplace_back(a, b);
    } else if (!sees_line(D, b, a)) {
      c.i2pp.emplace_back(a, b);
    } else {
      Side sa = side_seen(D, a, b), sb = side_seen(D, b, a);
      if (sa == Side::left && sb == Side::right)
        c.i3p.emplace_back(a, b);
      else if (sa == Side::right && sb == Side::left)
        c.i3pp.emplace_back(a, b);
      else
        throw FalsifiedClaim("pair (" + D.poset.name(a) + "," + D.poset.name(b) + ") sees sides " + to_string(sa) +
                             "/" + to_string(sb) + ", outside the left/right dichotomy");
    }
  }
  return c;
}

std::optional<SeparatorWitness> has_separator(const PlanarDiagram& D, int a, int b) {
  const Poset& P = D.poset;
  const Rational& ya = D.y(a);
  const Rational& yb = D.y(b);
  if (!(ya < yb)) return std::nullopt;
  auto usable = [&](int w) { return P.incomparable(w, a) && P.incomparable(w, b); };
  auto exits_right = [&](Pair e) { return D.y(e.second) > yb && crossing_x(D.curves.at(e), yb) > D.x(b); };

  std::vector<std::vector<Pair>> out_edges(P.size());
  for (const auto& [e, c] : D.curves) out_edges[e.first].push_back(e);

  std::vector<int> parent(P.size(), -2);  // -2 unseen, -1 reached from the entry edge
  for (const auto& [entry, c] : D.curves) {
    if (!(D.y(entry.first) < ya && ya < D.y(entry.second))) continue;
    if (!(crossing_x(c, ya) < D.x(a))) continue;
    if (exits_right(entry)) return SeparatorWitness{entry, entry, {}};
    int v = entry.second;
    if (D.y(v) >= yb || !usable(v)) continue;
    std::fill(parent.begin(), parent.end(), -2);
    parent[v] = -1;
    std::deque<int> queue{v};
    while (!queue.empty()) {
      int w = queue.front();
      queue.pop_front();
      for (Pair e : out_edges[w]) {
        if (exits_right(e)) {
          SeparatorWitness s{entry, e, {}};
          for (int x = w; x != -1; x = parent[x]) s.visited.push_back(x);
          std::reverse(s.visited.begin(), s.visited.end());
          return s;
        }
        int z = e.second;
        if (D.y(z) < yb && usable(z) && parent[z] == -2) {
          parent[z] = w;
          queue.push_back(z);
        }
      }
    }
  }
  return std::nullopt;
}

bool is_dangerous(const PlanarDiagram& D, int x0, int a, int /*b*/) {
  if (!(D.y(a) < D.y(x0))) return false;
  return sees_side(side_seen(D, a, x0), Side::left);
}

StrictAltCycle rotate_topmost_b(const PlanarDiagram& D, const StrictAltCycle& cycle) {
  std::size_t top = 0;
  for (std::size_t i = 1; i < cycle.pairs.size(); ++i)
    if (D.y(cycle.pairs[i].second) > D.y(cycle.pairs[top].second)) top = i;
  StrictAltCycle r;
  for (std::size_t i = 0; i < cycle.pairs.size(); ++i) r.pairs.push_back(cycle.pairs[(top + i) % cycle.pairs.size()]);
  return r;
}

std::optional<int> special_pair_index(const PlanarDiagram& D, const StrictAltCycle& cycle) {
  const int k = static_cast<int>(cycle.pairs.size());
  for (int j = 0; j < k; ++j) {
    auto [aj, bj] = cycle.pairs[j];
    auto [an, bn] = cycle.pairs[(j + 1) % k];
    if (!(D.y(aj) < D.y(an) && D.y(bn) < D.y(bj))) continue;
    if (D.poset.leq(aj, an)) throw DegenerateWalk("walk from " + D.poset.name(aj) + " passes through " + D.poset.name(an));
    const Rational& Y = D.y(an);
    auto to_next = line_crossings(D, aj, Y, Direction::up, ReachFilter::must_reach_element(bn));
    auto to_line = line_crossings(D, aj, Y, Direction::up, ReachFilter::must_reach_level(D.y(bj)));
    bool right_of_all = std::all_of(to_next.xs.begin(), to_next.xs.end(), [&](const Rational& x) { return x < D.x(an); });
    bool left_of_all = std::all_of(to_line.xs.begin(), to_line.xs.end(), [&](const Rational& x) { return x > D.x(an); });
    if (right_of_all && left_of_all) return j;
  }
  return std::nullopt;
}

std::vector<StrictAltCycle> enumerate_strict_cycles(const Poset& P, const PairSet& J, int size_cap,
                                                    std::uint64_t node_budget) {
  // Strict alternating cycles are exactly the chordless directed cycles of the
  // digraph with arcs i -> j iff x_i <= y_j. Each is rooted at its smallest index.
  const int k = static_cast<int>(J.size());
  if (size_cap < 0) size_cap = k;
  std::vector<Bits> arc(k, Bits(k));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      if (i != j && P.leq(J[i].first, J[j].second)) arc[i].set(j);
  std::vector<StrictAltCycle> out;
  std::vector<int> path;
  std::uint64_t nodes = 0;
  auto emit = [&]() {
    StrictAltCycle c;
    for (int i : path) c.pairs.push_back(J[i]);
    out.push_back(std::move(c));
  };
  auto extend = [&](auto&& self) -> void {
    if (++nodes > node_budget) throw ResourceLimit("cycle enumeration exceeded its node budget");
    const int s = path.front();
    const int last = path.back();
    if (static_cast<int>(path.size()) >= size_cap) return;
    for (auto w = arc[last].find_next(s); w != Bits::npos; w = arc[last].find_next(w)) {
      const int v = static_cast<int>(w);
      bool chord = false;
      for (std::size_t i = 0; i + 1 < path.size() && !chord; ++i)
        if (arc[path[i]][v]) chord = true;
      for (std::size_t i = 1; i < path.size() && !chord; ++i)
        if (arc[v][path[i]] || path[i] == v) chord = true;
      if (chord) continue;
      path.push_back(v);
      if (arc[v][s])
        emit();  // closing now; any longer path would carry the chord v -> s
      else
        self(self);
      path.pop_back();
    }
  };
  for (int s = 0; s < k; ++s) {
    path = {s};
    extend(extend);
  }
  return out;
}

}  // namespace posetdim
