#include "posetdim/unfolding.hpp"

#include <algorithm>

namespace posetdim {

namespace {

bool contains(const ElementSet& s, int x) { return std::binary_search(s.begin(), s.end(), x); }

const ElementSet& set_at(const std::vector<ElementSet>& v, int i) {
  static const ElementSet empty;
  return i >= 0 && i < static_cast<int>(v.size()) ? v[i] : empty;
}

bool bit_at(const std::vector<Bits>& v, int i, int x) { return i >= 0 && i < static_cast<int>(v.size()) && v[i][x]; }

}  // namespace

UnfoldingSequence unfold(const Poset& P, int x0) {
  P.check_id(x0);
  if (P.size() < 2) throw PreconditionFailed("unfolding needs at least two elements");
  if (!is_connected(P)) throw NotConnected("unfolding needs a connected poset");
  const ElementSet mins = min_elements(P), maxs = max_elements(P);
  const bool from_min = contains(mins, x0);
  if (!from_min && !contains(maxs, x0)) throw BadBase("base element must be minimal or maximal");

  UnfoldingSequence U;
  U.poset = P;
  U.x0 = x0;
  const int n = P.size();
  std::vector<char> used(n, 0);
  U.B.push_back({});
  if (from_min) {
    U.A.push_back({x0});
    used[x0] = 1;
    ElementSet b1;
    for (int b : maxs)
      if (P.leq(x0, b)) b1.push_back(b);
    U.B.push_back(b1);
  } else {
    U.A.push_back({});
    U.B.push_back({x0});
  }
  for (int b : U.B[1]) used[b] = 1;
  for (int i = 1;; ++i) {
    ElementSet ai, bn;
    for (int a : mins)
      if (!used[a] && std::any_of(U.B[i].begin(), U.B[i].end(), [&](int b) { return P.leq(a, b); })) ai.push_back(a);
    for (int a : ai) used[a] = 1;
    for (int b : maxs)
      if (!used[b] && std::any_of(ai.begin(), ai.end(), [&](int a) { return P.leq(a, b); })) bn.push_back(b);
    for (int b : bn) used[b] = 1;
    U.A.push_back(ai);
    U.B.push_back(bn);
    if (ai.empty() && bn.empty()) break;
  }
  // Keep one trailing empty A and B.
  while (U.A.size() >= 2 && U.A.back().empty() && U.A[U.A.size() - 2].empty() && U.B.back().empty()) {
    U.A.pop_back();
    U.B.pop_back();
  }

  for (const auto& a : U.A) U.up_a.push_back(to_bits(n, upset(P, a)));
  for (const auto& b : U.B) U.down_b.push_back(to_bits(n, downset(P, b)));
  U.alpha.assign(n, -1);
  U.beta.assign(n, -1);
  for (int x = 0; x < n; ++x) {
    for (int i = 0; i < static_cast<int>(U.up_a.size()) && U.alpha[x] < 0; ++i)
      if (U.up_a[i][x]) U.alpha[x] = i;
    for (int j = 1; j < static_cast<int>(U.down_b.size()) && U.beta[x] < 0; ++j)
      if (U.down_b[j][x]) U.beta[x] = j;
  }
  assign_parents(U);
  return U;
}

std::vector<std::string> unfolding_violations(const UnfoldingSequence& U) {
  const Poset& P = U.poset;
  const int n = P.size();
  std::vector<std::string> bad;
  ElementSet as, bs;
  for (const auto& a : U.A) as.insert(as.end(), a.begin(), a.end());
  for (const auto& b : U.B) bs.insert(bs.end(), b.begin(), b.end());
  std::sort(as.begin(), as.end());
  std::sort(bs.begin(), bs.end());
  if (as != min_elements(P)) bad.push_back("A-sets do not partition the minimal elements");
  if (bs != max_elements(P)) bad.push_back("B-sets do not partition the maximal elements");
  if (!U.A[0].empty() && U.A[0] != ElementSet{U.x0}) bad.push_back("A_0 is neither empty nor the base");
  const int m = static_cast<int>(U.B.size());
  for (int x = 0; x < n; ++x) {
    std::string who = "element " + P.name(x);
    for (int i = 0; i < static_cast<int>(U.up_a.size()); ++i) {
      if (!U.up_a[i][x]) continue;
      std::vector<int> allowed = i == 0 ? std::vector<int>{1} : std::vector<int>{i, i + 1};
      bool some = false;
      for (int j = 1; j < m; ++j) {
        bool in = U.down_b[j][x];
        bool ok = std::find(allowed.begin(), allowed.end(), j) != allowed.end();
        if (in && !ok) bad.push_back(who + " is in Up(A_" + std::to_string(i) + ") and D(B_" + std::to_string(j) + ")");
        some = some || (in && ok);
      }
      if (!some) bad.push_back(who + " in Up(A_" + std::to_string(i) + ") misses the allowed downsets");
    }
    for (int j = 1; j < m; ++j) {
      if (!U.down_b[j][x]) continue;
      bool some = false;
      for (int i = 0; i < static_cast<int>(U.up_a.size()); ++i) {
        bool in = U.up_a[i][x];
        bool ok = i == j - 1 || i == j;
        if (in && !ok) bad.push_back(who + " is in D(B_" + std::to_string(j) + ") and Up(A_" + std::to_string(i) + ")");
        some = some || (in && ok);
      }
      if (!some) bad.push_back(who + " in D(B_" + std::to_string(j) + ") misses the allowed upsets");
    }
    if (x == U.x0) continue;
    if (U.alpha[x] < 0 || U.beta[x] < 0) {
      bad.push_back(who + " has no alpha or beta");
      continue;
    }
    if (U.beta[x] != U.alpha[x] && U.beta[x] != U.alpha[x] + 1) bad.push_back(who + " has beta outside {alpha, alpha+1}");
    int p = U.parent.empty() ? -1 : U.parent[x];
    if (p >= 0 && (U.alpha[p] > U.alpha[x] || U.beta[p] > U.beta[x]))
      bad.push_back(who + ": alpha or beta increases towards the base");
  }
  return bad;
}

ZigzagTree assign_parents(UnfoldingSequence& U) {
  const Poset& P = U.poset;
  const int n = P.size();
  std::vector<std::vector<int>> up_cov(n), down_cov(n);
  for (auto [a, b] : cover_relations(P)) {
    up_cov[a].push_back(b);
    down_cov[b].push_back(a);
  }
  ZigzagTree T;
  T.parent.assign(n, -1);
  for (int x = 0; x < n; ++x) {
    if (x == U.x0) continue;
    const int i = U.alpha[x];
    int choice = -1;
    if (U.beta[x] == i) {
      for (int y : up_cov[x])
        if (bit_at(U.down_b, i, y) && (choice < 0 || y < choice)) choice = y;
    } else if (U.beta[x] == i + 1) {
      for (int y : down_cov[x])
        if (bit_at(U.up_a, i, y) && (choice < 0 || y < choice)) choice = y;
    }
    if (choice < 0) throw FalsifiedClaim("element " + P.name(x) + " has no valid parent");
    T.parent[x] = choice;
    T.edges.emplace_back(x, choice);
  }
  // Parent pointers must reach the base without repeating.
  for (int x = 0; x < n; ++x) {
    int steps = 0;
    for (int y = x; y != U.x0; y = T.parent[y])
      if (++steps > n) throw FalsifiedClaim("parent pointers contain a cycle");
  }
  U.parent = T.parent;
  return T;
}

int zigzag_applicable(const UnfoldingSequence& U, int x) {
  int count = 0;
  for (int i = 1; i < static_cast<int>(U.B.size()); ++i)
    if (bit_at(U.up_a, i - 1, x) && bit_at(U.up_a, i, x) && bit_at(U.down_b, i, x)) ++count;
  return count;
}

std::vector<int> zigzag_path(const UnfoldingSequence& U, int x) {
  const Poset& P = U.poset;
  P.check_id(x);
  std::vector<int> path;
  for (int y = x; y != -1; y = U.parent[y]) {
    path.push_back(y);
    if (static_cast<int>(path.size()) > P.size()) throw FalsifiedClaim("zig-zag path does not reach the base");
  }
  std::reverse(path.begin(), path.end());
  if (path.front() != U.x0) throw FalsifiedClaim("zig-zag path does not start at the base");

  for (int i = 1; i < static_cast<int>(U.B.size()); ++i) {
    if (!(bit_at(U.up_a, i - 1, x) && bit_at(U.up_a, i, x) && bit_at(U.down_b, i, x))) continue;
    std::string where = " for " + P.name(x) + " at index " + std::to_string(i);
    ElementSet in_up, in_down;
    for (int y : path) {
      if (U.up_a[i][y]) in_up.push_back(y);
      if (U.down_b[i][y]) in_down.push_back(y);
    }
    for (int y : in_up) {
      if (!P.leq(y, x)) throw FalsifiedClaim("trace in Up(A_i) is not a chain topped by the element" + where);
      if (!bit_at(U.up_a, i - 1, y)) throw FalsifiedClaim("trace in Up(A_i) leaves Up(A_{i-1})" + where);
    }
    for (std::size_t p = 0; p < in_up.size(); ++p)
      for (std::size_t q = p + 1; q < in_up.size(); ++q)
        if (!P.comparable(in_up[p], in_up[q])) throw FalsifiedClaim("trace in Up(A_i) is not a chain" + where);
    int minimal = 0;
    for (int y : in_down)
      if (std::none_of(in_down.begin(), in_down.end(), [&](int z) { return P.less(z, y); })) ++minimal;
    if (minimal != 1) throw FalsifiedClaim("trace in D(B_i) has " + std::to_string(minimal) + " minimal elements" + where);
  }
  return path;
}

UnfoldingWitness verify_unfolding_lemma(const Poset& P, int x0, Budget budget) {
  auto U = unfold(P, x0);
  UnfoldingWitness w;
  w.dim_ab = dim_AB(P, min_elements(P), max_elements(P), budget).value;
  if (w.dim_ab < 2) throw PreconditionFailed("dim(Min, Max) is below 2");
  for (int i = 0; i < U.length(); ++i)
    for (int j : {i, i + 1}) {
      if (j < 1) continue;
      int d = dim_AB(P, set_at(U.A, i), set_at(U.B, j), budget).value;
      if (2 * d >= w.dim_ab) {
        w.i = i;
        w.j = j;
        w.dim_local = d;
        return w;
      }
    }
  throw FalsifiedClaim("no index of the unfolding keeps half of dim(Min, Max)");
}

Core find_core(const Poset& P, int x0, Budget budget) {
  auto U = unfold(P, x0);
  auto w = verify_unfolding_lemma(P, x0, budget);
  if (w.dim_ab < 6) throw PreconditionFailed("a core needs dim(Min, Max) >= 6");
  ElementSet seed = set_at(U.A, w.i);
  const auto& bj = set_at(U.B, w.j);
  seed.insert(seed.end(), bj.begin(), bj.end());
  std::sort(seed.begin(), seed.end());
  auto hull = convex_hull(P, seed);
  for (const auto& comp : components(hull.poset)) {
    auto sub = induced_subposet(hull.poset, comp);
    int d = dim_AB(sub.poset, min_elements(sub.poset), max_elements(sub.poset), budget).value;
    if (d != w.dim_local) continue;
    Core c;
    for (int local : comp) c.members.push_back(hull.members[local]);
    c.poset = induced_subposet(P, c.members).poset;
    c.source_index = w.i;
    c.facing = w.j == w.i ? Facing::left : Facing::right;
    c.minmax_dim = d;
    c.parent_minmax_dim = w.dim_ab;

    auto fail = [&](const std::string& s) { throw FalsifiedClaim("core check failed: " + s); };
    if (!is_connected(c.poset)) fail("not connected");
    if (!is_convex(P, c.members)) fail("not convex");
    ElementSet mins, maxs;
    for (int x : min_elements(c.poset)) mins.push_back(c.members[x]);
    for (int x : max_elements(c.poset)) maxs.push_back(c.members[x]);
    Bits span = to_bits(P.size(), upset(P, mins)) & to_bits(P.size(), downset(P, maxs));
    if (to_set(span) != c.members) fail("element set differs from Up(Min) and D(Max)");
    if (2 * d < w.dim_ab) fail("dimension dropped below half");
    for (int a : mins)
      if (!contains(set_at(U.A, w.i), a)) fail("a minimal element lies outside A_i");
    for (int b : maxs)
      if (!contains(bj, b)) fail("a maximal element lies outside B_j");
    return c;
  }
  throw FalsifiedClaim("no component of the hull attains dim(A_i, B_j)");
}

}  // namespace posetdim
