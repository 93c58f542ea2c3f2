#include "posetdim/poset.hpp"

#include <algorithm>
#include <queue>

namespace posetdim {

Bits to_bits(int n, const ElementSet& X) {
  Bits b(n);
  for (int x : X) b.set(x);
  return b;
}

ElementSet to_set(const Bits& b) {
  ElementSet out;
  for (auto i = b.find_first(); i != Bits::npos; i = b.find_next(i)) out.push_back(static_cast<int>(i));
  return out;
}

Poset Poset::from_relations(int n, const std::vector<Pair>& rel, Mode) {
  if (n < 0) throw InvalidId("negative element count");
  Poset P;
  P.n_ = n;
  P.up_.assign(n, Bits(n));
  for (int i = 0; i < n; ++i) P.up_[i].set(i);
  for (auto [a, b] : rel) {
    if (a < 0 || a >= n || b < 0 || b >= n)
      throw InvalidId("relation (" + std::to_string(a) + "," + std::to_string(b) + ") out of range");
    P.up_[a].set(b);
  }
  // Warshall closure on rows.
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      if (i != k && P.up_[i][k]) P.up_[i] |= P.up_[k];
  P.down_.assign(n, Bits(n));
  for (int i = 0; i < n; ++i)
    for (auto j = P.up_[i].find_first(); j != Bits::npos; j = P.up_[i].find_next(j)) {
      if (static_cast<int>(j) != i && P.up_[j][i])
        throw CyclicRelation("elements " + std::to_string(i) + " and " + std::to_string(j) +
                             " lie on a common cycle");
      P.down_[j].set(i);
    }
  return P;
}

Poset Poset::antichain(int n) { return from_relations(n, {}); }

Poset Poset::chain(int n) {
  std::vector<Pair> rel;
  for (int i = 0; i + 1 < n; ++i) rel.emplace_back(i, i + 1);
  return from_relations(n, rel);
}

void Poset::check_id(int x) const {
  if (x < 0 || x >= n_) throw InvalidId("element id " + std::to_string(x) + " out of range");
}

const std::string& Poset::label(int x) const {
  static const std::string empty;
  check_id(x);
  return labels_.empty() ? empty : labels_[x];
}

std::string Poset::name(int x) const {
  const auto& l = label(x);
  return l.empty() ? std::to_string(x) : l;
}

void Poset::set_label(int x, std::string s) {
  check_id(x);
  if (labels_.empty()) labels_.assign(n_, "");
  labels_[x] = std::move(s);
}

void Poset::set_labels(std::vector<std::string> labels) {
  if (!labels.empty() && static_cast<int>(labels.size()) != n_) throw InvalidId("label count mismatch");
  labels_ = std::move(labels);
}

std::optional<int> Poset::find(const std::string& label) const {
  for (int i = 0; i < static_cast<int>(labels_.size()); ++i)
    if (labels_[i] == label) return i;
  return std::nullopt;
}

int SubposetView::local(int parent_id) const {
  auto it = std::lower_bound(members.begin(), members.end(), parent_id);
  if (it == members.end() || *it != parent_id) return -1;
  return static_cast<int>(it - members.begin());
}

SubposetView induced_subposet(const Poset& P, const ElementSet& members) {
  SubposetView v;
  v.members = members;
  std::sort(v.members.begin(), v.members.end());
  v.members.erase(std::unique(v.members.begin(), v.members.end()), v.members.end());
  for (int x : v.members) P.check_id(x);
  const int m = static_cast<int>(v.members.size());
  std::vector<Pair> rel;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (i != j && P.leq(v.members[i], v.members[j])) rel.emplace_back(i, j);
  v.poset = Poset::from_relations(m, rel, Poset::Mode::full);
  if (P.has_labels()) {
    std::vector<std::string> labels;
    for (int x : v.members) labels.push_back(P.label(x));
    v.poset.set_labels(std::move(labels));
  }
  return v;
}

std::vector<Pair> cover_relations(const Poset& P) {
  std::vector<Pair> out;
  const int n = P.size();
  for (int a = 0; a < n; ++a) {
    Bits above = P.up(a);
    above.reset(a);
    // b covers a iff nothing in above \ {b} lies below b.
    for (auto b = above.find_first(); b != Bits::npos; b = above.find_next(b)) {
      Bits between = above & P.down(static_cast<int>(b));
      between.reset(b);
      if (between.none()) out.emplace_back(a, static_cast<int>(b));
    }
  }
  return out;
}

namespace {

// Longest chain ending at each element, following any topological order.
std::vector<int> chain_depth(const Poset& P, std::vector<int>* pred = nullptr) {
  auto order = *topological_order(P);
  std::vector<int> depth(P.size(), 1);
  if (pred) pred->assign(P.size(), -1);
  for (int v : order)
    for (auto u = P.down(v).find_first(); u != Bits::npos; u = P.down(v).find_next(u))
      if (static_cast<int>(u) != v && depth[u] + 1 > depth[v]) {
        depth[v] = depth[u] + 1;
        if (pred) (*pred)[v] = static_cast<int>(u);
      }
  return depth;
}

}  // namespace

int height(const Poset& P) {
  if (P.size() == 0) return 0;
  auto d = chain_depth(P);
  return *std::max_element(d.begin(), d.end());
}

std::vector<int> longest_chain(const Poset& P) {
  if (P.size() == 0) return {};
  std::vector<int> pred;
  auto d = chain_depth(P, &pred);
  int v = static_cast<int>(std::max_element(d.begin(), d.end()) - d.begin());
  std::vector<int> chain;
  for (; v != -1; v = pred[v]) chain.push_back(v);
  std::reverse(chain.begin(), chain.end());
  return chain;
}

int width(const Poset& P) {
  // Dilworth: width = n - maximum matching in the split graph of <.
  const int n = P.size();
  std::vector<int> match_right(n, -1);
  auto try_kuhn = [&](auto&& self, int u, std::vector<char>& seen) -> bool {
    for (int v = 0; v < n; ++v) {
      if (!P.less(u, v) || seen[v]) continue;
      seen[v] = 1;
      if (match_right[v] == -1 || self(self, match_right[v], seen)) {
        match_right[v] = u;
        return true;
      }
    }
    return false;
  };
  int matching = 0;
  for (int u = 0; u < n; ++u) {
    std::vector<char> seen(n, 0);
    if (try_kuhn(try_kuhn, u, seen)) ++matching;
  }
  return n - matching;
}

ElementSet min_elements(const Poset& P) {
  ElementSet out;
  for (int x = 0; x < P.size(); ++x)
    if (P.down(x).count() == 1) out.push_back(x);
  return out;
}

ElementSet max_elements(const Poset& P) {
  ElementSet out;
  for (int x = 0; x < P.size(); ++x)
    if (P.up(x).count() == 1) out.push_back(x);
  return out;
}

ElementSet upset(const Poset& P, const ElementSet& X) {
  Bits b(P.size());
  for (int x : X) {
    P.check_id(x);
    b |= P.up(x);
  }
  return to_set(b);
}

ElementSet downset(const Poset& P, const ElementSet& X) {
  Bits b(P.size());
  for (int x : X) {
    P.check_id(x);
    b |= P.down(x);
  }
  return to_set(b);
}

SubposetView convex_hull(const Poset& P, const ElementSet& X) {
  Bits members = to_bits(P.size(), upset(P, X)) & to_bits(P.size(), downset(P, X));
  return induced_subposet(P, to_set(members));
}

bool is_convex(const Poset& P, const ElementSet& X) {
  Bits in = to_bits(P.size(), X);
  Bits hull = to_bits(P.size(), upset(P, X)) & to_bits(P.size(), downset(P, X));
  return hull == in;
}

Poset dual(const Poset& P) {
  std::vector<Pair> rel;
  for (int a = 0; a < P.size(); ++a)
    for (auto b = P.up(a).find_first(); b != Bits::npos; b = P.up(a).find_next(b))
      if (static_cast<int>(b) != a) rel.emplace_back(static_cast<int>(b), a);
  Poset D = Poset::from_relations(P.size(), rel, Poset::Mode::full);
  D.set_labels(P.labels());
  return D;
}

std::vector<ElementSet> components(const Poset& P) {
  // Comparability and cover graphs have the same components.
  const int n = P.size();
  std::vector<int> comp(n, -1);
  std::vector<ElementSet> out;
  for (int s = 0; s < n; ++s) {
    if (comp[s] != -1) continue;
    ElementSet members;
    std::vector<int> stack{s};
    comp[s] = static_cast<int>(out.size());
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      members.push_back(v);
      Bits nb = P.up(v) | P.down(v);
      for (auto w = nb.find_first(); w != Bits::npos; w = nb.find_next(w))
        if (comp[w] == -1) {
          comp[w] = comp[s];
          stack.push_back(static_cast<int>(w));
        }
    }
    std::sort(members.begin(), members.end());
    out.push_back(std::move(members));
  }
  return out;
}

bool is_connected(const Poset& P) { return components(P).size() <= 1; }

void for_each_linear_extension(const Poset& P, std::uint64_t budget,
                               const std::function<bool(const std::vector<int>&)>& visit) {
  const int n = P.size();
  std::vector<int> indeg(n, 0);
  for (int x = 0; x < n; ++x) indeg[x] = static_cast<int>(P.down(x).count()) - 1;
  std::vector<int> order;
  order.reserve(n);
  std::vector<char> used(n, 0);
  std::uint64_t produced = 0;
  bool stop = false;
  auto rec = [&](auto&& self) -> void {
    if (stop) return;
    if (static_cast<int>(order.size()) == n) {
      if (++produced > budget) throw ResourceLimit("linear extension budget exhausted");
      if (!visit(order)) stop = true;
      return;
    }
    for (int x = 0; x < n && !stop; ++x) {
      if (used[x] || indeg[x] != 0) continue;
      used[x] = 1;
      order.push_back(x);
      for (auto y = P.up(x).find_first(); y != Bits::npos; y = P.up(x).find_next(y))
        if (static_cast<int>(y) != x) --indeg[y];
      self(self);
      for (auto y = P.up(x).find_first(); y != Bits::npos; y = P.up(x).find_next(y))
        if (static_cast<int>(y) != x) ++indeg[y];
      order.pop_back();
      used[x] = 0;
    }
  };
  rec(rec);
}

std::vector<std::vector<int>> linear_extensions(const Poset& P, std::uint64_t budget) {
  std::vector<std::vector<int>> out;
  for_each_linear_extension(P, budget, [&](const std::vector<int>& L) {
    out.push_back(L);
    return true;
  });
  return out;
}

bool is_linear_extension(const Poset& P, const std::vector<int>& order) {
  const int n = P.size();
  if (static_cast<int>(order.size()) != n) return false;
  std::vector<int> pos(n, -1);
  for (int i = 0; i < n; ++i) {
    if (order[i] < 0 || order[i] >= n || pos[order[i]] != -1) return false;
    pos[order[i]] = i;
  }
  for (int a = 0; a < n; ++a)
    for (auto b = P.up(a).find_first(); b != Bits::npos; b = P.up(a).find_next(b))
      if (pos[a] > pos[b]) return false;
  return true;
}

std::optional<std::vector<int>> topological_order(const Poset& P, const std::vector<Pair>& extra) {
  const int n = P.size();
  std::vector<std::vector<int>> succ(n);
  std::vector<int> indeg(n, 0);
  for (auto [a, b] : cover_relations(P)) {
    succ[a].push_back(b);
    ++indeg[b];
  }
  for (auto [a, b] : extra) {
    succ[a].push_back(b);
    ++indeg[b];
  }
  std::priority_queue<int, std::vector<int>, std::greater<>> ready;
  for (int x = 0; x < n; ++x)
    if (indeg[x] == 0) ready.push(x);
  std::vector<int> order;
  while (!ready.empty()) {
    int x = ready.top();
    ready.pop();
    order.push_back(x);
    for (int y : succ[x])
      if (--indeg[y] == 0) ready.push(y);
  }
  if (static_cast<int>(order.size()) != n) return std::nullopt;
  return order;
}

}  // namespace posetdim
