#include "posetdim/dimension.hpp"

#include <algorithm>
#include <numeric>

namespace posetdim {

PairSet incomparable_pairs(const Poset& P) {
  PairSet out;
  for (int x = 0; x < P.size(); ++x)
    for (int y = 0; y < P.size(); ++y)
      if (x != y && P.incomparable(x, y)) out.emplace_back(x, y);
  return out;
}

PairSet inc_between(const Poset& P, const ElementSet& A, const ElementSet& B) {
  PairSet out;
  for (int a : A) {
    P.check_id(a);
    for (int b : B) {
      P.check_id(b);
      if (a != b && P.incomparable(a, b)) out.emplace_back(a, b);
    }
  }
  return out;
}

PairSet critical_pairs(const Poset& P) {
  // (x,y) is critical when D(x) - x is inside D(y) and U(y) - y inside U(x).
  PairSet out;
  for (int x = 0; x < P.size(); ++x)
    for (int y = 0; y < P.size(); ++y) {
      if (x == y || !P.incomparable(x, y)) continue;
      Bits dx = P.down(x);
      dx.reset(x);
      Bits uy = P.up(y);
      uy.reset(y);
      if (dx.is_subset_of(P.down(y)) && uy.is_subset_of(P.up(x))) out.emplace_back(x, y);
    }
  return out;
}

bool is_strict_alt_cycle(const Poset& P, const StrictAltCycle& c) {
  const int k = static_cast<int>(c.pairs.size());
  if (k < 2) return false;
  for (int i = 0; i < k; ++i) {
    auto [x, y] = c.pairs[i];
    if (x < 0 || y < 0 || x >= P.size() || y >= P.size() || !P.incomparable(x, y)) return false;
    for (int j = 0; j < k; ++j) {
      if (j != i && (c.pairs[j].first == x || c.pairs[j].second == y)) return false;
      bool want = j == (i + 1) % k;
      if (P.leq(x, c.pairs[j].second) != want) return false;
    }
  }
  return true;
}

namespace {

void require_incomparable(const Poset& P, const PairSet& I) {
  for (auto [x, y] : I) {
    P.check_id(x);
    P.check_id(y);
    if (x == y || !P.incomparable(x, y))
      throw PairNotIncomparable("pair (" + P.name(x) + "," + P.name(y) + ") is not incomparable");
  }
}

std::vector<Pair> reversed(const PairSet& I) {
  std::vector<Pair> r;
  r.reserve(I.size());
  for (auto [x, y] : I) r.emplace_back(y, x);
  return r;
}

// Shortest directed cycle in the digraph with arcs i -> j iff x_i <= y_j.
std::optional<StrictAltCycle> shortest_alternating_cycle(const Poset& P, const PairSet& I) {
  const int k = static_cast<int>(I.size());
  std::vector<Bits> out(k, Bits(k));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      if (P.leq(I[i].first, I[j].second)) out[i].set(j);
  std::vector<int> best;
  for (int s = 0; s < k; ++s) {
    // BFS from s; a cycle through s closes on an arc back into s.
    std::vector<int> parent(k, -1);
    std::vector<int> frontier{s};
    Bits seen(k);
    seen.set(s);
    bool found = false;
    int depth = 0;
    while (!frontier.empty() && !found) {
      ++depth;
      if (!best.empty() && depth >= static_cast<int>(best.size())) break;
      std::vector<int> next;
      for (int u : frontier) {
        if (out[u][s]) {
          std::vector<int> cyc;
          for (int v = u; v != -1; v = parent[v]) cyc.push_back(v);
          std::reverse(cyc.begin(), cyc.end());
          best = cyc;
          found = true;
          break;
        }
        Bits fresh = out[u] - seen;
        for (auto v = fresh.find_first(); v != Bits::npos; v = fresh.find_next(v)) {
          seen.set(v);
          parent[v] = u;
          next.push_back(static_cast<int>(v));
        }
      }
      frontier = std::move(next);
    }
    if (best.size() == 2) break;
  }
  if (best.empty()) return std::nullopt;
  StrictAltCycle c;
  for (int i : best) c.pairs.push_back(I[i]);
  return c;
}

}  // namespace

Reversibility is_reversible(const Poset& P, const PairSet& I) {
  require_incomparable(P, I);
  Reversibility r;
  if (auto order = topological_order(P, reversed(I))) {
    r.reversible = true;
    r.extension = std::move(*order);
    return r;
  }
  r.cycle = shortest_alternating_cycle(P, I);
  if (!r.cycle || !is_strict_alt_cycle(P, *r.cycle))
    throw FalsifiedClaim("irreversible pair set without a strict alternating cycle");
  return r;
}

bool reverses_all(const Poset& P, const std::vector<int>& extension, const PairSet& I) {
  if (!is_linear_extension(P, extension)) return false;
  std::vector<int> pos(P.size());
  for (int i = 0; i < P.size(); ++i) pos[extension[i]] = i;
  for (auto [x, y] : I)
    if (pos[y] > pos[x]) return false;
  return true;
}

namespace {

using Clock = std::chrono::steady_clock;

struct OutOfTime {};

// Backtracking partition of a pair set into t reversible classes. Each class
// keeps the closure of P plus its reversed pairs; a pair (x,y) fits class c
// iff x is not below y there.
class PartitionSearch {
 public:
  PartitionSearch(const Poset& P, const PairSet& I, Clock::time_point deadline)
      : P_(P), I_(I), deadline_(deadline), n_(P.size()), k_(static_cast<int>(I.size())) {
    degree_.assign(k_, 0);
    for (int i = 0; i < k_; ++i)
      for (int j = 0; j < k_; ++j)
        if (i != j) {
          if (P.leq(I[i].first, I[j].second)) ++degree_[i];
          if (P.leq(I[j].first, I[i].second)) ++degree_[i];
        }
  }

  int clique_lower_bound() const {
    // Pairs that form 2-cycles must go to distinct classes.
    std::vector<int> order(k_);
    std::iota(order.begin(), order.end(), 0);
    std::vector<int> cdeg(k_, 0);
    for (int i = 0; i < k_; ++i)
      for (int j = 0; j < k_; ++j)
        if (i != j && conflict(i, j)) ++cdeg[i];
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return cdeg[a] > cdeg[b]; });
    int best = k_ > 0 ? 1 : 0;
    for (int start = 0; start < std::min(k_, 64); ++start) {
      std::vector<int> clique{order[start]};
      for (int v : order) {
        if (v == order[start]) continue;
        bool ok = true;
        for (int u : clique)
          if (!conflict(u, v)) {
            ok = false;
            break;
          }
        if (ok) clique.push_back(v);
      }
      best = std::max(best, static_cast<int>(clique.size()));
    }
    return best;
  }

  // Greedy fail-first assignment with unlimited classes.
  IncPairPartition greedy() {
    reset(k_);
    while (true) {
      int pick = -1, pick_count = 0;
      choose(k_, pick, pick_count);
      if (pick == -1) break;
      int target = used_;
      for (int c = 0; c < used_; ++c)
        if (fits(pick, c)) {
          target = c;
          break;
        }
      if (target == used_) ++used_;
      add(pick, target);
    }
    return extract();
  }

  std::optional<IncPairPartition> solve(int t) {
    reset(t);
    if (search(t)) return extract();
    return std::nullopt;
  }

 private:
  bool conflict(int i, int j) const {
    return P_.leq(I_[i].first, I_[j].second) && P_.leq(I_[j].first, I_[i].second);
  }

  void reset(int t) {
    cls_.assign(t, std::vector<Bits>(P_.size()));
    for (auto& c : cls_)
      for (int u = 0; u < n_; ++u) c[u] = P_.up(u);
    assign_.assign(k_, -1);
    used_ = 0;
    undo_.clear();
  }

  bool fits(int p, int c) const { return !cls_[c][I_[p].first][I_[p].second]; }
  bool implied(int p, int c) const { return cls_[c][I_[p].second][I_[p].first]; }

  // Fail-first choice among open pairs: fewest feasible classes, then highest
  // arc degree, then lowest index. pick = -1 when every pair is settled.
  bool choose(int t, int& pick, int& pick_count) const {
    pick = -1;
    pick_count = 0;
    for (int p = 0; p < k_; ++p) {
      if (assign_[p] != -1) continue;
      bool done = false;
      int count = 0;
      for (int c = 0; c < used_; ++c) {
        if (implied(p, c)) {
          done = true;
          break;
        }
        if (fits(p, c)) ++count;
      }
      if (done) continue;
      if (used_ < t) ++count;
      if (count == 0) {
        pick = p;
        pick_count = 0;
        return false;
      }
      if (pick == -1 || count < pick_count || (count == pick_count && degree_[p] > degree_[pick])) {
        pick = p;
        pick_count = count;
      }
    }
    return true;
  }

  void add(int p, int c) {
    auto [x, y] = I_[p];
    assign_[p] = c;
    auto& rows = cls_[c];
    const Bits& top = rows[x];
    Bits add_row = top;  // copy: rows[x] itself may change below
    for (int u = 0; u < n_; ++u)
      if (rows[u][y] && !add_row.is_subset_of(rows[u])) {
        undo_.push_back({c, u, rows[u]});
        rows[u] |= add_row;
      }
  }

  struct Saved {
    int c;
    int u;
    Bits row;
  };

  void rollback(std::size_t mark) {
    while (undo_.size() > mark) {
      auto& s = undo_.back();
      cls_[s.c][s.u] = std::move(s.row);
      undo_.pop_back();
    }
  }

  bool search(int t) {
    if ((++nodes_ & 1023) == 0 && Clock::now() > deadline_) throw OutOfTime{};
    int pick, count;
    if (!choose(t, pick, count)) return false;
    if (pick == -1) return true;
    const int limit = std::min(used_ + 1, t);
    for (int c = 0; c < limit; ++c) {
      if (c < used_ && !fits(pick, c)) continue;
      const std::size_t mark = undo_.size();
      const int used_before = used_;
      if (c == used_) ++used_;
      add(pick, c);
      if (search(t)) return true;
      assign_[pick] = -1;
      rollback(mark);
      used_ = used_before;
    }
    return false;
  }

  IncPairPartition extract() const {
    IncPairPartition part;
    part.classes.assign(used_, {});
    for (int p = 0; p < k_; ++p) {
      int c = assign_[p];
      if (c == -1)
        for (int d = 0; d < used_ && c == -1; ++d)
          if (implied(p, d)) c = d;
      part.classes[c].push_back(I_[p]);
    }
    for (auto& cl : part.classes) {
      auto order = topological_order(P_, reversed(cl));
      if (!order) throw FalsifiedClaim("class closure became cyclic");
      part.witnesses.push_back(std::move(*order));
    }
    return part;
  }

  const Poset& P_;
  const PairSet& I_;
  Clock::time_point deadline_;
  int n_;
  int k_;
  std::vector<int> degree_;
  std::vector<std::vector<Bits>> cls_;
  std::vector<int> assign_;
  int used_ = 0;
  std::vector<Saved> undo_;
  std::uint64_t nodes_ = 0;
};

}  // namespace

DimResult dim_of_set(const Poset& P, const PairSet& I, Budget budget) {
  require_incomparable(P, I);
  DimResult r;
  if (I.empty()) {
    r.value = 1;
    r.partition.classes.push_back({});
    r.partition.witnesses.push_back(*topological_order(P));
    return r;
  }
  const auto deadline = Clock::now() + budget.time;
  PartitionSearch search(P, I, deadline);
  IncPairPartition best = search.greedy();
  int upper = static_cast<int>(best.classes.size());
  int lower = search.clique_lower_bound();
  try {
    for (int t = lower; t < upper; ++t) {
      if (auto part = search.solve(t)) {
        best = std::move(*part);
        upper = t;
        break;
      }
      lower = t + 1;
    }
  } catch (const OutOfTime&) {
    throw ResourceLimit("dimension search exceeded its time budget", lower, upper);
  }
  r.value = upper;
  r.partition = std::move(best);
  if (!is_valid_partition(P, I, r.partition)) throw FalsifiedClaim("solver produced an invalid partition");
  return r;
}

bool is_valid_partition(const Poset& P, const PairSet& I, const IncPairPartition& part) {
  if (part.classes.size() != part.witnesses.size()) return false;
  PairSet all;
  for (std::size_t c = 0; c < part.classes.size(); ++c) {
    if (!reverses_all(P, part.witnesses[c], part.classes[c])) return false;
    all.insert(all.end(), part.classes[c].begin(), part.classes[c].end());
  }
  PairSet want = I;
  std::sort(all.begin(), all.end());
  std::sort(want.begin(), want.end());
  want.erase(std::unique(want.begin(), want.end()), want.end());
  return all == want;
}

bool is_realizer(const Poset& P, const std::vector<std::vector<int>>& extensions) {
  const int n = P.size();
  if (extensions.empty()) return n == 0;
  std::vector<std::vector<int>> pos;
  for (const auto& L : extensions) {
    if (!is_linear_extension(P, L)) return false;
    std::vector<int> p(n);
    for (int i = 0; i < n; ++i) p[L[i]] = i;
    pos.push_back(std::move(p));
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (a == b || P.leq(a, b)) continue;
      // need some extension with b before a
      bool ok = false;
      for (const auto& p : pos)
        if (p[b] < p[a]) {
          ok = true;
          break;
        }
      if (!ok) return false;
    }
  return true;
}

DimensionResult dimension(const Poset& P, Budget budget) {
  DimensionResult r;
  PairSet crit = critical_pairs(P);
  DimResult d = dim_of_set(P, crit, budget);
  r.value = d.value;
  r.realizer = d.partition.witnesses;
  r.critical_partition = std::move(d.partition);
  if (!is_realizer(P, r.realizer)) throw FalsifiedClaim("realizer post-check failed");
  return r;
}

DimResult minmax_dimension(const Poset& P, Budget budget) {
  return dim_of_set(P, inc_between(P, min_elements(P), max_elements(P)), budget);
}

DimResult dim_AB(const Poset& P, const ElementSet& A, const ElementSet& B, Budget budget) {
  return dim_of_set(P, inc_between(P, A, B), budget);
}

namespace {

// Reversed-pair masks of every linear extension, deduplicated and reduced to
// the inclusion-maximal ones.
std::vector<Bits> extension_masks(const Poset& P, const PairSet& I, std::uint64_t budget) {
  std::vector<Bits> masks;
  std::vector<int> pos(P.size());
  for_each_linear_extension(P, budget, [&](const std::vector<int>& L) {
    for (int i = 0; i < P.size(); ++i) pos[L[i]] = i;
    Bits m(I.size());
    for (std::size_t k = 0; k < I.size(); ++k)
      if (pos[I[k].second] < pos[I[k].first]) m.set(k);
    masks.push_back(std::move(m));
    return true;
  });
  std::sort(masks.begin(), masks.end());
  masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
  std::vector<Bits> maximal;
  for (std::size_t i = 0; i < masks.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < masks.size() && !dominated; ++j)
      if (i != j && masks[i].is_proper_subset_of(masks[j])) dominated = true;
    if (!dominated) maximal.push_back(masks[i]);
  }
  return maximal;
}

bool cover_with(const std::vector<Bits>& masks, const Bits& covered, int left) {
  if (covered.all()) return true;
  if (left == 0) return false;
  Bits open = ~covered;
  auto first = open.find_first();
  for (const auto& m : masks)
    if (m[first] && cover_with(masks, covered | m, left - 1)) return true;
  return false;
}

int min_cover(const std::vector<Bits>& masks, std::size_t universe) {
  if (universe == 0) return 1;
  Bits none(universe);
  for (int t = 1; t <= static_cast<int>(masks.size()); ++t)
    if (cover_with(masks, none, t)) return t;
  throw FalsifiedClaim("linear extensions fail to cover the pair set");
}

}  // namespace

int brute_force_dimension(const Poset& P, std::uint64_t extension_budget) {
  PairSet I = incomparable_pairs(P);
  return min_cover(extension_masks(P, I, extension_budget), I.size());
}

int brute_force_dim_of_set(const Poset& P, const PairSet& I, std::uint64_t extension_budget) {
  require_incomparable(P, I);
  return min_cover(extension_masks(P, I, extension_budget), I.size());
}

bool brute_force_reversible(const Poset& P, const PairSet& I, std::uint64_t extension_budget) {
  require_incomparable(P, I);
  bool found = false;
  std::vector<int> pos(P.size());
  for_each_linear_extension(P, extension_budget, [&](const std::vector<int>& L) {
    for (int i = 0; i < P.size(); ++i) pos[L[i]] = i;
    found = std::all_of(I.begin(), I.end(), [&](const IncPair& p) { return pos[p.second] < pos[p.first]; });
    return !found;
  });
  return found;
}

IncPair MinMaxReduction::lift(IncPair p) const {
  int x = below[p.first] != -1 ? below[p.first] : p.first;
  int y = above[p.second] != -1 ? above[p.second] : p.second;
  return {x, y};
}

MinMaxReduction minmax_reduction(const Poset& P) {
  const int n = P.size();
  MinMaxReduction r;
  r.below.assign(n, -1);
  r.above.assign(n, -1);
  std::vector<Pair> rel = cover_relations(P);
  std::vector<std::string> labels = P.labels();
  if (labels.empty())
    for (int x = 0; x < n; ++x) labels.push_back(std::to_string(x));
  int next = n;
  for (int x = 0; x < n; ++x) {
    if (P.down(x).count() > 1) {
      r.below[x] = next++;
      rel.emplace_back(r.below[x], x);
      labels.push_back("m(" + labels[x] + ")");
    }
    if (P.up(x).count() > 1) {
      r.above[x] = next++;
      rel.emplace_back(x, r.above[x]);
      labels.push_back("M(" + labels[x] + ")");
    }
  }
  r.q = Poset::from_relations(next, rel);
  if (P.has_labels()) r.q.set_labels(std::move(labels));
  return r;
}

bool is_standard_example_witness(const Poset& P, const StandardExampleWitness& w) {
  const int k = static_cast<int>(w.a.size());
  if (k < 2 || static_cast<int>(w.b.size()) != k) return false;
  std::vector<int> all = w.a;
  all.insert(all.end(), w.b.begin(), w.b.end());
  for (int x : all)
    if (x < 0 || x >= P.size()) return false;
  std::vector<int> sorted = all;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      if (i != j && (P.comparable(w.a[i], w.a[j]) || P.comparable(w.b[i], w.b[j]))) return false;
      if (P.leq(w.b[j], w.a[i])) return false;
      if (P.leq(w.a[i], w.b[j]) != (i != j)) return false;
    }
  return true;
}

namespace {

struct CliqueSearch {
  const std::vector<Bits>& adj;
  int target;
  std::uint64_t budget;
  std::uint64_t nodes = 0;
  std::vector<int> current;

  bool expand(Bits cand) {
    if (++nodes > budget) throw ResourceLimit("standard example search exceeded its node budget");
    if (static_cast<int>(current.size()) >= target) return true;
    // Greedy colouring gives an upper bound on the clique inside cand.
    std::vector<int> order, colour;
    Bits uncoloured = cand;
    int c = 0;
    while (uncoloured.any()) {
      ++c;
      Bits q = uncoloured;
      while (q.any()) {
        auto v = q.find_first();
        q.reset(v);
        q -= adj[v];
        uncoloured.reset(v);
        order.push_back(static_cast<int>(v));
        colour.push_back(c);
      }
    }
    for (int i = static_cast<int>(order.size()) - 1; i >= 0; --i) {
      if (static_cast<int>(current.size()) + colour[i] < target) return false;
      int v = order[i];
      current.push_back(v);
      if (expand(cand & adj[v])) return true;
      current.pop_back();
      cand.reset(v);
    }
    return false;
  }
};

}  // namespace

std::optional<StandardExampleWitness> contains_standard_example(const Poset& P, int k,
                                                                std::uint64_t node_budget) {
  if (k < 2) throw BadParameter("standard example order must be at least 2");
  // Candidate pairs (a,b): a incomparable to b, enough strict relations.
  std::vector<Pair> nodes;
  for (int a = 0; a < P.size(); ++a) {
    if (static_cast<int>(P.up(a).count()) - 1 < k - 1) continue;
    for (int b = 0; b < P.size(); ++b)
      if (a != b && P.incomparable(a, b) && static_cast<int>(P.down(b).count()) - 1 >= k - 1)
        nodes.emplace_back(a, b);
  }
  auto compatible = [&](const Pair& p, const Pair& q) {
    return p.first != q.first && p.second != q.second && P.less(p.first, q.second) &&
           P.less(q.first, p.second) && P.incomparable(p.first, q.first) &&
           P.incomparable(p.second, q.second);
  };
  // Peel to the (k-1)-core of the compatibility graph.
  std::vector<char> alive(nodes.size(), 1);
  std::vector<std::vector<int>> nb(nodes.size());
  for (std::size_t i = 0; i < nodes.size(); ++i)
    for (std::size_t j = i + 1; j < nodes.size(); ++j)
      if (compatible(nodes[i], nodes[j])) {
        nb[i].push_back(static_cast<int>(j));
        nb[j].push_back(static_cast<int>(i));
      }
  std::vector<int> deg(nodes.size());
  std::vector<int> stack;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    deg[i] = static_cast<int>(nb[i].size());
    if (deg[i] < k - 1) {
      alive[i] = 0;
      stack.push_back(static_cast<int>(i));
    }
  }
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : nb[v])
      if (alive[w] && --deg[w] < k - 1) {
        alive[w] = 0;
        stack.push_back(w);
      }
  }
  std::vector<int> keep;
  std::vector<int> local(nodes.size(), -1);
  for (std::size_t i = 0; i < nodes.size(); ++i)
    if (alive[i]) {
      local[i] = static_cast<int>(keep.size());
      keep.push_back(static_cast<int>(i));
    }
  const std::size_t m = keep.size();
  if (static_cast<int>(m) < k) return std::nullopt;
  std::vector<Bits> adj(m, Bits(m));
  for (std::size_t i = 0; i < m; ++i)
    for (int w : nb[keep[i]])
      if (local[w] != -1) adj[i].set(local[w]);
  CliqueSearch cs{adj, k, node_budget, 0, {}};
  Bits all(m);
  all.set();
  if (!cs.expand(all)) return std::nullopt;
  std::vector<Pair> chosen;
  for (int v : cs.current) chosen.push_back(nodes[keep[v]]);
  std::sort(chosen.begin(), chosen.end());
  StandardExampleWitness w;
  for (auto [a, b] : chosen) {
    w.a.push_back(a);
    w.b.push_back(b);
  }
  return w;
}

}  // namespace posetdim
