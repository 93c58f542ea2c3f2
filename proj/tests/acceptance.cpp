// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "corpus.hpp"
#include "posetdim/constructions.hpp"
#include "posetdim/dimension.hpp"
#include "posetdim/graph_tools.hpp"
#include "posetdim/partition.hpp"
#include "posetdim/unfolding.hpp"

using namespace posetdim;
namespace pt = posetdim::testing;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

// Returns an empty string on success, otherwise the first failure.
using Criterion = std::function<std::string(std::ostringstream& note)>;

int failures = 0;

void run(int number, const std::string& title, const Criterion& body) {
  std::ostringstream note;
  std::string failure;
  const auto t0 = Clock::now();
  try {
    failure = body(note);
  } catch (const std::exception& e) {
    failure = std::string("exception: ") + e.what();
  }
  char time[32];
  std::snprintf(time, sizeof time, "%.1fs", seconds_since(t0));
  const bool ok = failure.empty();
  failures += !ok;
  std::cout << (ok ? "PASS" : "FAIL") << " criterion " << number << ": " << title << " [" << time;
  if (!note.str().empty()) std::cout << "; " << note.str();
  std::cout << "]";
  if (!ok) std::cout << " -- " << failure;
  std::cout << std::endl;
}

int witness_order(const ConstructionOutput& c) {
  return c.guarantees.witness ? static_cast<int>(c.guarantees.witness->a.size()) : 0;
}

std::string check_witness(const ConstructionOutput& c, int order, const std::string& what) {
  if (!c.guarantees.witness) return what + ": no witness shipped";
  if (witness_order(c) != order) return what + ": witness has order " + std::to_string(witness_order(c));
  if (!is_standard_example_witness(c.poset, *c.guarantees.witness)) return what + ": witness does not verify";
  return {};
}

ElementSet maxima_above(const Poset& P, int x0) {
  ElementSet B;
  for (int b : max_elements(P))
    if (P.leq(x0, b)) B.push_back(b);
  return B;
}

// Upper bound on dim(P): the exact value when the solver finishes, otherwise
// the best bound it reported, never above the width.
int certified_upper(const Poset& P, std::chrono::milliseconds budget, bool& exact) {
  exact = false;
  int upper = std::max(1, width(P));
  try {
    const int d = dimension(P, Budget{budget}).value;
    exact = true;
    return d;
  } catch (const ResourceLimit& e) {
    if (e.upper > 0) upper = std::min(upper, e.upper);
  }
  return upper;
}

}  // namespace

int main() {
  run(1, "dim(S_k) = k for k = 2..5, brute force agrees for k = 2..4", [](std::ostringstream& note) -> std::string {
    for (int k = 2; k <= 5; ++k) {
      const auto t0 = Clock::now();
      const int d = dimension(standard_example(k)).value;
      const double s = seconds_since(t0);
      if (d != k) return "dim(S_" + std::to_string(k) + ") = " + std::to_string(d);
      if (s >= 60) return "S_" + std::to_string(k) + " took " + std::to_string(s) + "s";
      if (k <= 4) {
        const int brute = brute_force_dimension(standard_example(k), 10000000);
        if (brute != k) return "brute force gives " + std::to_string(brute) + " for S_" + std::to_string(k);
      }
    }
    note << "S_2..S_5 exact";
    return {};
  });

  run(2, "is_reversible agrees with exhaustive search (300 posets x 50 subsets)",
      [](std::ostringstream& note) -> std::string {
        std::mt19937_64 rng(31337);
        int checks = 0, irreversible = 0;
        for (const auto& P : pt::small_corpus(300)) {
          const auto positions = pt::extension_positions(P);
          const auto inc = incomparable_pairs(P);
          for (int t = 0; t < 50; ++t) {
            PairSet I;
            const unsigned keep = 1 + static_cast<unsigned>(rng() % 4);
            for (const auto& p : inc)
              if (rng() % keep == 0) I.push_back(p);
            const auto r = is_reversible(P, I);
            const bool oracle = pt::oracle_reversible(positions, I);
            ++checks;
            if (r.reversible != oracle) return "mismatch on a " + std::to_string(P.size()) + "-element poset";
            if (r.reversible && !reverses_all(P, r.extension, I)) return "extension certificate is wrong";
            if (!r.reversible) {
              ++irreversible;
              if (!r.cycle || !is_strict_alt_cycle(P, *r.cycle)) return "cycle certificate is wrong";
            }
          }
        }
        note << checks << " checks, " << irreversible << " irreversible";
        return {};
      });

  run(3, "kelly(k), k = 3..6: valid diagram, height k+1, induced S_k; exact dim for k = 3,4",
      [](std::ostringstream& note) -> std::string {
        for (int k = 3; k <= 6; ++k) {
          const auto c = kelly(k);
          const std::string name = "kelly(" + std::to_string(k) + ")";
          if (!validate_diagram(*c.diagram).empty()) return name + ": invalid diagram";
          if (height(c.poset) != k + 1) return name + ": height " + std::to_string(height(c.poset));
          if (auto f = check_witness(c, k, name); !f.empty()) return f;
          if (!contains_standard_example(c.poset, k)) return name + ": search finds no S_k";
        }
        // Oracle value: the S_k witness bounds the dimension from below and a
        // realizer of size k, checked independently, from above. For k = 3 the
        // exhaustive search confirms it as well.
        for (int k = 3; k <= 4; ++k) {
          const Poset P = kelly(k).poset;
          const auto d = dimension(P);
          if (!is_realizer(P, d.realizer)) return "realizer does not verify";
          if (d.value != k) return "dim(kelly(" + std::to_string(k) + ")) = " + std::to_string(d.value);
        }
        const int brute = brute_force_dimension(kelly(3).poset, 20000000);
        if (brute != 3) return "brute force gives " + std::to_string(brute) + " for kelly(3)";
        note << "dim kelly(3) = 3, dim kelly(4) = 4";
        return {};
      });

  run(4, "planar_linear_construction(h), h = 4,7,10: height h, valid diagram, induced S_{(4h+2)/3}",
      [](std::ostringstream& note) -> std::string {
        const auto t0 = Clock::now();
        for (int h : {4, 7, 10}) {
          const auto c = planar_linear_construction(h);
          const std::string name = "planar_linear(" + std::to_string(h) + ")";
          if (height(c.poset) != h) return name + ": height " + std::to_string(height(c.poset));
          if (!c.diagram) return name + ": no diagram";
          if (auto v = validate_diagram(*c.diagram); !v.empty())
            return name + ": " + v.front().kind + " " + v.front().detail;
          if (auto f = check_witness(c, (4 * h + 2) / 3, name); !f.empty()) return f;
          note << name << " " << c.poset.size() << " elements; ";
        }
        const double s = seconds_since(t0);
        if (s >= 60) return "took " + std::to_string(s) + "s";
        return {};
      });

  run(5, "double_spider_construction(h), h = 4,6: planar cover graph, height h, induced S_{2h-2}",
      [](std::ostringstream&) -> std::string {
        for (int h : {4, 6}) {
          const auto c = double_spider_construction(h);
          const std::string name = "double_spider(" + std::to_string(h) + ")";
          const auto g = cover_graph(c.poset);
          const auto r = is_planar(g);
          if (!r.planar) return name + ": cover graph not planar";
          if (!verify_planar_embedding(g, r.rotation)) return name + ": embedding does not verify";
          if (height(c.poset) != h) return name + ": height " + std::to_string(height(c.poset));
          if (auto f = check_witness(c, 2 * h - 2, name); !f.empty()) return f;
        }
        return {};
      });

  run(6, "treewidth3_construction(h), h = 2,4,6,8: width <= 3, min-max subtrees meet, S_{2^{h/2}}; dim = 4 at h = 4",
      [](std::ostringstream&) -> std::string {
        for (int h : {2, 4, 6, 8}) {
          const auto c = treewidth3_construction(h);
          const std::string name = "tw3(" + std::to_string(h) + ")";
          const auto check = verify_tree_decomposition(cover_graph(c.poset), *c.decomposition);
          if (!check.ok) return name + ": " + check.violations.front();
          if (check.width > 3) return name + ": width " + std::to_string(check.width);
          const Poset& P = c.poset;
          for (int a : min_elements(P))
            for (int b : max_elements(P))
              if (P.incomparable(a, b) && !subtrees_intersect(*c.decomposition, a, b))
                return name + ": subtrees of " + P.name(a) + " and " + P.name(b) + " are disjoint";
          if (height(P) != h) return name + ": height " + std::to_string(height(P));
          if (auto f = check_witness(c, 1 << (h / 2), name); !f.empty()) return f;
        }
        const int d = dimension(treewidth3_construction(4).poset).value;
        if (d != 4) return "dim(tw3(4)) = " + std::to_string(d);
        return {};
      });

  // Shared by criteria 7 and 11.
  const auto corpus = pt::full_corpus();

  run(7, "minmax_reduction keeps height, adds pendant vertices, dim(P) <= dim(Min(Q),Max(Q))",
      [&](std::ostringstream& note) -> std::string {
        int compared = 0, skipped = 0;
        for (const auto& [name, P] : corpus) {
          const auto R = minmax_reduction(P);
          if (height(R.q) != height(P)) return name + ": height changes";
          const auto adj = cover_graph(R.q).adjacency();
          for (int v = P.size(); v < R.q.size(); ++v)
            if (adj[v].size() != 1) return name + ": added vertex of degree " + std::to_string(adj[v].size());
          // Old cover pairs survive unchanged.
          auto old_covers = cover_relations(P);
          for (auto [a, b] : cover_relations(R.q))
            if (a < P.size() && b < P.size() &&
                std::find(old_covers.begin(), old_covers.end(), Pair{a, b}) == old_covers.end())
              return name + ": cover graph changes on old elements";
          if (P.size() > 10) continue;
          try {
            const Budget budget{std::chrono::milliseconds(20000)};
            const int dp = dimension(P, budget).value;
            const int dq = minmax_dimension(R.q, budget).value;
            if (dp > dq) return name + ": dim " + std::to_string(dp) + " > " + std::to_string(dq);
            ++compared;
          } catch (const ResourceLimit&) {
            ++skipped;
          }
        }
        note << compared << " dimension comparisons, " << skipped << " over budget";
        return {};
      });

  const auto connected = pt::connected_corpus(200);

  run(8, "unfolding lemma witness on 200 connected posets and kelly(3), kelly(4)",
      [&](std::ostringstream& note) -> std::string {
        std::vector<Poset> all = connected;
        all.push_back(kelly(3).poset);
        all.push_back(kelly(4).poset);
        int i = 0;
        for (const auto& P : all) {
          const int x0 = min_elements(P).front();
          const auto w = verify_unfolding_lemma(P, x0);
          if (2 * w.dim_local < w.dim_ab) return "instance " + std::to_string(i) + ": witness too small";
          ++i;
        }
        note << i << " witnesses";
        return {};
      });

  run(9, "zig-zag trees span, alpha/beta monotone along paths, chain and unique-minimum assertions",
      [&](std::ostringstream& note) -> std::string {
        int applicable = 0, i = 0;
        for (const auto& P : connected) {
          const std::string name = "instance " + std::to_string(i++);
          auto U = unfold(P, min_elements(P).front());
          if (auto v = unfolding_violations(U); !v.empty()) return name + ": " + v.front();
          const auto T = assign_parents(U);
          if (static_cast<int>(T.edges.size()) != P.size() - 1) return name + ": tree has wrong edge count";
          const auto covers = cover_relations(P);
          for (auto [c, p] : T.edges)
            if (std::find(covers.begin(), covers.end(), Pair{c, p}) == covers.end() &&
                std::find(covers.begin(), covers.end(), Pair{p, c}) == covers.end())
              return name + ": tree edge is not a cover";
          for (int x = 0; x < P.size(); ++x) {
            const auto path = zigzag_path(U, x);
            if (path.front() != U.x0 || path.back() != x) return name + ": path has wrong ends";
            for (std::size_t s = 1; s < path.size(); ++s)
              if (U.alpha[path[s]] < U.alpha[path[s - 1]] || U.beta[path[s]] < U.beta[path[s - 1]])
                return name + ": alpha/beta decrease along a path";
            applicable += zigzag_applicable(U, x);
          }
        }
        note << applicable << " applicable (element, index) checks";
        return {};
      });

  run(10, "partition of Inc(Min,B) into <= 6h+3 reversible classes on kelly(3), kelly(4), 100 random diagrams",
      [](std::ostringstream& note) -> std::string {
        const auto t0 = Clock::now();
        struct Case {
          std::string name;
          ConstructionOutput c;
          int x0;
          ElementSet b;
        };
        std::vector<Case> cases;
        for (int k : {3, 4}) {
          auto c = kelly(k);
          const int x0 = *c.poset.find("a_1");
          auto B = maxima_above(c.poset, x0);
          cases.push_back({"kelly(" + std::to_string(k) + ")", std::move(c), x0, std::move(B)});
        }
        int i = 0;
        for (auto& inst : pt::planar_corpus(100))
          cases.push_back({"planar " + std::to_string(i++), std::move(inst.output), inst.x0, std::move(inst.b)});
        int max_classes = 0, pairs = 0;
        for (const auto& [name, c, x0, B] : cases) {
          const PlanarDiagram& D = *c.diagram;
          const Poset& P = c.poset;
          const int h = height(P);
          const auto r = partition_minmax_below(D, B, x0);
          if (r.class_count() > 6 * h + 3) return name + ": " + std::to_string(r.class_count()) + " classes";
          const auto I = inc_between(P, min_elements(P), B);
          if (!is_valid_partition(P, I, r.partition)) return name + ": classes do not partition Inc(Min,B)";
          for (const auto& cls : r.partition.classes)
            if (!is_reversible(P, cls).reversible) return name + ": class not reversible";
          // Every remaining pair sees exactly one side of the other.
          const auto cp = classify_pairs(D, min_elements(P), B);
          for (auto [a, b] : cp.i3p)
            if (side_seen(D, a, b) != Side::left || side_seen(D, b, a) != Side::right) return name + ": I3' pair";
          for (auto [a, b] : cp.i3pp)
            if (side_seen(D, a, b) != Side::right || side_seen(D, b, a) != Side::left) return name + ": I3'' pair";
          max_classes = std::max(max_classes, r.class_count());
          pairs += static_cast<int>(I.size());
        }
        const double s = seconds_since(t0);
        if (s >= 300) return "took " + std::to_string(s) + "s";
        note << cases.size() << " drawings, " << pairs << " pairs, at most " << max_classes << " classes";
        return {};
      });

  run(11, "every corpus poset has dim <= 192h+96; lower-bound trend from the planar-linear family",
      [&](std::ostringstream& note) -> std::string {
        int exact_count = 0;
        for (const auto& [name, P] : corpus) {
          bool exact = false;
          const int upper = certified_upper(P, std::chrono::milliseconds(P.size() <= 16 ? 20000 : 3000), exact);
          exact_count += exact;
          const int bound = 192 * height(P) + 96;
          if (upper > bound) return name + ": dim bound " + std::to_string(upper) + " > " + std::to_string(bound);
        }
        double best_ratio = 0;
        int best_h = 0;
        for (int h : {4, 7, 10}) {
          const auto c = planar_linear_construction(h);
          if (!c.guarantees.witness || !is_standard_example_witness(c.poset, *c.guarantees.witness))
            return "planar_linear(" + std::to_string(h) + ") witness does not verify";
          const double ratio = static_cast<double>(witness_order(c)) / height(c.poset);
          if (ratio > best_ratio) best_ratio = ratio, best_h = h;
        }
        const double target = 4.0 / 3.0 * (1.0 - 2.0 / best_h);
        note << corpus.size() << " posets, " << exact_count << " exact; max dim/h " << best_ratio << " at h=" << best_h
             << " (needs " << target << ")";
        if (best_ratio < target) return "max observed dim/h below the trend";
        return {};
      });

  run(12, "valid diagrams with unique min and max have dim <= 2; with unique min, dim <= 3",
      [](std::ostringstream& note) -> std::string {
        int worst_both = 0, worst_min = 0;
        for (std::uint64_t seed = 1; seed <= 50; ++seed) {
          const auto both = random_planar_diagram_poset(12, seed, Extremes::unique_min_max);
          if (!validate_diagram(*both.diagram).empty()) return "invalid diagram";
          if (min_elements(both.poset).size() != 1 || max_elements(both.poset).size() != 1)
            return "extremes not unique";
          const int d2 = dimension(both.poset).value;
          if (d2 > 2) return "seed " + std::to_string(seed) + ": unique min and max but dim " + std::to_string(d2);
          worst_both = std::max(worst_both, d2);

          const auto one = random_planar_diagram_poset(12, seed, Extremes::unique_min);
          if (!validate_diagram(*one.diagram).empty()) return "invalid diagram";
          if (min_elements(one.poset).size() != 1) return "minimum not unique";
          const int d3 = dimension(one.poset).value;
          if (d3 > 3) return "seed " + std::to_string(seed) + ": unique min but dim " + std::to_string(d3);
          worst_min = std::max(worst_min, d3);
        }
        note << "max dims " << worst_both << " and " << worst_min;
        return {};
      });

  return failures == 0 ? 0 : 1;
}
