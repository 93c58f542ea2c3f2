#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "posetdim/constructions.hpp"
#include "posetdim/dimension.hpp"
#include "posetdim/document.hpp"
#include "posetdim/graph_tools.hpp"
#include "posetdim/partition.hpp"
#include "posetdim/unfolding.hpp"

using namespace posetdim;
using json = nlohmann::json;

namespace {

enum Exit { kOk = 0, kViolation = 1, kResource = 2, kInput = 3 };

PosetDocument read_input(const std::string& path) {
  if (path == "-") return read_document(std::cin);
  return load(path);
}

int element_ref(const Poset& P, const std::string& token) {
  if (auto id = P.find(token)) return *id;
  if (!token.empty() && std::all_of(token.begin(), token.end(), ::isdigit)) {
    int v = std::stoi(token);
    P.check_id(v);
    return v;
  }
  throw ParseError("unknown element '" + token + "'");
}

ElementSet element_list(const Poset& P, const std::string& list) {
  ElementSet out;
  std::stringstream ss(list);
  for (std::string t; std::getline(ss, t, ',');)
    if (!t.empty()) out.push_back(element_ref(P, t));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

json names(const Poset& P, const std::vector<int>& xs) {
  json j = json::array();
  for (int x : xs) j.push_back(P.name(x));
  return j;
}

json pair_names(const Poset& P, const PairSet& ps) {
  json j = json::array();
  for (auto [a, b] : ps) j.push_back({P.name(a), P.name(b)});
  return j;
}

Budget budget_from(double seconds) {
  return Budget{std::chrono::milliseconds(static_cast<long long>(seconds * 1000))};
}

// Largest k with an induced S_k, searching upwards from 2.
int largest_standard_example(const Poset& P, std::uint64_t nodes) {
  int best = 0;
  for (int k = 2; 2 * k <= P.size(); ++k) {
    try {
      if (!contains_standard_example(P, k, nodes)) break;
    } catch (const ResourceLimit&) {
      break;
    }
    best = k;
  }
  return best;
}

ConstructionOutput generate(const std::string& family, int k, int h, int n, double density, std::uint64_t seed,
                            const std::string& extremes) {
  if (family == "standard") return standard_example_output(k);
  if (family == "kelly") return kelly(k);
  if (family == "planar-linear") return planar_linear_construction(h);
  if (family == "spider") return spider_net(k);
  if (family == "double-spider") return double_spider_construction(h);
  if (family == "tw3") return treewidth3_construction(h);
  if (family == "random") {
    ConstructionOutput c;
    c.family = "random";
    c.poset = random_connected_poset(n, density, seed);
    return c;
  }
  if (family == "random-planar") {
    Extremes e = Extremes::any;
    if (extremes == "min") e = Extremes::unique_min;
    else if (extremes == "min-max") e = Extremes::unique_min_max;
    else if (extremes != "any") throw BadParameter("extremes must be any, min or min-max");
    return random_planar_diagram_poset(n, seed, e);
  }
  throw BadParameter("unknown family '" + family + "'");
}

int cmd_gen(const std::string& family, int k, int h, int n, double density, std::uint64_t seed,
            const std::string& extremes, const std::string& out) {
  auto c = generate(family, k, h, n, density, seed, extremes);
  auto doc = document_from(c);
  if (out.empty() || out == "-") write_document(doc, std::cout);
  else save(doc, out);
  std::cerr << "generated " << c.family << ": " << c.poset.size() << " elements, height " << height(c.poset);
  if (c.guarantees.witness) std::cerr << ", standard example of order " << c.guarantees.witness->a.size();
  std::cerr << "\n";
  return kOk;
}

int cmd_dim(const std::string& file, bool minmax, const std::vector<std::string>& ab, double seconds) {
  auto doc = read_input(file);
  Poset P = to_poset(doc);
  json j{{"command", "dim"}, {"elements", P.size()}};
  int value;
  if (!ab.empty()) {
    if (ab.size() != 2) throw BadParameter("--ab takes two element lists");
    auto r = dim_AB(P, element_list(P, ab[0]), element_list(P, ab[1]), budget_from(seconds));
    value = r.value;
    j["kind"] = "dim(A,B)";
    std::cout << "dim(A,B) " << value << "\n";
  } else if (minmax) {
    value = minmax_dimension(P, budget_from(seconds)).value;
    j["kind"] = "minmax";
    std::cout << "minmax dimension " << value << "\n";
  } else {
    auto r = dimension(P, budget_from(seconds));
    value = r.value;
    j["kind"] = "dimension";
    json realizer = json::array();
    for (const auto& L : r.realizer) realizer.push_back(names(P, L));
    j["realizer"] = realizer;
    std::cout << "dimension " << value << "\n";
  }
  j["value"] = value;
  std::cout << j.dump() << "\n";
  return kOk;
}

int cmd_verify(const std::string& file, const std::string& check, int k) {
  auto doc = read_input(file);
  Poset P = to_poset(doc);
  json j{{"command", "verify"}, {"check", check}};
  bool ok = false;
  if (check == "diagram") {
    auto D = to_diagram(doc);
    if (!D) throw ParseError("document has no points");
    auto v = validate_diagram(*D);
    ok = v.empty();
    json list = json::array();
    for (const auto& x : v) list.push_back({{"kind", x.kind}, {"detail", x.detail}});
    j["violations"] = list;
    std::cout << (ok ? "ok diagram valid" : "violation: " + v.front().kind + " " + v.front().detail) << "\n";
  } else if (check == "treewidth") {
    if (!doc.decomposition) throw ParseError("document has no decomposition");
    auto r = verify_tree_decomposition(cover_graph(P), *doc.decomposition);
    ok = r.ok;
    j["width"] = r.width;
    j["violations"] = r.violations;
    std::cout << (ok ? "ok width " + std::to_string(r.width) : "violation: " + r.violations.front()) << "\n";
  } else if (check == "standard-example") {
    if (k < 2) throw BadParameter("--k must be at least 2");
    auto w = contains_standard_example(P, k);
    ok = w.has_value();
    if (ok) {
      j["a"] = names(P, w->a);
      j["b"] = names(P, w->b);
      std::cout << "ok contains S_" << k << "\n";
    } else {
      std::cout << "violation: no induced S_" << k << "\n";
    }
  } else if (check == "planarity") {
    auto G = cover_graph(P);
    auto r = is_planar(G);
    ok = r.planar;
    if (ok) {
      std::cout << "ok cover graph planar\n";
    } else {
      const char* kind = r.kind == KuratowskiKind::k5 ? "K5" : r.kind == KuratowskiKind::k33 ? "K3,3" : "unknown";
      j["kuratowski"] = kind;
      std::cout << "violation: cover graph contains a " << kind << " subdivision\n";
    }
  } else {
    throw BadParameter("unknown check '" + check + "'");
  }
  j["ok"] = ok;
  std::cout << j.dump() << "\n";
  return ok ? kOk : kViolation;
}

int cmd_unfold(const std::string& file, const std::string& from) {
  auto doc = read_input(file);
  Poset P = to_poset(doc);
  auto U = unfold(P, element_ref(P, from));
  json j{{"command", "unfold"}, {"base", P.name(U.x0)}};
  json A = json::array(), B = json::array(), parent = json::object();
  for (int i = 0; i < U.length(); ++i) {
    std::cout << "A_" << i << " = {";
    for (std::size_t t = 0; t < U.A[i].size(); ++t) std::cout << (t ? "," : "") << P.name(U.A[i][t]);
    std::cout << "}\n";
    A.push_back(names(P, U.A[i]));
    if (i + 1 < static_cast<int>(U.B.size())) {
      std::cout << "B_" << i + 1 << " = {";
      for (std::size_t t = 0; t < U.B[i + 1].size(); ++t) std::cout << (t ? "," : "") << P.name(U.B[i + 1][t]);
      std::cout << "}\n";
      B.push_back(names(P, U.B[i + 1]));
    }
  }
  for (int x = 0; x < P.size(); ++x)
    if (U.parent[x] >= 0) parent[P.name(x)] = P.name(U.parent[x]);
  j["A"] = A;
  j["B"] = B;
  j["alpha"] = U.alpha;
  j["beta"] = U.beta;
  j["parent"] = parent;
  auto bad = unfolding_violations(U);
  j["violations"] = bad;
  std::cout << j.dump() << "\n";
  return bad.empty() ? kOk : kViolation;
}

int cmd_partition(const std::string& file, const std::string& x0ref, const std::string& blist) {
  auto doc = read_input(file);
  auto D = to_diagram(doc);
  if (!D) throw ParseError("document has no points");
  const Poset& P = D->poset;
  int x0 = element_ref(P, x0ref);
  ElementSet B;
  if (blist.empty()) {
    for (int b : max_elements(P))
      if (P.leq(x0, b)) B.push_back(b);
  } else {
    B = element_list(P, blist);
  }
  auto r = partition_minmax_below(*D, B, x0);
  std::cout << "classes " << r.class_count() << " (bound " << 6 * r.height + 3 << ")\n";
  json fams = json::array();
  for (const auto& f : r.families) {
    std::cout << "  " << f.name << ": " << f.pairs.size() << " pairs, " << f.levels.size() << " levels, "
              << f.edges.size() << " edges\n";
    fams.push_back({{"name", f.name}, {"pairs", f.pairs.size()}, {"levels", f.levels.size()}, {"edges", f.edges.size()}});
  }
  json classes = json::array();
  for (const auto& c : r.partition.classes) classes.push_back(pair_names(P, c));
  json j{{"command", "partition"}, {"x0", P.name(r.x0)}, {"height", r.height}, {"classes", classes},
         {"count", r.class_count()}, {"families", fams}};
  std::cout << j.dump() << "\n";
  return kOk;
}

int cmd_report(const std::string& dir, const std::string& out, double seconds) {
  std::vector<std::filesystem::path> files;
  for (const auto& e : std::filesystem::directory_iterator(dir))
    if (e.is_regular_file()) files.push_back(e.path());
  std::sort(files.begin(), files.end());
  std::ostringstream csv;
  csv << "file,elements,h,width,dim-lower-witness,exact-dim-if-computed,dim-upper,bound-192h+96,within-bound\n";
  bool all_ok = true;
  for (const auto& f : files) {
    Poset P = to_poset(load(f.string()));
    const int h = height(P), w = width(P);
    const int lower = largest_standard_example(P, 2000000);
    std::string exact;
    int upper = std::max(w, 1);
    try {
      int d = dimension(P, budget_from(seconds)).value;
      exact = std::to_string(d);
      upper = d;
    } catch (const ResourceLimit& e) {
      if (e.upper > 0) upper = std::min(upper, e.upper);
    }
    const int bound = 192 * h + 96;
    all_ok = all_ok && upper <= bound;
    csv << f.filename().string() << "," << P.size() << "," << h << "," << w << "," << lower << "," << exact << ","
        << upper << "," << bound << "," << (upper <= bound ? "yes" : "no") << "\n";
  }
  if (out.empty() || out == "-") {
    std::cout << csv.str();
  } else {
    std::ofstream o(out);
    if (!o) throw ParseError("cannot write " + out);
    o << csv.str();
    std::cout << "report: " << files.size() << " documents written to " << out << "\n";
  }
  return all_ok ? kOk : kViolation;
}

int cmd_dot(const std::string& file, const std::string& out) {
  auto doc = read_input(file);
  Poset P = to_poset(doc);
  std::ostringstream dot;
  dot << "digraph poset {\n  rankdir=BT;\n";
  for (int x = 0; x < P.size(); ++x) {
    dot << "  n" << x << " [label=\"" << P.name(x) << "\"";
    if (!doc.points.empty())
      dot << ", pos=\"" << doc.points[x].x.convert_to<double>() << "," << doc.points[x].y.convert_to<double>() << "!\"";
    dot << "];\n";
  }
  if (!doc.points.empty()) {
    // Rank hints follow the drawn y-order.
    std::vector<int> order(P.size());
    for (int i = 0; i < P.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) { return doc.points[a].y < doc.points[b].y; });
    for (std::size_t i = 1; i < order.size(); ++i)
      dot << "  n" << order[i - 1] << " -> n" << order[i] << " [style=invis];\n";
  }
  for (auto [a, b] : cover_relations(P)) dot << "  n" << a << " -> n" << b << ";\n";
  dot << "}\n";
  if (out.empty() || out == "-") std::cout << dot.str();
  else std::ofstream(out) << dot.str();
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact poset dimension, planar diagram partitions and lower-bound constructions"};
  app.require_subcommand(1);
  app.set_help_flag("--help", "print this help and exit");

  std::string family, out, file = "-", check, from, x0, blist, dir;
  int k = 4, h = 4, n = 10;
  double density = 0.3, seconds = 30;
  std::uint64_t seed = 1;
  std::string extremes = "any";
  bool minmax = false;
  std::vector<std::string> ab;

  auto* gen = app.add_subcommand("gen", "generate a construction as a document");
  gen->add_option("--family", family, "standard, kelly, planar-linear, spider, double-spider, tw3, random, random-planar")
      ->required();
  gen->add_option("--k", k, "order parameter");
  gen->add_option("--h", h, "height parameter");
  gen->add_option("--n", n, "element count for random families");
  gen->add_option("--density", density, "relation density for the random family");
  gen->add_option("--seed", seed, "random seed");
  gen->add_option("--extremes", extremes, "random-planar: any, min or min-max");
  gen->add_option("-o,--out", out, "output file (default stdout)");

  auto* dim = app.add_subcommand("dim", "exact dimension");
  dim->add_option("file", file, "document (default stdin)");
  dim->add_flag("--minmax", minmax, "dim(Min, Max) instead of dim(P)");
  dim->add_option("--ab", ab, "dim(A, B) for two comma-separated element lists")->expected(2);
  dim->add_option("--budget", seconds, "time budget in seconds");

  auto* verify = app.add_subcommand("verify", "check a document property");
  verify->add_option("file", file, "document (default stdin)");
  verify->add_option("--check", check, "diagram, treewidth, standard-example or planarity")->required();
  verify->add_option("--k", k, "order for standard-example");

  auto* unf = app.add_subcommand("unfold", "unfolding and zig-zag parents");
  unf->add_option("file", file, "document (default stdin)");
  unf->add_option("--from", from, "base element (id or label)")->required();

  auto* part = app.add_subcommand("partition", "reversible partition of Inc(Min, B) for a drawn poset");
  part->add_option("file", file, "document with points (default stdin)");
  part->add_option("--x0", x0, "element below every element of B")->required();
  part->add_option("--b", blist, "comma-separated maximal elements (default: all above x0)");

  auto* rep = app.add_subcommand("report", "CSV summary over a directory of documents");
  rep->add_option("dir", dir, "directory")->required();
  rep->add_option("-o,--out", out, "CSV file (default stdout)");
  rep->add_option("--budget", seconds, "time budget in seconds per document");

  auto* dotc = app.add_subcommand("dot", "Graphviz export");
  dotc->add_option("file", file, "document (default stdin)");
  dotc->add_option("-o,--out", out, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kInput;
  }

  try {
    if (*gen) return cmd_gen(family, k, h, n, density, seed, extremes, out);
    if (*dim) return cmd_dim(file, minmax, ab, seconds);
    if (*verify) return cmd_verify(file, check, k);
    if (*unf) return cmd_unfold(file, from);
    if (*part) return cmd_partition(file, x0, blist);
    if (*rep) return cmd_report(dir, out, seconds);
    if (*dotc) return cmd_dot(file, out);
  } catch (const ResourceLimit& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return kResource;
  } catch (const FalsifiedClaim& e) {
    std::cerr << "violation: " << e.what() << "\n";
    return kViolation;
  } catch (const PosetError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInput;
  } catch (const std::exception& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInput;
  }
  return kOk;
}
