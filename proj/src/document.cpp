#include "posetdim/document.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace posetdim {

PosetDocument document_from(const Poset& P) {
  PosetDocument doc;
  doc.n = P.size();
  doc.relations = cover_relations(P);
  doc.labels = P.labels();
  for (int i = 0; i < static_cast<int>(doc.labels.size()); ++i)
    if (doc.labels[i].empty()) doc.labels[i] = std::to_string(i);
  return doc;
}

PosetDocument document_from(const PlanarDiagram& D) {
  PosetDocument doc = document_from(D.poset);
  doc.points = D.point;
  // Straight edges are implied by the points; only bent curves are stored.
  for (const auto& [e, c] : D.curves)
    if (c.size() > 2) doc.curves.emplace_back(e, c);
  return doc;
}

PosetDocument document_from(const ConstructionOutput& c) {
  PosetDocument doc = c.diagram ? document_from(*c.diagram) : document_from(c.poset);
  doc.decomposition = c.decomposition;
  return doc;
}

Poset to_poset(const PosetDocument& doc) {
  Poset P = Poset::from_relations(doc.n, doc.relations, doc.mode);
  if (!doc.labels.empty()) P.set_labels(doc.labels);
  return P;
}

std::optional<PlanarDiagram> to_diagram(const PosetDocument& doc) {
  if (doc.points.empty()) return std::nullopt;
  PlanarDiagram D = straight_line_diagram(to_poset(doc), doc.points);
  for (const auto& [e, c] : doc.curves) D.curves[e] = c;
  return D;
}

namespace {

struct Reader {
  std::istream& in;
  int line_no = 0;
  std::vector<std::string> tokens;

  // Next non-empty line split into tokens; false at end of input.
  bool next() {
    std::string line;
    while (std::getline(in, line)) {
      ++line_no;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      std::istringstream ss(line);
      tokens.clear();
      for (std::string t; ss >> t;) tokens.push_back(t);
      if (!tokens.empty() && tokens[0][0] != '#') return true;
    }
    return false;
  }
  void need() {
    if (!next()) fail("unexpected end of document");
  }
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, line_no); }
  void expect(std::size_t count) const {
    if (tokens.size() != count)
      fail("expected " + std::to_string(count) + " fields, found " + std::to_string(tokens.size()));
  }
  int integer(const std::string& t, const char* field) const {
    if (t.empty() || !std::all_of(t.begin() + (t[0] == '-' ? 1 : 0), t.end(), [](char c) { return c >= '0' && c <= '9'; }) ||
        t == "-" || t.size() > 9)
      fail(std::string("bad ") + field + " '" + t + "'");
    return std::stoi(t);
  }
  int id(const std::string& t, int n) const {
    int v = integer(t, "element id");
    if (v < 0 || v >= n) fail("element id " + t + " out of range");
    return v;
  }
  Rational rational(const std::string& t) const {
    try {
      return parse_rational(t);
    } catch (const ParseError& e) {
      fail(e.what());
    }
  }
};

}  // namespace

PosetDocument read_document(std::istream& in) {
  Reader r{in};
  PosetDocument doc;
  r.need();
  if (r.tokens.size() != 2 || r.tokens[0] != "posetdim-document") r.fail("missing 'posetdim-document' header");
  doc.version = r.integer(r.tokens[1], "version");
  if (doc.version != 1) r.fail("unsupported version " + r.tokens[1]);
  r.need();
  if (r.tokens[0] != "elements") r.fail("expected 'elements'");
  r.expect(2);
  doc.n = r.integer(r.tokens[1], "element count");
  if (doc.n < 0) r.fail("negative element count");
  r.need();
  if (r.tokens[0] != "relations") r.fail("expected 'relations'");
  r.expect(3);
  if (r.tokens[1] == "covers") doc.mode = Poset::Mode::covers;
  else if (r.tokens[1] == "full") doc.mode = Poset::Mode::full;
  else r.fail("relation mode must be 'covers' or 'full'");
  int m = r.integer(r.tokens[2], "relation count");
  for (int i = 0; i < m; ++i) {
    r.need();
    r.expect(2);
    doc.relations.emplace_back(r.id(r.tokens[0], doc.n), r.id(r.tokens[1], doc.n));
  }
  r.need();
  if (r.tokens[0] == "labels") {
    r.expect(1);
    for (int i = 0; i < doc.n; ++i) {
      r.need();
      r.expect(1);
      doc.labels.push_back(r.tokens[0]);
    }
    r.need();
  }
  if (r.tokens[0] == "points") {
    r.expect(1);
    for (int i = 0; i < doc.n; ++i) {
      r.need();
      r.expect(2);
      doc.points.push_back({r.rational(r.tokens[0]), r.rational(r.tokens[1])});
    }
    r.need();
  }
  if (r.tokens[0] == "curves") {
    r.expect(2);
    int c = r.integer(r.tokens[1], "curve count");
    for (int i = 0; i < c; ++i) {
      r.need();
      if (r.tokens.size() < 3) r.fail("curve line too short");
      Pair e{r.id(r.tokens[0], doc.n), r.id(r.tokens[1], doc.n)};
      int k = r.integer(r.tokens[2], "point count");
      if (k < 2) r.fail("a curve needs at least two points");
      r.expect(3 + 2 * static_cast<std::size_t>(k));
      Polyline line;
      for (int p = 0; p < k; ++p) line.push_back({r.rational(r.tokens[3 + 2 * p]), r.rational(r.tokens[4 + 2 * p])});
      doc.curves.emplace_back(e, line);
    }
    r.need();
  }
  if (r.tokens[0] == "decomposition") {
    r.expect(3);
    TreeDecomposition td;
    int bags = r.integer(r.tokens[1], "bag count"), edges = r.integer(r.tokens[2], "tree edge count");
    for (int i = 0; i < bags; ++i) {
      r.need();
      if (r.tokens.size() < 2 || r.tokens[0] != "bag") r.fail("expected 'bag'");
      int k = r.integer(r.tokens[1], "bag size");
      r.expect(2 + static_cast<std::size_t>(k));
      ElementSet bag;
      for (int j = 0; j < k; ++j) bag.push_back(r.id(r.tokens[2 + j], doc.n));
      td.bags.push_back(bag);
    }
    for (int i = 0; i < edges; ++i) {
      r.need();
      r.expect(3);
      if (r.tokens[0] != "tree") r.fail("expected 'tree'");
      td.tree_edges.emplace_back(r.integer(r.tokens[1], "node"), r.integer(r.tokens[2], "node"));
    }
    doc.decomposition = td;
    r.need();
  }
  if (r.tokens[0] != "end") r.fail("unexpected '" + r.tokens[0] + "'");
  r.expect(1);
  return doc;
}

void write_document(const PosetDocument& doc, std::ostream& out) {
  auto rels = doc.relations;
  std::sort(rels.begin(), rels.end());
  rels.erase(std::unique(rels.begin(), rels.end()), rels.end());
  out << "posetdim-document " << doc.version << "\n";
  out << "elements " << doc.n << "\n";
  out << "relations " << (doc.mode == Poset::Mode::covers ? "covers" : "full") << " " << rels.size() << "\n";
  for (auto [u, v] : rels) out << u << " " << v << "\n";
  if (!doc.labels.empty()) {
    out << "labels\n";
    for (const auto& l : doc.labels) out << l << "\n";
  }
  if (!doc.points.empty()) {
    out << "points\n";
    for (const auto& p : doc.points) out << to_string(p.x) << " " << to_string(p.y) << "\n";
  }
  if (!doc.curves.empty()) {
    auto curves = doc.curves;
    std::sort(curves.begin(), curves.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    out << "curves " << curves.size() << "\n";
    for (const auto& [e, c] : curves) {
      out << e.first << " " << e.second << " " << c.size();
      for (const auto& p : c) out << " " << to_string(p.x) << " " << to_string(p.y);
      out << "\n";
    }
  }
  if (doc.decomposition) {
    const auto& td = *doc.decomposition;
    out << "decomposition " << td.bags.size() << " " << td.tree_edges.size() << "\n";
    for (const auto& bag : td.bags) {
      out << "bag " << bag.size();
      for (int v : bag) out << " " << v;
      out << "\n";
    }
    for (auto [s, t] : td.tree_edges) out << "tree " << s << " " << t << "\n";
  }
  out << "end\n";
}

std::string to_text(const PosetDocument& doc) {
  std::ostringstream ss;
  write_document(doc, ss);
  return ss.str();
}

PosetDocument parse_document(const std::string& text) {
  std::istringstream ss(text);
  return read_document(ss);
}

PosetDocument load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  return read_document(in);
}

void save(const PosetDocument& doc, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write " + path);
  write_document(doc, out);
}

}  // namespace posetdim
