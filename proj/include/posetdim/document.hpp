#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "posetdim/constructions.hpp"
#include "posetdim/diagram.hpp"
#include "posetdim/graph_tools.hpp"
#include "posetdim/poset.hpp"

namespace posetdim {

// Text format shared by every command:
//
//   posetdim-document 1
//   elements <n>
//   relations <covers|full> <m>
//   <u> <v>                       (m lines)
//   labels                        (optional, n lines)
//   points                        (optional, n lines "x y", rationals)
//   curves <c>                    (optional, "u v k x1 y1 .. xk yk")
//   decomposition <bags> <edges>  (optional, "bag k ids.." then "tree s t")
//   end
struct PosetDocument {
  int version = 1;
  int n = 0;
  Poset::Mode mode = Poset::Mode::covers;
  std::vector<Pair> relations;
  std::vector<std::string> labels;
  std::vector<Point> points;
  std::vector<std::pair<Pair, Polyline>> curves;
  std::optional<TreeDecomposition> decomposition;
};

PosetDocument document_from(const Poset& P);
PosetDocument document_from(const PlanarDiagram& D);
PosetDocument document_from(const ConstructionOutput& c);

Poset to_poset(const PosetDocument& doc);
// The drawing stored in the document; straight edges when no curves are given.
std::optional<PlanarDiagram> to_diagram(const PosetDocument& doc);

PosetDocument read_document(std::istream& in);
void write_document(const PosetDocument& doc, std::ostream& out);
std::string to_text(const PosetDocument& doc);
PosetDocument parse_document(const std::string& text);

PosetDocument load(const std::string& path);
void save(const PosetDocument& doc, const std::string& path);

}  // namespace posetdim
