#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "posetdim/dimension.hpp"
#include "posetdim/poset.hpp"
#include "posetdim/rational.hpp"

namespace posetdim {

using Polyline = std::vector<Point>;

// Upward drawing of a poset: one point per element and one y-monotone
// polyline per cover pair, from the lower element to the upper one.
struct PlanarDiagram {
  Poset poset;
  std::vector<Point> point;
  std::map<Pair, Polyline> curves;

  const Rational& x(int e) const { return point[e].x; }
  const Rational& y(int e) const { return point[e].y; }
  bool below(int a, int b) const { return point[a].y < point[b].y; }
};

// Straight-line drawing on the cover pairs of P.
PlanarDiagram straight_line_diagram(const Poset& P, std::vector<Point> points);
PlanarDiagram mirror(const PlanarDiagram& D);

struct Violation {
  std::string kind;
  std::string detail;
};

std::vector<Violation> validate_diagram(const PlanarDiagram& D);

enum class Direction { up, down };
enum class Side { none, left, right, both };

// Restricts which walks count. must_reach_level keeps walks that can still be
// continued past level z; must_reach_element keeps walks that end in element e.
struct ReachFilter {
  enum Kind { none, level, element } kind = none;
  Rational z;
  int e = -1;
  static ReachFilter any() { return {}; }
  static ReachFilter must_reach_level(Rational z) { return {level, std::move(z), -1}; }
  static ReachFilter must_reach_element(int e) { return {element, Rational(0), e}; }
};

struct LineCrossings {
  int source = -1;
  Rational level;
  Direction dir = Direction::up;
  std::vector<Rational> xs;  // sorted, with multiplicity
};

LineCrossings line_crossings(const PlanarDiagram& D, int p, const Rational& Y, Direction dir,
                             const ReachFilter& filter = ReachFilter::any());
bool sees_line(const PlanarDiagram& D, int p, int q);
Side side_seen(const PlanarDiagram& D, int p, int q);
bool sees_side(Side s, Side which);  // which is left or right
const char* to_string(Side s);

// x-coordinate where an upward polyline crosses height Y (y(start) <= Y <= y(end)).
Rational crossing_x(const Polyline& c, const Rational& Y);

struct ClassifiedPairs {
  PairSet i1p;   // a drawn above b
  PairSet i2p;   // a does not see the b-line
  PairSet i2pp;  // b does not see the a-line
  PairSet i3p;   // a sees only the left side of b, b only the right side of a
  PairSet i3pp;  // a sees only the right side of b, b only the left side of a
};

ClassifiedPairs classify_pairs(const PlanarDiagram& D, const ElementSet& A, const ElementSet& B);

struct SeparatorWitness {
  Pair entry_edge;           // crosses the a-line left of a
  Pair exit_edge;            // crosses the b-line right of b
  std::vector<int> visited;  // elements strictly between the two lines
};

std::optional<SeparatorWitness> has_separator(const PlanarDiagram& D, int a, int b);
bool is_dangerous(const PlanarDiagram& D, int x0, int a, int b);

// Smallest index j (0-based) of a special pair; the cycle must be rotated so
// that its first b is drawn topmost.
std::optional<int> special_pair_index(const PlanarDiagram& D, const StrictAltCycle& cycle);
StrictAltCycle rotate_topmost_b(const PlanarDiagram& D, const StrictAltCycle& cycle);

// Every strict alternating cycle inside J up to size_cap, once per rotation
// class. Throws ResourceLimit after node_budget search expansions.
std::vector<StrictAltCycle> enumerate_strict_cycles(const Poset& P, const PairSet& J, int size_cap = -1,
                                                    std::uint64_t node_budget = 1000000);

}  // namespace posetdim
