#pragma once

#include <boost/dynamic_bitset.hpp>

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "posetdim/errors.hpp"

namespace posetdim {

using Bits = boost::dynamic_bitset<>;
using Pair = std::pair<int, int>;
using ElementSet = std::vector<int>;  // sorted, duplicate free

// Finite poset on ids 0..n-1. The order is stored densely: up(x) is the set
// of y with x <= y, down(x) the set of y with y <= x. Immutable once built.
class Poset {
 public:
  enum class Mode { covers, full };

  Poset() = default;

  static Poset from_relations(int n, const std::vector<Pair>& rel, Mode mode = Mode::covers);
  static Poset antichain(int n);
  static Poset chain(int n);

  int size() const { return n_; }
  bool leq(int a, int b) const { return up_[a][b]; }
  bool less(int a, int b) const { return a != b && up_[a][b]; }
  bool comparable(int a, int b) const { return up_[a][b] || up_[b][a]; }
  bool incomparable(int a, int b) const { return !comparable(a, b); }
  const Bits& up(int x) const { return up_[x]; }
  const Bits& down(int x) const { return down_[x]; }

  // Optional labels; an empty string means unlabeled.
  const std::string& label(int x) const;
  std::string name(int x) const;  // label, or the id as text
  bool has_labels() const { return !labels_.empty(); }
  void set_label(int x, std::string s);
  void set_labels(std::vector<std::string> labels);
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<int> find(const std::string& label) const;

  void check_id(int x) const;

  bool operator==(const Poset& o) const { return n_ == o.n_ && up_ == o.up_; }

 private:
  int n_ = 0;
  std::vector<Bits> up_;
  std::vector<Bits> down_;
  std::vector<std::string> labels_;
};

// Induced subposet together with the map back to parent ids.
struct SubposetView {
  Poset poset;
  std::vector<int> members;  // members[i] is the parent id of local element i
  int local(int parent_id) const;
};

SubposetView induced_subposet(const Poset& P, const ElementSet& members);

std::vector<Pair> cover_relations(const Poset& P);
int height(const Poset& P);
int width(const Poset& P);
ElementSet min_elements(const Poset& P);
ElementSet max_elements(const Poset& P);
ElementSet upset(const Poset& P, const ElementSet& X);
ElementSet downset(const Poset& P, const ElementSet& X);
SubposetView convex_hull(const Poset& P, const ElementSet& X);
bool is_convex(const Poset& P, const ElementSet& X);
Poset dual(const Poset& P);
bool is_connected(const Poset& P);
std::vector<ElementSet> components(const Poset& P);
std::vector<int> longest_chain(const Poset& P);

// Visits linear extensions in lexicographic order. The callback returns false
// to stop early. Throws ResourceLimit once more than `budget` extensions
// would be produced.
void for_each_linear_extension(const Poset& P, std::uint64_t budget,
                               const std::function<bool(const std::vector<int>&)>& visit);
std::vector<std::vector<int>> linear_extensions(const Poset& P, std::uint64_t budget);
bool is_linear_extension(const Poset& P, const std::vector<int>& order);

// Smallest-id-first topological order of P plus extra strict relations.
// Returns nullopt if the combined relation has a cycle.
std::optional<std::vector<int>> topological_order(const Poset& P, const std::vector<Pair>& extra = {});

Bits to_bits(int n, const ElementSet& X);
ElementSet to_set(const Bits& b);

}  // namespace posetdim
