#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "snakedimer/laurent.hpp"

namespace snakedimer {

using Bitset = boost::dynamic_bitset<>;

// Cover-relation presentation of a graded lattice.  Construction validates
// that the digraph of covers is acyclic, that there are unique minimal and
// maximal elements, and that the shortest-path rank from the minimum
// increases by exactly one along every cover (which also rules out
// transitive edges).  meet/join verify bound existence on each call.
class HasseDiagram {
 public:
  HasseDiagram(std::vector<std::string> labels, std::vector<std::pair<int, int>> covers);

  int size() const { return static_cast<int>(labels_.size()); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int i) const;
  // Sorted (lower, upper) index pairs.
  const std::vector<std::pair<int, int>>& covers() const { return covers_; }
  int rank(int i) const;
  int max_rank() const;
  int minimum() const { return minimum_; }
  int maximum() const { return maximum_; }

  bool leq(int a, int b) const;
  // Elements <= i, as a bitset over element indices.
  const Bitset& down_set(int i) const;
  std::vector<int> upper_covers(int i) const;
  std::vector<int> lower_covers(int i) const;

 private:
  std::vector<std::string> labels_;
  std::vector<std::pair<int, int>> covers_;
  std::vector<int> rank_;
  std::vector<Bitset> down_;
  int minimum_ = -1;
  int maximum_ = -1;
};

// Sum of q^rank over all elements.
LaurentPoly rank_polynomial(const HasseDiagram& lattice,
                            const Indeterminate& q = Indeterminate("q"));

// Greatest lower / least upper bound (element indices); total by construction.
int meet(const HasseDiagram& lattice, int x, int y);
int join(const HasseDiagram& lattice, int x, int y);

// Explicit finite poset given by its full order relation.
class FinitePoset {
 public:
  // leq[a][b] true when element a <= element b; validated to be reflexive,
  // antisymmetric, and transitive.
  FinitePoset(std::vector<std::string> labels, std::vector<Bitset> leq_rows);

  int size() const { return static_cast<int>(labels_.size()); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int i) const;
  bool leq(int a, int b) const;
  // Row a = the up-set of a.
  const Bitset& up_set(int a) const;
  // Irredundant cover pairs (lower, upper), sorted.
  std::vector<std::pair<int, int>> cover_pairs() const;
  // Length of the longest chain below each element (0 for minimal elements).
  std::vector<int> heights() const;

 private:
  std::vector<std::string> labels_;
  std::vector<Bitset> leq_;  // leq_[a][b] <=> a <= b
};

// True exactly when the lattice is distributive, certified by counting order
// ideals of the join-irreducible subposet (the count equals the lattice size
// exactly in the distributive case).
bool is_distributive(const HasseDiagram& lattice);

// Join-irreducible elements (exactly one lower cover) with the induced order.
// Rejects non-distributive input.
FinitePoset birkhoff_poset(const HasseDiagram& lattice);

// Lattice of order ideals (down-closed subsets) ordered by inclusion.
// Elements are sorted by (size, reverse-lexicographic bit order); labels are
// 1-based sets such as "{}" or "{1,3}".
HasseDiagram ideal_lattice(const FinitePoset& poset);

// For each lattice element, the set of join-irreducibles below it, expressed
// over the element order used by birkhoff_poset.
std::vector<Bitset> irreducible_down_sets(const HasseDiagram& lattice);

// Backtracking isomorphism search; returns the image of each element of `a`
// or nullopt.  Intended for small posets/diagrams.
std::optional<std::vector<int>> poset_isomorphism(const FinitePoset& a, const FinitePoset& b);
std::optional<std::vector<int>> hasse_isomorphism(const HasseDiagram& a,
                                                 const HasseDiagram& b);

// Graphviz rendering, one node per element grouped by rank.
std::string hasse_to_dot(const HasseDiagram& lattice);
// JSON object {"elements": [...], "covers": [[lower, upper], ...],
// "ranks": [...]}.
std::string hasse_to_json(const HasseDiagram& lattice);

}  // namespace snakedimer
