#pragma once

#include <map>
#include <string>
#include <vector>

#include "snakedimer/laurent.hpp"
#include "snakedimer/snake_graph.hpp"

namespace snakedimer {

// Edge multiset: nonnegative multiplicity per edge, zero entries omitted.
class MixedDimerCover {
 public:
  MixedDimerCover() = default;
  explicit MixedDimerCover(std::map<GridEdge, int> mult);

  int multiplicity(const GridEdge& e) const;
  const std::map<GridEdge, int>& entries() const { return mult_; }
  int total() const;
  std::string str() const;

  bool operator==(const MixedDimerCover& o) const { return mult_ == o.mult_; }
  bool operator!=(const MixedDimerCover& o) const { return !(*this == o); }
  bool operator<(const MixedDimerCover& o) const { return mult_ < o.mult_; }

 private:
  std::map<GridEdge, int> mult_;
};

// The canonical matching as a multiplicity-one cover.
MixedDimerCover canonical_dimer_cover(const SnakeGraph& g);

struct DegreeViolation {
  GridPoint vertex;
  int expected;  // vertex label
  int actual;    // sum of incident multiplicities
};

struct ValidityReport {
  std::vector<DegreeViolation> violations;
  bool valid() const { return violations.empty(); }
};

// Checks the degree equation at every vertex.  An edge outside the graph is a
// structural error (throws), not a degree violation.
ValidityReport validate_cover(const SnakeGraph& g, const VertexLabeling& labels,
                              const MixedDimerCover& cover);

inline constexpr long long kDefaultGuard = 1'000'000;

// All covers for the labeling, sorted lexicographically by multiplicity
// vector over the sorted edge list.  Refuses when the predicted search space
// (product over matching edges of endpoint-minimum label + 1) exceeds guard.
std::vector<MixedDimerCover> enumerate_covers(const SnakeGraph& g,
                                              const VertexLabeling& labels,
                                              long long guard = kDefaultGuard);

enum class CountMethod { Brute, Matrix, Auto };

// Number of covers.  The matrix method handles straight and zigzag words with
// labelings that are constant on matching edges; brute force handles any
// graph within the guard.
BigInt count_covers(const SnakeGraph& g, const VertexLabeling& labels,
                    CountMethod method = CountMethod::Auto,
                    long long guard = kDefaultGuard);

// Covers whose multiplicity on the given edge equals k, order preserved.
std::vector<MixedDimerCover> filter_by_final_edge(const SnakeGraph& g,
                                                  const std::vector<MixedDimerCover>& covers,
                                                  const GridEdge& edge, int k);

}  // namespace snakedimer
