#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "snakedimer/dimer_cover.hpp"
#include "snakedimer/permutation.hpp"
#include "snakedimer/snake_graph.hpp"

namespace snakedimer {

// Flips the letters in odd (1-indexed) positions and keeps the even ones; an
// involution that exchanges straight and zigzag words.
std::string dual_word(const std::string& word);

// A multiset of edges meant to be read as an overlay of north-east paths
// L_0..L_n, where L_i starts at the i-th-from-last vertex of the canonical
// lattice path and ends at the top-right corner (so L_i has i+1 steps).  The
// data is the same multiplicity map a dimer cover carries.
using MixedLatticePath = MixedDimerCover;

// The fold map from a snake graph to its dual, applied one tile at a time:
// the piece of the graph beyond the anti-diagonal of tile i is reflected
// across the main diagonal of that tile, which swaps the tile's top and
// right edges and the labels of its upper-left and lower-right corners.
struct DualMap {
  SnakeGraph dual;
  VertexLabeling labels;                      // input labels, transported
  std::map<GridEdge, GridEdge> edge_map;      // source edge -> dual edge
  std::map<GridEdge, GridEdge> edge_map_inv;  // dual edge -> source edge

  GridEdge map_edge(const GridEdge& e) const;
  GridEdge unmap_edge(const GridEdge& e) const;
  // Pushes a multiset of source edges forward through the edge bijection.
  MixedLatticePath map_multiset(const MixedDimerCover& cover) const;
  // Pulls a multiset of dual edges back.
  MixedDimerCover unmap_multiset(const MixedLatticePath& path) const;
};

DualMap dual_map(const SnakeGraph& g, const VertexLabeling& labels);
DualMap dual_map(const SnakeGraph& g);  // standard labeling

// The overlay in which every component path runs along the canonical lattice
// path: its k-th edge carries multiplicity k.
MixedLatticePath minimal_mixed_path(const SnakeGraph& g);

// Constructive membership test: peels one admissible path at a time, longest
// first, backtracking over the choices.  The decomposition returned on
// success lists L_n first; each path is given by its vertex sequence.
std::optional<std::vector<EdgePath>> decompose_mixed_path(const SnakeGraph& g,
                                                          const MixedLatticePath& multiset);
bool is_mixed_lattice_path(const SnakeGraph& g, const MixedLatticePath& multiset);

// All overlays of lattice paths on g, obtained as the image of the dimer
// covers of the dual graph under the fold map, in the enumeration order of
// those covers.
std::vector<MixedLatticePath> enumerate_mixed_paths(const SnakeGraph& g,
                                                    long long guard = kDefaultGuard);

// For each cover of the labeled graph, how many positive face twists each
// tile receives on a maximal chain from the lattice minimum; entry t-1 of a
// vector is the count for tile t.  Aligned with enumerate_covers.
std::vector<std::vector<int>> twist_count_vectors(const SnakeGraph& g,
                                                  const VertexLabeling& labels,
                                                  long long guard = kDefaultGuard);

// The permutation set of the labeled graph: each cover's twist-count vector,
// reversed and extended by a trailing zero, read as a Lehmer code.  Aligned
// with enumerate_covers; entrywise comparison of the codes reproduces the
// twist lattice order.  Requires every tile t to admit at most t twists,
// which the standard labeling guarantees.
std::vector<LehmerCode> snake_permutation_set(const SnakeGraph& g,
                                              const VertexLabeling& labels,
                                              long long guard = kDefaultGuard);

}  // namespace snakedimer
