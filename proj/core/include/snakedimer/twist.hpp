#pragma once

#include <map>
#include <optional>
#include <vector>

#include "snakedimer/dimer_cover.hpp"
#include "snakedimer/hasse.hpp"
#include "snakedimer/snake_graph.hpp"

namespace snakedimer {

enum class VertexColor { Black, White };

// Proper two-coloring of the grid vertices.
class VertexColoring {
 public:
  VertexColoring(const SnakeGraph& graph, std::map<GridPoint, VertexColor> colors);
  VertexColor at(const GridPoint& p) const;
  // Swaps the two colors everywhere (dualizes the twist order).
  VertexColoring reversed() const;

 private:
  VertexColoring() = default;
  std::map<GridPoint, VertexColor> colors_;
};

// Checkerboard coloring anchored at the last tile: a word ending in R (or
// empty) makes the bottom-right vertex of the last tile black, a word ending
// in U makes its top-right vertex black.
VertexColoring color_vertices(const SnakeGraph& graph);

// Edges of the tile whose counter-clockwise traversal runs white-to-black
// under the coloring; a positive twist decrements exactly these.
std::vector<GridEdge> odd_edges(const Tile& tile, const VertexColoring& coloring);

enum class TwistDirection { Positive, Negative };

// Either the twisted cover, or the first edge whose multiplicity is zero but
// would need to decrease.
struct FaceTwistOutcome {
  std::optional<MixedDimerCover> cover;
  std::optional<GridEdge> blocking_edge;
  bool ok() const { return cover.has_value(); }
};

// Twists the face of the 1-based tile: positive twists decrement the odd
// edges and increment the even ones; negative twists are the exact inverse.
FaceTwistOutcome face_twist(const SnakeGraph& graph, const VertexColoring& coloring,
                            const MixedDimerCover& cover, int tile_index,
                            TwistDirection direction);

// Lattice of all covers under the twist order.  Element i of the diagram is
// enumerate_covers(graph, labels, guard)[i]; covers of the diagram are the
// positive twists; ranks count twists from the unique minimum.
HasseDiagram build_lattice(const SnakeGraph& graph, const VertexLabeling& labels,
                           long long guard = kDefaultGuard);
HasseDiagram build_lattice(const SnakeGraph& graph, const VertexLabeling& labels,
                           const VertexColoring& coloring, long long guard = kDefaultGuard);

}  // namespace snakedimer
