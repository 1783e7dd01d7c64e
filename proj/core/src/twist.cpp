#include "snakedimer/twist.hpp"

#include <algorithm>
#include <array>

#include "snakedimer/errors.hpp"

namespace snakedimer {

VertexColoring::VertexColoring(const SnakeGraph& graph,
                               std::map<GridPoint, VertexColor> colors)
    : colors_(std::move(colors)) {
  for (const GridPoint& v : graph.vertices()) {
    if (!colors_.count(v)) {
      throw ValidationError("coloring misses vertex " + to_string(v));
    }
  }
  for (const GridEdge& e : graph.edges()) {
    if (colors_.at(e.a) == colors_.at(e.b)) {
      throw ValidationError("coloring is not proper on edge " + to_string(e));
    }
  }
}

VertexColor VertexColoring::at(const GridPoint& p) const {
  auto it = colors_.find(p);
  if (it == colors_.end()) {
    throw ValidationError("vertex " + to_string(p) + " is not colored");
  }
  return it->second;
}

VertexColoring VertexColoring::reversed() const {
  VertexColoring out;
  for (const auto& [v, c] : colors_) {
    out.colors_[v] = c == VertexColor::Black ? VertexColor::White : VertexColor::Black;
  }
  return out;
}

VertexColoring color_vertices(const SnakeGraph& graph) {
  const Tile& last = graph.tiles().back();
  // Anchor: bottom-right of the last tile for words ending in R (or empty),
  // top-right for words ending in U.
  GridPoint anchor{last.ll.x + 1, last.ll.y};
  if (!graph.word().empty() && graph.word().back() == 'U') {
    anchor = GridPoint{last.ll.x + 1, last.ll.y + 1};
  }
  int anchor_parity = (anchor.x + anchor.y) & 1;
  std::map<GridPoint, VertexColor> colors;
  for (const GridPoint& v : graph.vertices()) {
    colors[v] = ((v.x + v.y) & 1) == anchor_parity ? VertexColor::Black : VertexColor::White;
  }
  return VertexColoring(graph, std::move(colors));
}

std::vector<GridEdge> odd_edges(const Tile& tile, const VertexColoring& coloring) {
  std::array<GridPoint, 4> corners = tile.corners_ccw();
  std::vector<GridEdge> out;
  for (size_t i = 0; i < 4; ++i) {
    const GridPoint& from = corners[i];
    const GridPoint& to = corners[(i + 1) % 4];
    if (coloring.at(from) == VertexColor::White && coloring.at(to) == VertexColor::Black) {
      out.emplace_back(from, to);
    }
  }
  return out;
}

FaceTwistOutcome face_twist(const SnakeGraph& graph, const VertexColoring& coloring,
                            const MixedDimerCover& cover, int tile_index,
                            TwistDirection direction) {
  if (tile_index < 1 || tile_index > graph.tile_count()) {
    throw ValidationError("tile index " + std::to_string(tile_index) + " out of range 1.." +
                          std::to_string(graph.tile_count()));
  }
  const Tile& tile = graph.tiles()[static_cast<size_t>(tile_index - 1)];
  std::array<GridPoint, 4> corners = tile.corners_ccw();
  std::map<GridEdge, int> mult(cover.entries());
  for (size_t i = 0; i < 4; ++i) {
    GridEdge edge(corners[i], corners[(i + 1) % 4]);
    bool odd = coloring.at(corners[i]) == VertexColor::White &&
               coloring.at(corners[(i + 1) % 4]) == VertexColor::Black;
    bool decrement = (direction == TwistDirection::Positive) == odd;
    if (decrement) {
      int current = mult.count(edge) ? mult.at(edge) : 0;
      if (current == 0) {
        return FaceTwistOutcome{std::nullopt, edge};
      }
      mult[edge] = current - 1;
    } else {
      mult[edge] += 1;
    }
  }
  return FaceTwistOutcome{MixedDimerCover(std::move(mult)), std::nullopt};
}

HasseDiagram build_lattice(const SnakeGraph& graph, const VertexLabeling& labels,
                           long long guard) {
  return build_lattice(graph, labels, color_vertices(graph), guard);
}

HasseDiagram build_lattice(const SnakeGraph& graph, const VertexLabeling& labels,
                           const VertexColoring& coloring, long long guard) {
  std::vector<MixedDimerCover> elements = enumerate_covers(graph, labels, guard);
  std::map<MixedDimerCover, int> index;
  std::vector<std::string> names;
  for (size_t i = 0; i < elements.size(); ++i) {
    index[elements[i]] = static_cast<int>(i);
    names.push_back(elements[i].str());
  }
  std::vector<std::pair<int, int>> covers;
  for (size_t i = 0; i < elements.size(); ++i) {
    for (int t = 1; t <= graph.tile_count(); ++t) {
      FaceTwistOutcome outcome =
          face_twist(graph, coloring, elements[i], t, TwistDirection::Positive);
      if (!outcome.ok()) continue;
      auto it = index.find(*outcome.cover);
      if (it == index.end()) {
        throw ValidationError("twist left the enumerated cover set");
      }
      covers.emplace_back(static_cast<int>(i), it->second);
    }
  }
  return HasseDiagram(std::move(names), std::move(covers));
}

}  // namespace snakedimer
