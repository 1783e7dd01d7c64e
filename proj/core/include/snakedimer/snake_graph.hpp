#pragma once

#include <array>
#include <compare>
#include <map>
#include <string>
#include <vector>

#include "snakedimer/errors.hpp"

namespace snakedimer {

struct GridPoint {
  int x = 0;
  int y = 0;
  auto operator<=>(const GridPoint&) const = default;
};

// Unordered lattice edge; endpoints stored sorted so equality is structural.
struct GridEdge {
  GridPoint a, b;
  GridEdge() = default;
  GridEdge(GridPoint p, GridPoint q);
  bool horizontal() const { return a.y == b.y; }
  bool vertical() const { return a.x == b.x; }
  auto operator<=>(const GridEdge&) const = default;
};

std::string to_string(const GridPoint& p);
std::string to_string(const GridEdge& e);

// Unit square identified by its lower-left corner.
struct Tile {
  GridPoint ll;
  GridEdge bottom() const;
  GridEdge top() const;
  GridEdge left() const;
  GridEdge right() const;
  std::array<GridEdge, 4> edges() const;       // bottom, right, top, left
  std::array<GridPoint, 4> corners_ccw() const;  // ll, lr, ur, ul
  bool contains(const GridEdge& e) const;
};

// Ribbon of unit squares glued right/up according to a word over {R, U}.
// A word with n-1 letters produces n tiles; tile 1 sits at the origin.
class SnakeGraph {
 public:
  explicit SnakeGraph(std::string word);
  static SnakeGraph straight(int tiles);  // R^(tiles-1)
  static SnakeGraph zigzag(int tiles);    // URUR..., starting with U

  const std::string& word() const { return word_; }
  int tile_count() const { return static_cast<int>(tiles_.size()); }
  const std::vector<Tile>& tiles() const { return tiles_; }
  const std::vector<GridPoint>& vertices() const { return vertices_; }  // sorted
  const std::vector<GridEdge>& edges() const { return edges_; }         // sorted
  bool has_vertex(const GridPoint& p) const;
  bool has_edge(const GridEdge& e) const;
  int edge_index(const GridEdge& e) const;  // position in edges(); throws if absent
  const std::vector<GridEdge>& edges_at(const GridPoint& p) const;
  // 1-based index of the first tile containing the edge.
  int first_tile_of(const GridEdge& e) const;

  // The letter a longer snake would continue with: straight runs keep their
  // direction, a snake that just turned turns again.  Words of length <= 1
  // continue straight ('R' when empty).
  char continuation_letter() const;
  // Distinguished boundary edge of the last tile: its right side when the
  // word ends in R (or is empty), its top when the word ends in U.
  GridEdge final_edge() const;

  // The canonical perfect matching, listed in label order.
  const std::vector<GridEdge>& canonical_matching() const { return matching_; }
  // Vertex sequence of the canonical north-east path from the origin to the
  // top-right corner; edge-disjoint from the matching away from the last tile.
  const std::vector<GridPoint>& canonical_path_vertices() const { return path_vertices_; }
  std::vector<GridEdge> canonical_path_edges() const;

 private:
  void compute_matching();
  void compute_path();

  std::string word_;
  std::vector<Tile> tiles_;
  std::vector<GridPoint> vertices_;
  std::vector<GridEdge> edges_;
  std::map<GridPoint, std::vector<GridEdge>> incident_;
  std::vector<GridEdge> matching_;
  std::vector<GridPoint> path_vertices_;
};

// Nonnegative integer attached to every vertex of a fixed snake graph.
class VertexLabeling {
 public:
  // Label k on both endpoints of the k-th canonical matching edge.
  static VertexLabeling standard(const SnakeGraph& g);
  static VertexLabeling constant(const SnakeGraph& g, int value);
  static VertexLabeling from_values(const SnakeGraph& g, std::map<GridPoint, int> values);
  // One value per canonical matching edge, applied to both its endpoints.
  static VertexLabeling from_matching_values(const SnakeGraph& g, const std::vector<int>& vals);

  int at(const GridPoint& p) const;
  const std::map<GridPoint, int>& values() const { return values_; }
  // The per-edge values along the canonical matching; requires the labeling
  // to be constant on each matching edge.
  std::vector<int> matching_values(const SnakeGraph& g) const;
  bool operator==(const VertexLabeling&) const = default;

 private:
  std::map<GridPoint, int> values_;
};

// North-east lattice path given by its vertex sequence.
struct EdgePath {
  std::vector<GridPoint> vertices;
  std::vector<GridEdge> edges() const;
  GridPoint start() const;
  GridPoint end() const;
  std::string step_word() const;  // R/U letters along the path
  bool operator==(const EdgePath&) const = default;
};

SnakeGraph build_snake(const std::string& word);
VertexLabeling standard_labeling(const SnakeGraph& g);
EdgePath canonical_lattice_path(const SnakeGraph& g);

bool is_straight_word(const std::string& word);  // all letters equal
bool is_zigzag_word(const std::string& word);    // adjacent letters differ

}  // namespace snakedimer
