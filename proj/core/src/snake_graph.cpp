#include "snakedimer/snake_graph.hpp"

#include <algorithm>
#include <set>

namespace snakedimer {

GridEdge::GridEdge(GridPoint p, GridPoint q) {
  int dx = p.x - q.x, dy = p.y - q.y;
  if (dx * dx + dy * dy != 1)
    throw ValidationError("edge endpoints must be lattice neighbors: " + to_string(p) +
                          "-" + to_string(q));
  a = std::min(p, q);
  b = std::max(p, q);
}

std::string to_string(const GridPoint& p) {
  return "(" + std::to_string(p.x) + "," + std::to_string(p.y) + ")";
}

std::string to_string(const GridEdge& e) {
  return to_string(e.a) + "-" + to_string(e.b);
}

GridEdge Tile::bottom() const { return {ll, {ll.x + 1, ll.y}}; }
GridEdge Tile::top() const { return {{ll.x, ll.y + 1}, {ll.x + 1, ll.y + 1}}; }
GridEdge Tile::left() const { return {ll, {ll.x, ll.y + 1}}; }
GridEdge Tile::right() const { return {{ll.x + 1, ll.y}, {ll.x + 1, ll.y + 1}}; }

std::array<GridEdge, 4> Tile::edges() const { return {bottom(), right(), top(), left()}; }

std::array<GridPoint, 4> Tile::corners_ccw() const {
  return {ll, {ll.x + 1, ll.y}, {ll.x + 1, ll.y + 1}, {ll.x, ll.y + 1}};
}

bool Tile::contains(const GridEdge& e) const {
  auto es = edges();
  return std::find(es.begin(), es.end(), e) != es.end();
}

SnakeGraph::SnakeGraph(std::string word) : word_(std::move(word)) {
  for (char c : word_)
    if (c != 'R' && c != 'U')
      throw ValidationError(std::string("snake word letters must be R or U, got '") + c + "'");

  GridPoint at{0, 0};
  tiles_.push_back({at});
  for (char c : word_) {
    if (c == 'R')
      ++at.x;
    else
      ++at.y;
    tiles_.push_back({at});
  }

  std::set<GridPoint> vs;
  std::set<GridEdge> es;
  for (const Tile& t : tiles_) {
    for (const GridPoint& p : t.corners_ccw()) vs.insert(p);
    for (const GridEdge& e : t.edges()) es.insert(e);
  }
  vertices_.assign(vs.begin(), vs.end());
  edges_.assign(es.begin(), es.end());
  if (static_cast<int>(edges_.size()) != 3 * tile_count() + 1)
    throw ValidationError("internal: snake graph edge count mismatch");
  for (const GridEdge& e : edges_) {
    incident_[e.a].push_back(e);
    incident_[e.b].push_back(e);
  }

  compute_matching();
  compute_path();
}

SnakeGraph SnakeGraph::straight(int tiles) {
  if (tiles < 1) throw ValidationError("snake graph needs at least one tile");
  return SnakeGraph(std::string(tiles - 1, 'R'));
}

SnakeGraph SnakeGraph::zigzag(int tiles) {
  if (tiles < 1) throw ValidationError("snake graph needs at least one tile");
  std::string w;
  for (int i = 0; i < tiles - 1; ++i) w.push_back(i % 2 == 0 ? 'U' : 'R');
  return SnakeGraph(std::move(w));
}

bool SnakeGraph::has_vertex(const GridPoint& p) const {
  return std::binary_search(vertices_.begin(), vertices_.end(), p);
}

bool SnakeGraph::has_edge(const GridEdge& e) const {
  return std::binary_search(edges_.begin(), edges_.end(), e);
}

int SnakeGraph::edge_index(const GridEdge& e) const {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it == edges_.end() || *it != e)
    throw ValidationError("edge " + to_string(e) + " is not part of the graph");
  return static_cast<int>(it - edges_.begin());
}

const std::vector<GridEdge>& SnakeGraph::edges_at(const GridPoint& p) const {
  auto it = incident_.find(p);
  if (it == incident_.end())
    throw ValidationError("vertex " + to_string(p) + " is not part of the graph");
  return it->second;
}

int SnakeGraph::first_tile_of(const GridEdge& e) const {
  for (int i = 0; i < tile_count(); ++i)
    if (tiles_[i].contains(e)) return i + 1;
  throw ValidationError("edge " + to_string(e) + " is not part of the graph");
}

char SnakeGraph::continuation_letter() const {
  auto n = word_.size();
  if (n == 0) return 'R';
  if (n == 1 || word_[n - 1] == word_[n - 2]) return word_[n - 1];
  return word_[n - 1] == 'R' ? 'U' : 'R';
}

GridEdge SnakeGraph::final_edge() const {
  char last = word_.empty() ? 'R' : word_.back();
  return last == 'R' ? tiles_.back().right() : tiles_.back().top();
}

void SnakeGraph::compute_matching() {
  int n = tile_count();
  std::set<GridEdge> chosen;
  std::set<GridPoint> covered;
  auto seed = [&](const GridEdge& e) {
    chosen.insert(e);
    covered.insert(e.a);
    covered.insert(e.b);
  };

  bool constant_word = true;
  for (char c : word_) constant_word = constant_word && c == word_[0];
  if (constant_word) {
    // A single straight run: take every edge crossing the run direction.
    char dir = word_.empty() ? 'R' : word_[0];
    for (const GridEdge& e : edges_)
      if (dir == 'R' ? e.vertical() : e.horizontal()) seed(e);
  } else {
    // Corner tiles pick their forced edge; the tile after the last letter is
    // shaped by the continuation letter.
    std::string ext = word_ + continuation_letter();
    for (int i = 2; i <= n; ++i) {
      char enter = ext[i - 2], leave = ext[i - 1];
      if (enter == 'U' && leave == 'R') seed(tiles_[i - 1].left());
      else if (enter == 'R' && leave == 'U') seed(tiles_[i - 1].bottom());
    }
    // Interior walls of straight segments, where still free.
    for (int i = 1; i < n; ++i) {
      GridEdge wall = word_[i - 1] == 'R' ? tiles_[i - 1].right() : tiles_[i - 1].top();
      if (!covered.count(wall.a) && !covered.count(wall.b)) seed(wall);
    }
    // Everything else is forced: repeatedly match a free vertex whose only
    // free neighbor is unique.
    bool progress = true;
    while (progress) {
      progress = false;
      for (const GridPoint& v : vertices_) {
        if (covered.count(v)) continue;
        const GridEdge* only = nullptr;
        int free_neighbors = 0;
        for (const GridEdge& e : edges_at(v)) {
          GridPoint other = e.a == v ? e.b : e.a;
          if (!covered.count(other)) {
            ++free_neighbors;
            only = &e;
          }
        }
        if (free_neighbors == 1) {
          seed(*only);
          progress = true;
        }
      }
    }
  }

  if (static_cast<int>(covered.size()) != static_cast<int>(vertices_.size()) ||
      static_cast<int>(chosen.size()) != n + 1)
    throw ValidationError("internal: canonical matching construction failed for word '" +
                          word_ + "'");

  // Label order: first containing tile, then lower-left endpoint.
  matching_.assign(chosen.begin(), chosen.end());
  std::stable_sort(matching_.begin(), matching_.end(),
                   [&](const GridEdge& x, const GridEdge& y) {
                     int tx = first_tile_of(x), ty = first_tile_of(y);
                     if (tx != ty) return tx < ty;
                     return x.a < y.a;
                   });
}

void SnakeGraph::compute_path() {
  char cont = continuation_letter();
  std::string steps = word_;
  steps.push_back(cont);
  steps.push_back(cont == 'R' ? 'U' : 'R');
  GridPoint at{0, 0};
  path_vertices_.push_back(at);
  for (char c : steps) {
    if (c == 'R')
      ++at.x;
    else
      ++at.y;
    path_vertices_.push_back(at);
  }
}

std::vector<GridEdge> SnakeGraph::canonical_path_edges() const {
  std::vector<GridEdge> out;
  for (size_t i = 0; i + 1 < path_vertices_.size(); ++i)
    out.emplace_back(path_vertices_[i], path_vertices_[i + 1]);
  return out;
}

VertexLabeling VertexLabeling::standard(const SnakeGraph& g) {
  VertexLabeling l;
  int k = 0;
  for (const GridEdge& e : g.canonical_matching()) {
    ++k;
    l.values_[e.a] = k;
    l.values_[e.b] = k;
  }
  return l;
}

VertexLabeling VertexLabeling::constant(const SnakeGraph& g, int value) {
  if (value < 0) throw ValidationError("vertex labels must be nonnegative");
  VertexLabeling l;
  for (const GridPoint& v : g.vertices()) l.values_[v] = value;
  return l;
}

VertexLabeling VertexLabeling::from_values(const SnakeGraph& g,
                                           std::map<GridPoint, int> values) {
  for (const GridPoint& v : g.vertices()) {
    auto it = values.find(v);
    if (it == values.end())
      throw ValidationError("labeling missing vertex " + to_string(v));
    if (it->second < 0) throw ValidationError("vertex labels must be nonnegative");
  }
  if (values.size() != g.vertices().size())
    throw ValidationError("labeling mentions vertices outside the graph");
  VertexLabeling l;
  l.values_ = std::move(values);
  return l;
}

VertexLabeling VertexLabeling::from_matching_values(const SnakeGraph& g,
                                                    const std::vector<int>& vals) {
  const auto& m = g.canonical_matching();
  if (vals.size() != m.size())
    throw ValidationError("expected " + std::to_string(m.size()) +
                          " matching-edge values, got " + std::to_string(vals.size()));
  VertexLabeling l;
  for (size_t i = 0; i < m.size(); ++i) {
    if (vals[i] < 0) throw ValidationError("vertex labels must be nonnegative");
    l.values_[m[i].a] = vals[i];
    l.values_[m[i].b] = vals[i];
  }
  return l;
}

int VertexLabeling::at(const GridPoint& p) const {
  auto it = values_.find(p);
  if (it == values_.end())
    throw ValidationError("vertex " + to_string(p) + " has no label");
  return it->second;
}

std::vector<int> VertexLabeling::matching_values(const SnakeGraph& g) const {
  std::vector<int> out;
  for (const GridEdge& e : g.canonical_matching()) {
    if (at(e.a) != at(e.b))
      throw ValidationError("labeling is not constant on matching edge " + to_string(e));
    out.push_back(at(e.a));
  }
  return out;
}

std::vector<GridEdge> EdgePath::edges() const {
  std::vector<GridEdge> out;
  for (size_t i = 0; i + 1 < vertices.size(); ++i) out.emplace_back(vertices[i], vertices[i + 1]);
  return out;
}

GridPoint EdgePath::start() const {
  if (vertices.empty()) throw ValidationError("empty path has no start");
  return vertices.front();
}

GridPoint EdgePath::end() const {
  if (vertices.empty()) throw ValidationError("empty path has no end");
  return vertices.back();
}

std::string EdgePath::step_word() const {
  std::string w;
  for (size_t i = 0; i + 1 < vertices.size(); ++i)
    w.push_back(vertices[i + 1].x > vertices[i].x ? 'R' : 'U');
  return w;
}

SnakeGraph build_snake(const std::string& word) { return SnakeGraph(word); }

VertexLabeling standard_labeling(const SnakeGraph& g) { return VertexLabeling::standard(g); }

EdgePath canonical_lattice_path(const SnakeGraph& g) {
  return EdgePath{g.canonical_path_vertices()};
}

bool is_straight_word(const std::string& word) {
  for (char c : word)
    if (c != word[0]) return false;
  return true;
}

bool is_zigzag_word(const std::string& word) {
  for (size_t i = 0; i + 1 < word.size(); ++i)
    if (word[i] == word[i + 1]) return false;
  return true;
}

}  // namespace snakedimer
