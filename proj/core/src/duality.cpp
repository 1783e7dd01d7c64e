#include "snakedimer/duality.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "snakedimer/errors.hpp"
#include "snakedimer/twist.hpp"

namespace snakedimer {

namespace {

char flipped(char c) { return c == 'R' ? 'U' : 'R'; }

// Reflection across the diagonal of slope one through d.
GridPoint reflect(const GridPoint& d, const GridPoint& p) {
  return GridPoint{d.x + (p.y - d.y), d.y + (p.x - d.x)};
}

}  // namespace

std::string dual_word(const std::string& word) {
  std::string out = word;
  for (size_t i = 0; i < out.size(); i += 2) out[i] = flipped(out[i]);
  return out;
}

GridEdge DualMap::map_edge(const GridEdge& e) const {
  auto it = edge_map.find(e);
  if (it == edge_map.end())
    throw ValidationError("edge " + to_string(e) + " is not part of the source graph");
  return it->second;
}

GridEdge DualMap::unmap_edge(const GridEdge& e) const {
  auto it = edge_map_inv.find(e);
  if (it == edge_map_inv.end())
    throw ValidationError("edge " + to_string(e) + " is not part of the dual graph");
  return it->second;
}

MixedLatticePath DualMap::map_multiset(const MixedDimerCover& cover) const {
  std::map<GridEdge, int> out;
  for (const auto& [e, m] : cover.entries()) out[map_edge(e)] = m;
  return MixedLatticePath(std::move(out));
}

MixedDimerCover DualMap::unmap_multiset(const MixedLatticePath& path) const {
  std::map<GridEdge, int> out;
  for (const auto& [e, m] : path.entries()) out[unmap_edge(e)] = m;
  return MixedDimerCover(std::move(out));
}

DualMap dual_map(const SnakeGraph& g, const VertexLabeling& labels) {
  const int n = g.tile_count();
  std::string word = g.word();
  std::map<GridEdge, GridEdge> pos;  // original edge -> current position
  for (const GridEdge& e : g.edges()) pos.emplace(e, e);
  std::map<GridPoint, int> vals = labels.values();

  SnakeGraph cur = g;
  for (int i = 1; i <= n; ++i) {
    const Tile& tile = cur.tiles()[i - 1];
    const GridPoint d = tile.ll;

    // The piece up to the anti-diagonal of tile i stays put: all edges of
    // earlier tiles plus the bottom and left side of tile i.  Everything
    // else reflects across the diagonal through d.
    std::set<GridEdge> fixed{tile.bottom(), tile.left()};
    for (int j = 0; j + 1 < i; ++j)
      for (const GridEdge& e : cur.tiles()[j].edges()) fixed.insert(e);
    for (auto& [orig, at] : pos) {
      if (!fixed.count(at)) at = GridEdge(reflect(d, at.a), reflect(d, at.b));
    }

    // Vertices carried along: the three corners of tile i away from d, and
    // every corner of a later tile.  The reflection exchanges the tile's
    // upper-left and lower-right corners, which swaps their labels.
    const auto corners = tile.corners_ccw();
    std::set<GridPoint> moving(corners.begin(), corners.end());
    moving.erase(d);
    for (int j = i; j < n; ++j)
      for (const GridPoint& p : cur.tiles()[j].corners_ccw()) moving.insert(p);
    std::map<GridPoint, int> moved;
    for (const auto& [p, v] : vals) moved[moving.count(p) ? reflect(d, p) : p] = v;
    vals = std::move(moved);

    for (size_t j = i - 1; j < word.size(); ++j) word[j] = flipped(word[j]);
    cur = SnakeGraph(word);

    std::set<GridEdge> placed;
    for (const auto& [orig, at] : pos) placed.insert(at);
    if (placed.size() != pos.size() ||
        !std::equal(placed.begin(), placed.end(), cur.edges().begin(), cur.edges().end()))
      throw ValidationError("internal: fold map lost an edge at tile " + std::to_string(i) +
                            " of word '" + g.word() + "'");
  }

  if (cur.word() != dual_word(g.word()))
    throw ValidationError("internal: fold map produced word '" + cur.word() +
                          "' instead of the dual of '" + g.word() + "'");

  DualMap out{cur, VertexLabeling::from_values(cur, std::move(vals)), std::move(pos), {}};
  for (const auto& [orig, at] : out.edge_map) out.edge_map_inv.emplace(at, orig);
  return out;
}

DualMap dual_map(const SnakeGraph& g) { return dual_map(g, VertexLabeling::standard(g)); }

MixedLatticePath minimal_mixed_path(const SnakeGraph& g) {
  std::map<GridEdge, int> mult;
  int k = 0;
  for (const GridEdge& e : g.canonical_path_edges()) mult[e] = ++k;
  return MixedLatticePath(std::move(mult));
}

std::optional<std::vector<EdgePath>> decompose_mixed_path(const SnakeGraph& g,
                                                          const MixedLatticePath& multiset) {
  const int n = g.tile_count();
  long long total = 0;
  std::map<GridEdge, int> rem;
  for (const auto& [e, m] : multiset.entries()) {
    g.edge_index(e);  // structural check
    if (m < 0) throw ValidationError("edge multiplicities must be nonnegative");
    if (m > 0) rem[e] = m;
    total += m;
  }
  if (total != static_cast<long long>(n + 1) * (n + 2) / 2) return std::nullopt;

  const auto& anchors = g.canonical_path_vertices();  // v_0 .. v_{n+1}
  const GridPoint target = anchors.back();
  std::vector<EdgePath> peeled;

  // Peel L_i for i = n down to 0, extending the current walk right-first so
  // the first decomposition found takes the lowest available paths.
  std::function<bool(int, std::vector<GridPoint>&)> extend =
      [&](int i, std::vector<GridPoint>& walk) -> bool {
    const GridPoint at = walk.back();
    if (at == target) {
      peeled.push_back(EdgePath{walk});
      if (i == 0) return true;
      std::vector<GridPoint> next{anchors[n - (i - 1)]};
      if (extend(i - 1, next)) return true;
      peeled.pop_back();
      return false;
    }
    for (GridPoint step : {GridPoint{at.x + 1, at.y}, GridPoint{at.x, at.y + 1}}) {
      GridEdge e(at, step);
      auto it = rem.find(e);
      if (it == rem.end() || it->second == 0) continue;
      --it->second;
      walk.push_back(step);
      if (extend(i, walk)) return true;
      walk.pop_back();
      ++it->second;
    }
    return false;
  };

  std::vector<GridPoint> first{anchors[0]};
  if (!extend(n, first)) return std::nullopt;
  return peeled;
}

bool is_mixed_lattice_path(const SnakeGraph& g, const MixedLatticePath& multiset) {
  return decompose_mixed_path(g, multiset).has_value();
}

std::vector<MixedLatticePath> enumerate_mixed_paths(const SnakeGraph& g, long long guard) {
  SnakeGraph dual(dual_word(g.word()));
  DualMap back = dual_map(dual);  // folds the dual onto g
  std::vector<MixedLatticePath> out;
  for (const MixedDimerCover& c :
       enumerate_covers(dual, VertexLabeling::standard(dual), guard))
    out.push_back(back.map_multiset(c));
  return out;
}

std::vector<std::vector<int>> twist_count_vectors(const SnakeGraph& g,
                                                  const VertexLabeling& labels,
                                                  long long guard) {
  const int n = g.tile_count();
  const auto covers = enumerate_covers(g, labels, guard);
  const VertexColoring coloring = color_vertices(g);

  std::map<MixedDimerCover, int> index;
  for (size_t i = 0; i < covers.size(); ++i) index.emplace(covers[i], static_cast<int>(i));

  std::vector<std::vector<std::pair<int, int>>> up(covers.size());  // (tile, target index)
  std::vector<int> indegree(covers.size(), 0);
  for (size_t i = 0; i < covers.size(); ++i) {
    for (int t = 1; t <= n; ++t) {
      FaceTwistOutcome r = face_twist(g, coloring, covers[i], t, TwistDirection::Positive);
      if (!r.ok()) continue;
      int j = index.at(*r.cover);
      up[i].push_back({t, j});
      ++indegree[j];
    }
  }

  int minimum = -1;
  for (size_t i = 0; i < covers.size(); ++i) {
    if (indegree[i] == 0) {
      if (minimum != -1)
        throw ValidationError("internal: twist order has more than one minimal cover");
      minimum = static_cast<int>(i);
    }
  }
  if (minimum == -1) throw ValidationError("internal: twist order has no minimal cover");

  std::vector<std::vector<int>> counts(covers.size());
  counts[minimum] = std::vector<int>(n, 0);
  std::vector<int> queue{minimum};
  size_t head = 0, reached = 1;
  while (head < queue.size()) {
    int i = queue[head++];
    for (const auto& [t, j] : up[i]) {
      std::vector<int> cand = counts[i];
      ++cand[t - 1];
      if (counts[j].empty()) {
        counts[j] = std::move(cand);
        queue.push_back(j);
        ++reached;
      } else if (counts[j] != cand) {
        throw ValidationError("internal: twist counts disagree between chains to cover " +
                              covers[j].str());
      }
    }
  }
  if (reached != covers.size())
    throw ValidationError("internal: twist order is not connected from its minimum");
  return counts;
}

std::vector<LehmerCode> snake_permutation_set(const SnakeGraph& g,
                                              const VertexLabeling& labels,
                                              long long guard) {
  const int n = g.tile_count();
  std::vector<LehmerCode> out;
  for (const std::vector<int>& counts : twist_count_vectors(g, labels, guard)) {
    std::vector<int> entries(n + 1, 0);
    for (int t = 1; t <= n; ++t) {
      if (counts[t - 1] > t)
        throw ValidationError("labeling admits " + std::to_string(counts[t - 1]) +
                              " twists at tile " + std::to_string(t) + "; at most " +
                              std::to_string(t) + " are supported");
      entries[n - t] = counts[t - 1];
    }
    out.push_back(LehmerCode(std::move(entries)));
  }
  return out;
}

}  // namespace snakedimer
