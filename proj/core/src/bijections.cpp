#include "snakedimer/bijections.hpp"

#include <map>

#include "snakedimer/errors.hpp"

namespace snakedimer {

namespace {

// Fills in the unassigned edge multiplicities by repeatedly resolving any
// vertex with exactly one unassigned incident edge, then validates the result.
MixedDimerCover complete_by_degrees(const SnakeGraph& g, const VertexLabeling& labels,
                                    std::map<GridEdge, int> mult) {
  bool progress = true;
  while (progress) {
    progress = false;
    for (const GridPoint& v : g.vertices()) {
      long long residual = labels.at(v);
      const GridEdge* open = nullptr;
      int open_count = 0;
      for (const GridEdge& e : g.edges_at(v)) {
        auto it = mult.find(e);
        if (it == mult.end()) {
          open = &e;
          ++open_count;
        } else {
          residual -= it->second;
        }
      }
      if (open_count == 1) {
        if (residual < 0) {
          throw ValidationError("assigned multiplicities exceed the label at vertex " +
                                to_string(v));
        }
        mult[*open] = static_cast<int>(residual);
        progress = true;
      } else if (open_count == 0 && residual != 0) {
        throw ValidationError("multiplicities at vertex " + to_string(v) +
                              " do not match its label");
      }
    }
  }
  for (const GridEdge& e : g.edges()) {
    if (!mult.count(e)) {
      throw ValidationError("edge multiplicities are not determined by the given values");
    }
  }
  MixedDimerCover cover{std::move(mult)};
  if (!validate_cover(g, labels, cover).valid()) {
    throw ValidationError("completed multiplicities violate the vertex labels");
  }
  return cover;
}

GridEdge straight_vertical(int column) {
  return GridEdge(GridPoint{column, 0}, GridPoint{column, 1});
}

// The final edge of the t-tile prefix of a zigzag graph: the right vertical
// for odd t, the top horizontal for even t.
GridEdge zigzag_prefix_final_edge(const SnakeGraph& g, int t) {
  const Tile& tile = g.tiles()[static_cast<size_t>(t - 1)];
  if (t == 1 || g.word()[static_cast<size_t>(t - 2)] == 'R') return tile.right();
  return tile.top();
}

// The edge shared by zigzag tiles t and t+1.
GridEdge zigzag_shared_edge(const SnakeGraph& g, int t) {
  const Tile& tile = g.tiles()[static_cast<size_t>(t - 1)];
  return g.word()[static_cast<size_t>(t - 1)] == 'U' ? tile.top() : tile.right();
}

void require_straight_horizontal(const SnakeGraph& g) {
  for (char c : g.word()) {
    if (c != 'R') {
      throw ValidationError("expected a horizontal straight snake graph, got word '" +
                            g.word() + "'");
    }
  }
}

void require_zigzag(const SnakeGraph& g) {
  if (g.word() != SnakeGraph::zigzag(g.tile_count()).word()) {
    throw ValidationError("expected a zigzag snake graph starting upward, got word '" +
                          g.word() + "'");
  }
}

// Lehmer entries L_1..L_{n-1} reconstructed from the alternating differences
// l_1..l_{n-1}: L_i = sum_{j<=i} (-1)^{j+1} l_j - floor(i/2).
std::vector<int> code_from_differences(const std::vector<int>& ell) {
  std::vector<int> code;
  code.reserve(ell.size() + 1);
  long long alternating_sum = 0;
  for (size_t i = 0; i < ell.size(); ++i) {
    alternating_sum += (i % 2 == 0 ? 1 : -1) * static_cast<long long>(ell[i]);
    code.push_back(static_cast<int>(alternating_sum - static_cast<long long>((i + 1) / 2)));
  }
  code.push_back(0);
  return code;
}

}  // namespace

VertexLabeling zigzag_standard_labeling(const SnakeGraph& graph) {
  require_zigzag(graph);
  const int n = graph.tile_count();
  // Value t on the bottom edge of each odd tile t and the left edge of each
  // even tile t; value n+1 on the top (n odd) or right (n even) edge of the
  // last tile.  For n >= 3 this agrees with VertexLabeling::standard; the one-
  // and two-tile graphs are also constant words, where the transversal rule
  // would pick a different matching.
  std::map<GridPoint, int> values;
  auto assign = [&values](const GridEdge& e, int v) {
    values[e.a] = v;
    values[e.b] = v;
  };
  for (int t = 1; t <= n; ++t) {
    const Tile& tile = graph.tiles()[static_cast<size_t>(t - 1)];
    assign(t % 2 == 1 ? tile.bottom() : tile.left(), t);
  }
  const Tile& last = graph.tiles().back();
  assign(n % 2 == 1 ? last.top() : last.right(), n + 1);
  return VertexLabeling::from_values(graph, values);
}

MixedDimerCover alt_to_cover(const Permutation& sigma) {
  const int n = sigma.size();
  if (n < 3) {
    throw ValidationError("the alternating correspondence needs at least 3 letters");
  }
  if (!classify(sigma).alternating) {
    throw ValidationError("permutation " + sigma.str() + " is not alternating");
  }
  LehmerCode code = lehmer_encode(sigma);
  std::vector<int> ell(static_cast<size_t>(n - 1), 0);
  for (int i = 1; i <= n - 1; ++i) {
    int value = 0;
    if (i == 1) {
      value = code.at(1);
    } else if (i % 2 == 0) {
      value = code.at(i - 1) - code.at(i) - 1;
    } else {
      value = code.at(i) - code.at(i - 1);
    }
    if (value < 0) {
      throw ValidationError("alternating code differences must be nonnegative");
    }
    ell[static_cast<size_t>(i - 1)] = value;
  }
  SnakeGraph g = SnakeGraph::straight(n - 2);
  std::map<GridEdge, int> mult;
  for (int column = 0; column <= n - 2; ++column) {
    mult[straight_vertical(column)] = ell[static_cast<size_t>(n - 2 - column)];
  }
  return complete_by_degrees(g, VertexLabeling::standard(g), std::move(mult));
}

Permutation cover_to_alt(const SnakeGraph& graph, const MixedDimerCover& cover) {
  require_straight_horizontal(graph);
  const int n = graph.tile_count() + 2;
  if (!validate_cover(graph, VertexLabeling::standard(graph), cover).valid()) {
    throw ValidationError("cover does not satisfy the standard labeling");
  }
  std::vector<int> ell(static_cast<size_t>(n - 1), 0);
  for (int i = 1; i <= n - 1; ++i) {
    ell[static_cast<size_t>(i - 1)] = cover.multiplicity(straight_vertical(n - 1 - i));
  }
  Permutation sigma = lehmer_decode(LehmerCode(code_from_differences(ell)));
  if (!classify(sigma).alternating) {
    throw ValidationError("cover does not correspond to an alternating permutation");
  }
  return sigma;
}

MixedDimerCover cat_to_cover(const Permutation& sigma) {
  const int n = sigma.size();
  if (n < 2) {
    throw ValidationError("the 132-avoiding correspondence needs at least 2 letters");
  }
  if (!classify(sigma).avoids_132) {
    throw ValidationError("permutation " + sigma.str() + " contains the pattern 132");
  }
  LehmerCode code = lehmer_encode(sigma);
  SnakeGraph g = SnakeGraph::zigzag(n - 1);
  std::map<GridEdge, int> mult;
  for (int t = 1; t <= n - 1; ++t) {
    mult[zigzag_prefix_final_edge(g, t)] = code.at(n - t);
  }
  for (int t = 1; t <= n - 2; ++t) {
    mult[zigzag_shared_edge(g, t)] = code.at(n - 1 - t) - code.at(n - t);
  }
  return complete_by_degrees(g, zigzag_standard_labeling(g), std::move(mult));
}

Permutation cover_to_cat(const SnakeGraph& graph, const MixedDimerCover& cover) {
  require_zigzag(graph);
  const int n = graph.tile_count() + 1;
  if (!validate_cover(graph, zigzag_standard_labeling(graph), cover).valid()) {
    throw ValidationError("cover does not satisfy the standard labeling");
  }
  std::vector<int> entries(static_cast<size_t>(n), 0);
  for (int i = 1; i <= n - 1; ++i) {
    entries[static_cast<size_t>(i - 1)] = cover.multiplicity(zigzag_prefix_final_edge(graph, n - i));
  }
  for (int i = 1; i + 1 <= n; ++i) {
    if (entries[static_cast<size_t>(i - 1)] < entries[static_cast<size_t>(i)]) {
      throw ValidationError("edge multiplicities do not form a weakly decreasing code");
    }
  }
  return lehmer_decode(LehmerCode(std::move(entries)));
}

}  // namespace snakedimer
