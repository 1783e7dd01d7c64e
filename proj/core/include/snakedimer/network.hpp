#pragma once

#include <string>
#include <utility>
#include <vector>

#include "snakedimer/laurent.hpp"
#include "snakedimer/matrix.hpp"
#include "snakedimer/snake_graph.hpp"
#include "snakedimer/twist.hpp"

namespace snakedimer {

// One factor of a transfer-matrix product, realized as a three-column block:
// kind 'U' slides strands downward (block aligned at the top), kind 'L'
// slides them upward (aligned at the bottom).  The factor's matrix has
// a+1 rows and b+1 columns.
struct NetworkFactor {
  char kind = 'U';
  int a = 0;
  int b = 0;
};

struct NetworkArc {
  GridPoint from, to;
  LaurentPoly weight;
};

// Acyclic edge-weighted planar digraph with ordered boundary vertices;
// sources and sinks are listed top-down, matching matrix row/column order.
class Network {
 public:
  Network(std::vector<GridPoint> vertices, std::vector<NetworkArc> arcs,
          std::vector<GridPoint> sources, std::vector<GridPoint> sinks);

  const std::vector<GridPoint>& vertices() const { return vertices_; }
  const std::vector<NetworkArc>& arcs() const { return arcs_; }
  const std::vector<GridPoint>& sources() const { return sources_; }
  const std::vector<GridPoint>& sinks() const { return sinks_; }

 private:
  std::vector<GridPoint> vertices_;
  std::vector<NetworkArc> arcs_;
  std::vector<GridPoint> sources_;
  std::vector<GridPoint> sinks_;
};

// Concatenates the factor blocks left to right; consecutive factors must
// chain (previous b equals next a).  The empty list yields a single strand.
Network network_for_factors(const std::vector<NetworkFactor>& factors);
// n disjoint horizontal strands; the path-weight matrix is the identity.
Network parallel_strands(int count);

// The structural matrix a single factor realizes (transfer_U / transfer_L).
LaurentMatrix factor_matrix(const NetworkFactor& factor);

// Chains whose path-weight matrices carry the alternating-permutation and
// ballot counts in their first row: U11 L12 U23 L34 ... (n-1 factors) and
// U11 L12 L23 ... L(n-1,n) (n factors).  A chain ending in an L factor
// holds its count at (1,1); one ending in a U factor holds it in the last
// column instead, because the final column reversal is still pending.
std::vector<NetworkFactor> euler_chain_factors(int n);
std::vector<NetworkFactor> catalan_chain_factors(int n);

// Entry (i,j): weighted sum over directed paths from source i to sink j.
LaurentMatrix path_weight_matrix(const Network& net);

std::string network_to_json(const Network& net);

// Undirected bipartite residue of a network: the part between the first
// source and the first sink, with every 2-in/2-out vertex split into a
// black/white pair and extra two-valent vertices inserted where the shade
// pattern forces them.  Arcs keep their orientation; each white vertex has a
// unique incoming arc (except the source) and each black vertex a unique
// outgoing arc (except the sink).
class MatchingGraph {
 public:
  MatchingGraph(std::vector<VertexColor> colors, std::vector<std::pair<int, int>> arcs,
                int source, int sink);

  int size() const { return static_cast<int>(colors_.size()); }
  VertexColor color(int v) const;
  const std::vector<std::pair<int, int>>& arcs() const { return arcs_; }
  int source() const { return source_; }
  int sink() const { return sink_; }

 private:
  std::vector<VertexColor> colors_;
  std::vector<std::pair<int, int>> arcs_;
  int source_;
  int sink_;
};

// Keeps the chosen boundary pair (by position in the source/sink lists; the
// first of each by default) and deletes the rest of the boundary.
MatchingGraph perfectly_orient(const Network& net, int source_index = 0, int sink_index = 0);

// Exact matching count: expand on a lowest-degree vertex, memoizing on the
// set of vertices still unmatched.
BigInt count_perfect_matchings(const MatchingGraph& g);

// Every directed source-to-sink path, as a vertex sequence.
std::vector<std::vector<int>> enumerate_network_paths(const MatchingGraph& g);

// The perfect matching a path induces: arcs off the path taken black-to-
// white, arcs on the path taken white-to-black.  Distinct paths give
// distinct matchings.
std::vector<std::pair<int, int>> path_to_matching(const MatchingGraph& g,
                                                  const std::vector<int>& path);

std::string matching_graph_to_dot(const MatchingGraph& g);

}  // namespace snakedimer
