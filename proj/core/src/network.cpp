#include "snakedimer/network.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <map>
#include <set>
#include <sstream>

#include "snakedimer/errors.hpp"
#include "snakedimer/transfer.hpp"

namespace snakedimer {

namespace {

void check_acyclic(const std::vector<GridPoint>& vertices, const std::vector<NetworkArc>& arcs) {
  std::map<GridPoint, int> indegree;
  for (const GridPoint& v : vertices) indegree[v] = 0;
  std::map<GridPoint, std::vector<GridPoint>> out;
  for (const NetworkArc& a : arcs) {
    ++indegree[a.to];
    out[a.from].push_back(a.to);
  }
  std::vector<GridPoint> ready;
  for (const auto& [v, d] : indegree)
    if (d == 0) ready.push_back(v);
  size_t done = 0;
  while (!ready.empty()) {
    GridPoint v = ready.back();
    ready.pop_back();
    ++done;
    for (const GridPoint& w : out[v])
      if (--indegree[w] == 0) ready.push_back(w);
  }
  if (done != vertices.size()) throw ValidationError("network contains a directed cycle");
}

}  // namespace

Network::Network(std::vector<GridPoint> vertices, std::vector<NetworkArc> arcs,
                 std::vector<GridPoint> sources, std::vector<GridPoint> sinks)
    : vertices_(std::move(vertices)),
      arcs_(std::move(arcs)),
      sources_(std::move(sources)),
      sinks_(std::move(sinks)) {
  std::set<GridPoint> seen(vertices_.begin(), vertices_.end());
  if (seen.size() != vertices_.size()) throw ValidationError("network has a repeated vertex");
  auto require = [&](const GridPoint& p) {
    if (!seen.count(p))
      throw ValidationError("network references missing vertex " + to_string(p));
  };
  for (const NetworkArc& a : arcs_) {
    require(a.from);
    require(a.to);
  }
  for (const GridPoint& p : sources_) require(p);
  for (const GridPoint& p : sinks_) require(p);
  check_acyclic(vertices_, arcs_);
}

Network parallel_strands(int count) {
  if (count < 1) throw ValidationError("a network needs at least one strand");
  std::vector<GridPoint> vertices;
  std::vector<NetworkArc> arcs;
  std::vector<GridPoint> sources, sinks;
  for (int y = count - 1; y >= 0; --y) {
    vertices.push_back({0, y});
    vertices.push_back({1, y});
    arcs.push_back({{0, y}, {1, y}, LaurentPoly(1)});
    sources.push_back({0, y});
    sinks.push_back({1, y});
  }
  return Network(std::move(vertices), std::move(arcs), std::move(sources), std::move(sinks));
}

Network network_for_factors(const std::vector<NetworkFactor>& factors) {
  if (factors.empty()) return parallel_strands(1);
  std::set<GridPoint> vertex_set;
  std::vector<NetworkArc> arcs;
  std::vector<GridPoint> sources, sinks;
  int prev_lo = 0, prev_hi = -1;  // sink rows of the previous block
  for (size_t k = 0; k < factors.size(); ++k) {
    const NetworkFactor& f = factors[k];
    if (f.kind != 'U' && f.kind != 'L')
      throw ValidationError(std::string("factor kind must be 'U' or 'L', got '") + f.kind + "'");
    if (f.a < 0 || f.b < 0) throw ValidationError("factor dimensions must be nonnegative");
    if (k > 0 && factors[k - 1].b != f.a)
      throw ValidationError("factor dimensions do not chain: factor " + std::to_string(k) +
                            " has " + std::to_string(factors[k - 1].b + 1) +
                            " outputs but factor " + std::to_string(k + 1) + " expects " +
                            std::to_string(f.a + 1) + " inputs");

    const int height = std::max(f.a, f.b) + 1;
    int lo, hi;
    if (k == 0) {
      lo = 0;
      hi = height - 1;
    } else if (f.kind == 'U') {  // top-aligned with the previous sink rows
      hi = prev_hi;
      lo = hi - height + 1;
    } else {  // bottom-aligned
      lo = prev_lo;
      hi = lo + height - 1;
    }
    const int src_lo = f.kind == 'U' ? hi - f.a : lo;
    const int src_hi = src_lo + f.a;
    const int snk_lo = f.kind == 'U' ? hi - f.b : lo;
    const int snk_hi = snk_lo + f.b;
    if (k > 0 && (src_lo != prev_lo || src_hi != prev_hi))
      throw ValidationError("internal: factor block rows misaligned at factor " +
                            std::to_string(k + 1));

    const int xs = 2 * static_cast<int>(k), xm = xs + 1, xt = xs + 2;
    for (int y = src_lo; y <= src_hi; ++y) {
      vertex_set.insert({xs, y});
      arcs.push_back({{xs, y}, {xm, y}, LaurentPoly(1)});
    }
    for (int y = lo; y <= hi; ++y) vertex_set.insert({xm, y});
    if (f.kind == 'U') {
      for (int y = hi; y > lo; --y) arcs.push_back({{xm, y}, {xm, y - 1}, LaurentPoly(1)});
    } else {
      for (int y = lo; y < hi; ++y) arcs.push_back({{xm, y}, {xm, y + 1}, LaurentPoly(1)});
    }
    for (int y = snk_lo; y <= snk_hi; ++y) {
      vertex_set.insert({xt, y});
      arcs.push_back({{xm, y}, {xt, y}, LaurentPoly(1)});
    }
    if (k == 0)
      for (int y = src_hi; y >= src_lo; --y) sources.push_back({xs, y});
    if (k + 1 == factors.size())
      for (int y = snk_hi; y >= snk_lo; --y) sinks.push_back({xt, y});
    prev_lo = snk_lo;
    prev_hi = snk_hi;
  }
  return Network(std::vector<GridPoint>(vertex_set.begin(), vertex_set.end()), std::move(arcs),
                 std::move(sources), std::move(sinks));
}

LaurentMatrix factor_matrix(const NetworkFactor& factor) {
  if (factor.kind == 'U') return transfer_U(factor.a, factor.b);
  if (factor.kind == 'L') return transfer_L(factor.a, factor.b);
  throw ValidationError(std::string("factor kind must be 'U' or 'L', got '") + factor.kind +
                        "'");
}

std::vector<NetworkFactor> euler_chain_factors(int n) {
  if (n < 0) throw ValidationError("chain index must be nonnegative");
  std::vector<NetworkFactor> out;
  for (int k = 1; k <= n - 1; ++k)
    out.push_back({k % 2 == 1 ? 'U' : 'L', k == 1 ? 1 : k - 1, k == 1 ? 1 : k});
  return out;
}

std::vector<NetworkFactor> catalan_chain_factors(int n) {
  if (n < 0) throw ValidationError("chain index must be nonnegative");
  std::vector<NetworkFactor> out;
  for (int k = 1; k <= n; ++k)
    out.push_back({k == 1 ? 'U' : 'L', k == 1 ? 1 : k - 1, k == 1 ? 1 : k});
  return out;
}

LaurentMatrix path_weight_matrix(const Network& net) {
  const auto& vs = net.vertices();
  std::map<GridPoint, int> index;
  for (size_t i = 0; i < vs.size(); ++i) index.emplace(vs[i], static_cast<int>(i));

  std::vector<std::vector<std::pair<int, const LaurentPoly*>>> out(vs.size());
  std::vector<int> indegree(vs.size(), 0);
  for (const NetworkArc& a : net.arcs()) {
    out[index.at(a.from)].push_back({index.at(a.to), &a.weight});
    ++indegree[index.at(a.to)];
  }

  const int nsrc = static_cast<int>(net.sources().size());
  std::vector<std::vector<LaurentPoly>> sums(vs.size(), std::vector<LaurentPoly>(nsrc));
  for (int i = 0; i < nsrc; ++i) sums[index.at(net.sources()[i])][i] += LaurentPoly(1);

  std::vector<int> ready;
  for (size_t v = 0; v < vs.size(); ++v)
    if (indegree[v] == 0) ready.push_back(static_cast<int>(v));
  while (!ready.empty()) {
    int v = ready.back();
    ready.pop_back();
    for (const auto& [w, weight] : out[v]) {
      for (int i = 0; i < nsrc; ++i)
        if (!sums[v][i].is_zero()) sums[w][i] += sums[v][i] * *weight;
      if (--indegree[w] == 0) ready.push_back(w);
    }
  }

  LaurentMatrix m(nsrc, static_cast<int>(net.sinks().size()));
  for (int j = 0; j < static_cast<int>(net.sinks().size()); ++j)
    for (int i = 0; i < nsrc; ++i) m.at(i + 1, j + 1) = sums[index.at(net.sinks()[j])][i];
  return m;
}

std::string network_to_json(const Network& net) {
  std::map<GridPoint, int> index;
  for (size_t i = 0; i < net.vertices().size(); ++i)
    index.emplace(net.vertices()[i], static_cast<int>(i));
  std::ostringstream outs;
  outs << "{\n  \"vertices\": [";
  for (size_t i = 0; i < net.vertices().size(); ++i) {
    const GridPoint& p = net.vertices()[i];
    outs << (i ? ", " : "") << '[' << p.x << ", " << p.y << ']';
  }
  outs << "],\n  \"arcs\": [";
  for (size_t i = 0; i < net.arcs().size(); ++i) {
    const NetworkArc& a = net.arcs()[i];
    outs << (i ? ", " : "") << '[' << index.at(a.from) << ", " << index.at(a.to) << ", \""
         << a.weight.str() << "\"]";
  }
  outs << "],\n  \"sources\": [";
  for (size_t i = 0; i < net.sources().size(); ++i)
    outs << (i ? ", " : "") << index.at(net.sources()[i]);
  outs << "],\n  \"sinks\": [";
  for (size_t i = 0; i < net.sinks().size(); ++i)
    outs << (i ? ", " : "") << index.at(net.sinks()[i]);
  outs << "]\n}\n";
  return outs.str();
}

MatchingGraph::MatchingGraph(std::vector<VertexColor> colors,
                             std::vector<std::pair<int, int>> arcs, int source, int sink)
    : colors_(std::move(colors)), arcs_(std::move(arcs)), source_(source), sink_(sink) {
  const int n = size();
  auto check = [&](int v) {
    if (v < 0 || v >= n)
      throw ValidationError("matching graph references vertex " + std::to_string(v) +
                            " outside 0.." + std::to_string(n - 1));
  };
  check(source_);
  check(sink_);
  std::vector<int> indeg(n, 0), outdeg(n, 0);
  for (const auto& [u, v] : arcs_) {
    check(u);
    check(v);
    if (colors_[u] == colors_[v])
      throw ValidationError("matching graph is not bipartite: arc " + std::to_string(u) +
                            " -> " + std::to_string(v) + " joins two like vertices");
    ++outdeg[u];
    ++indeg[v];
  }
  if (colors_[source_] != VertexColor::White || indeg[source_] != 0)
    throw ValidationError("matching graph source must be white with no incoming arc");
  if (colors_[sink_] != VertexColor::Black || outdeg[sink_] != 0)
    throw ValidationError("matching graph sink must be black with no outgoing arc");
  for (int v = 0; v < n; ++v) {
    if (v == source_ || v == sink_) continue;
    if (colors_[v] == VertexColor::White && indeg[v] != 1)
      throw ValidationError("white vertex " + std::to_string(v) +
                            " must have exactly one incoming arc");
    if (colors_[v] == VertexColor::Black && outdeg[v] != 1)
      throw ValidationError("black vertex " + std::to_string(v) +
                            " must have exactly one outgoing arc");
  }
}

VertexColor MatchingGraph::color(int v) const {
  if (v < 0 || v >= size())
    throw ValidationError("matching graph has no vertex " + std::to_string(v));
  return colors_[v];
}

MatchingGraph perfectly_orient(const Network& net, int source_index, int sink_index) {
  if (source_index < 0 || source_index >= static_cast<int>(net.sources().size()) ||
      sink_index < 0 || sink_index >= static_cast<int>(net.sinks().size()))
    throw ValidationError("network has no boundary pair (" + std::to_string(source_index) +
                          ", " + std::to_string(sink_index) + ")");
  const GridPoint s = net.sources()[source_index], t = net.sinks()[sink_index];

  std::set<GridPoint> dropped;
  for (size_t i = 0; i < net.sources().size(); ++i)
    if (static_cast<int>(i) != source_index) dropped.insert(net.sources()[i]);
  for (size_t i = 0; i < net.sinks().size(); ++i)
    if (static_cast<int>(i) != sink_index) dropped.insert(net.sinks()[i]);

  std::map<GridPoint, std::vector<GridPoint>> fwd, bwd;
  for (const NetworkArc& a : net.arcs()) {
    if (dropped.count(a.from) || dropped.count(a.to)) continue;
    fwd[a.from].push_back(a.to);
    bwd[a.to].push_back(a.from);
  }
  auto reach = [](const GridPoint& from, const std::map<GridPoint, std::vector<GridPoint>>& adj) {
    std::set<GridPoint> seen{from};
    std::vector<GridPoint> stack{from};
    while (!stack.empty()) {
      GridPoint v = stack.back();
      stack.pop_back();
      auto it = adj.find(v);
      if (it == adj.end()) continue;
      for (const GridPoint& w : it->second)
        if (seen.insert(w).second) stack.push_back(w);
    }
    return seen;
  };
  const std::set<GridPoint> from_s = reach(s, fwd), to_t = reach(t, bwd);
  std::vector<GridPoint> kept;
  for (const GridPoint& v : net.vertices())
    if (from_s.count(v) && to_t.count(v)) kept.push_back(v);
  if (!from_s.count(t))
    throw ValidationError("network has no path from the chosen source to the chosen sink");

  std::vector<std::pair<GridPoint, GridPoint>> karcs;
  std::map<GridPoint, int> indeg, outdeg;
  std::set<GridPoint> kept_set(kept.begin(), kept.end());
  for (const NetworkArc& a : net.arcs()) {
    if (!kept_set.count(a.from) || !kept_set.count(a.to)) continue;
    karcs.push_back({a.from, a.to});
    ++outdeg[a.from];
    ++indeg[a.to];
  }

  // Vertex ids: a 2-in/2-out vertex becomes a black in-side and a white
  // out-side joined by an arc; everything else is one vertex, colored now
  // when its degrees force the shade.
  constexpr int kUnknown = -1;
  std::vector<int> shade;  // per id: kUnknown, 0 = black, 1 = white
  std::vector<std::pair<int, int>> arcs;
  std::map<GridPoint, std::pair<int, int>> ids;  // vertex -> (in-side id, out-side id)
  for (const GridPoint& v : kept) {
    const int din = indeg[v], dout = outdeg[v];
    if (din > 2 || dout > 2)
      throw ValidationError("internal: network vertex " + to_string(v) + " has degree (" +
                            std::to_string(din) + ", " + std::to_string(dout) + ")");
    if (din == 2 && dout == 2) {
      const int black = static_cast<int>(shade.size());
      shade.push_back(0);
      const int white = static_cast<int>(shade.size());
      shade.push_back(1);
      arcs.push_back({black, white});
      ids[v] = {black, white};
    } else {
      const int id = static_cast<int>(shade.size());
      int c = kUnknown;
      if (v == s) c = 1;
      else if (v == t) c = 0;
      else if (dout == 2) c = 1;
      else if (din == 2) c = 0;
      shade.push_back(c);
      ids[v] = {id, id};
    }
  }
  for (const auto& [u, v] : karcs) arcs.push_back({ids[u].second, ids[v].first});

  // Spread the shades across the still-free two-valent vertices.
  std::vector<std::vector<int>> touching(shade.size());
  for (size_t i = 0; i < arcs.size(); ++i) {
    touching[arcs[i].first].push_back(static_cast<int>(i));
    touching[arcs[i].second].push_back(static_cast<int>(i));
  }
  std::vector<int> queue;
  for (size_t v = 0; v < shade.size(); ++v)
    if (shade[v] != kUnknown) queue.push_back(static_cast<int>(v));
  for (size_t head = 0; head < queue.size(); ++head) {
    const int v = queue[head];
    for (int ai : touching[v]) {
      const int w = arcs[ai].first == v ? arcs[ai].second : arcs[ai].first;
      if (shade[w] == kUnknown) {
        shade[w] = 1 - shade[v];
        queue.push_back(w);
      }
    }
  }
  for (int c : shade)
    if (c == kUnknown)
      throw ValidationError("internal: disconnected piece survived network trimming");

  // Where two like shades ended up adjacent the pattern needs an extra
  // two-valent vertex on that arc.
  std::vector<std::pair<int, int>> final_arcs;
  for (const auto& [u, v] : arcs) {
    if (shade[u] != shade[v]) {
      final_arcs.push_back({u, v});
      continue;
    }
    const int mid = static_cast<int>(shade.size());
    shade.push_back(1 - shade[u]);
    final_arcs.push_back({u, mid});
    final_arcs.push_back({mid, v});
  }

  std::vector<VertexColor> colors;
  for (int c : shade) colors.push_back(c == 1 ? VertexColor::White : VertexColor::Black);
  return MatchingGraph(std::move(colors), std::move(final_arcs), ids[s].first, ids[t].first);
}

BigInt count_perfect_matchings(const MatchingGraph& g) {
  const int n = g.size();
  if (n % 2 != 0) return 0;
  std::vector<std::vector<int>> adj(n);
  for (const auto& [u, v] : g.arcs()) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  const int words = (n + 63) / 64;
  std::vector<uint64_t> alive(words, 0);
  for (int v = 0; v < n; ++v) alive[v / 64] |= uint64_t{1} << (v % 64);
  auto is_alive = [&](const std::vector<uint64_t>& mask, int v) {
    return (mask[v / 64] >> (v % 64)) & 1;
  };
  auto toggle = [](std::vector<uint64_t>& mask, int v) { mask[v / 64] ^= uint64_t{1} << (v % 64); };

  std::map<std::vector<uint64_t>, BigInt> memo;
  std::function<BigInt(std::vector<uint64_t>&, int)> go = [&](std::vector<uint64_t>& mask,
                                                              int left) -> BigInt {
    if (left == 0) return 1;
    auto it = memo.find(mask);
    if (it != memo.end()) return it->second;
    int best = -1, best_degree = std::numeric_limits<int>::max();
    for (int v = 0; v < n && best_degree > 0; ++v) {
      if (!is_alive(mask, v)) continue;
      int d = 0;
      for (int u : adj[v]) d += is_alive(mask, u) ? 1 : 0;
      if (d < best_degree) {
        best_degree = d;
        best = v;
      }
    }
    BigInt total = 0;
    if (best_degree > 0) {
      toggle(mask, best);
      for (int u : adj[best]) {
        if (!is_alive(mask, u)) continue;
        toggle(mask, u);
        total += go(mask, left - 2);
        toggle(mask, u);
      }
      toggle(mask, best);
    }
    memo.emplace(mask, total);
    return total;
  };
  std::vector<uint64_t> mask = alive;
  return go(mask, n);
}

std::vector<std::vector<int>> enumerate_network_paths(const MatchingGraph& g) {
  std::vector<std::vector<int>> out(g.size());
  for (const auto& [u, v] : g.arcs()) out[u].push_back(v);
  std::vector<std::vector<int>> paths;
  std::vector<int> walk{g.source()};
  std::function<void()> dfs = [&]() {
    const int at = walk.back();
    if (at == g.sink()) {
      paths.push_back(walk);
      return;
    }
    for (int w : out[at]) {
      walk.push_back(w);
      dfs();
      walk.pop_back();
    }
  };
  dfs();
  return paths;
}

std::vector<std::pair<int, int>> path_to_matching(const MatchingGraph& g,
                                                  const std::vector<int>& path) {
  if (path.empty() || path.front() != g.source() || path.back() != g.sink())
    throw ValidationError("path must run from the source to the sink");
  std::set<std::pair<int, int>> arc_set(g.arcs().begin(), g.arcs().end());
  std::set<std::pair<int, int>> on_path;
  for (size_t i = 0; i + 1 < path.size(); ++i) {
    std::pair<int, int> step{path[i], path[i + 1]};
    if (!arc_set.count(step))
      throw ValidationError("path step " + std::to_string(step.first) + " -> " +
                            std::to_string(step.second) + " is not an arc of the graph");
    on_path.insert(step);
  }
  std::vector<std::pair<int, int>> matching;
  std::vector<int> covered(g.size(), 0);
  for (const auto& arc : g.arcs()) {
    const bool on = on_path.count(arc) > 0;
    const bool take = on ? (g.color(arc.first) == VertexColor::White &&
                            g.color(arc.second) == VertexColor::Black)
                         : (g.color(arc.first) == VertexColor::Black &&
                            g.color(arc.second) == VertexColor::White);
    if (!take) continue;
    matching.push_back(arc);
    ++covered[arc.first];
    ++covered[arc.second];
  }
  for (int v = 0; v < g.size(); ++v)
    if (covered[v] != 1)
      throw ValidationError("internal: path induces " + std::to_string(covered[v]) +
                            " matching edges at vertex " + std::to_string(v));
  std::sort(matching.begin(), matching.end());
  return matching;
}

std::string matching_graph_to_dot(const MatchingGraph& g) {
  std::ostringstream out;
  out << "graph matching {\n  node [shape=circle, style=filled, fixedsize=true, width=0.25];\n";
  for (int v = 0; v < g.size(); ++v) {
    out << "  v" << v << " [fillcolor=" << (g.color(v) == VertexColor::White ? "white" : "black")
        << (g.color(v) == VertexColor::White ? "" : ", fontcolor=white");
    if (v == g.source() || v == g.sink()) out << ", peripheries=2";
    out << "];\n";
  }
  for (const auto& [u, v] : g.arcs()) out << "  v" << u << " -- v" << v << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace snakedimer
