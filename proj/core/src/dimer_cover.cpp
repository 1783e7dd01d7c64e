#include "snakedimer/dimer_cover.hpp"

#include <algorithm>

#include "snakedimer/transfer.hpp"

namespace snakedimer {

MixedDimerCover::MixedDimerCover(std::map<GridEdge, int> mult) {
  for (auto it = mult.begin(); it != mult.end();) {
    if (it->second < 0)
      throw ValidationError("negative multiplicity on edge " + to_string(it->first));
    if (it->second == 0)
      it = mult.erase(it);
    else
      ++it;
  }
  mult_ = std::move(mult);
}

int MixedDimerCover::multiplicity(const GridEdge& e) const {
  auto it = mult_.find(e);
  return it == mult_.end() ? 0 : it->second;
}

int MixedDimerCover::total() const {
  int t = 0;
  for (const auto& [e, m] : mult_) t += m;
  return t;
}

std::string MixedDimerCover::str() const {
  if (mult_.empty()) return "(empty)";
  std::string s;
  for (const auto& [e, m] : mult_) {
    if (!s.empty()) s += "; ";
    s += to_string(e) + ":" + std::to_string(m);
  }
  return s;
}

MixedDimerCover canonical_dimer_cover(const SnakeGraph& g) {
  std::map<GridEdge, int> m;
  for (const GridEdge& e : g.canonical_matching()) m[e] = 1;
  return MixedDimerCover(std::move(m));
}

ValidityReport validate_cover(const SnakeGraph& g, const VertexLabeling& labels,
                              const MixedDimerCover& cover) {
  for (const auto& [e, m] : cover.entries())
    if (!g.has_edge(e))
      throw ValidationError("cover uses edge " + to_string(e) + " outside the graph");
  ValidityReport report;
  for (const GridPoint& v : g.vertices()) {
    int sum = 0;
    for (const GridEdge& e : g.edges_at(v)) sum += cover.multiplicity(e);
    int want = labels.at(v);
    if (sum != want) report.violations.push_back({v, want, sum});
  }
  return report;
}

namespace {

struct Enumerator {
  const SnakeGraph& g;
  std::vector<GridEdge> order;            // assignment order (by introducing tile)
  std::map<GridPoint, int> residual;      // label minus placed multiplicity
  std::map<GridPoint, int> open_edges;    // unassigned incident edges
  std::map<GridEdge, int> current;
  std::vector<MixedDimerCover>* out;      // null => count only
  BigInt count = 0;

  Enumerator(const SnakeGraph& graph, const VertexLabeling& labels,
             std::vector<MixedDimerCover>* sink)
      : g(graph), out(sink) {
    order = g.edges();
    std::stable_sort(order.begin(), order.end(), [&](const GridEdge& a, const GridEdge& b) {
      return g.first_tile_of(a) < g.first_tile_of(b);
    });
    for (const GridPoint& v : g.vertices()) {
      residual[v] = labels.at(v);
      open_edges[v] = static_cast<int>(g.edges_at(v).size());
    }
  }

  void run(size_t i) {
    if (i == order.size()) {
      if (out) out->emplace_back(current);
      ++count;
      return;
    }
    const GridEdge& e = order[i];
    int& ra = residual[e.a];
    int& rb = residual[e.b];
    int& oa = open_edges[e.a];
    int& ob = open_edges[e.b];
    --oa;
    --ob;
    int hi = std::min(ra, rb);
    for (int k = 0; k <= hi; ++k) {
      if (oa == 0 && k != ra) continue;  // last edge at a vertex is forced
      if (ob == 0 && k != rb) continue;
      ra -= k;
      rb -= k;
      if (out && k > 0) current[e] = k;
      run(i + 1);
      if (out && k > 0) current.erase(e);
      ra += k;
      rb += k;
    }
    ++oa;
    ++ob;
  }
};

BigInt enumeration_bound(const SnakeGraph& g, const VertexLabeling& labels) {
  BigInt bound = 1;
  for (const GridEdge& e : g.canonical_matching())
    bound *= std::min(labels.at(e.a), labels.at(e.b)) + 1;
  return bound;
}

}  // namespace

std::vector<MixedDimerCover> enumerate_covers(const SnakeGraph& g,
                                              const VertexLabeling& labels,
                                              long long guard) {
  BigInt bound = enumeration_bound(g, labels);
  if (bound > guard)
    throw GuardExceeded("predicted search space " + bound.str() + " exceeds guard " +
                        std::to_string(guard));
  std::vector<MixedDimerCover> out;
  Enumerator(g, labels, &out).run(0);
  // Canonical output order: multiplicity vectors over the sorted edge list.
  std::sort(out.begin(), out.end(), [&](const MixedDimerCover& x, const MixedDimerCover& y) {
    for (const GridEdge& e : g.edges()) {
      int mx = x.multiplicity(e), my = y.multiplicity(e);
      if (mx != my) return mx < my;
    }
    return false;
  });
  return out;
}

BigInt count_covers(const SnakeGraph& g, const VertexLabeling& labels, CountMethod method,
                    long long guard) {
  auto matrix_count = [&]() -> BigInt {
    std::vector<int> m = labels.matching_values(g);
    LaurentMatrix prod =
        is_straight_word(g.word()) ? straight_product(m) : zigzag_product(m);
    return prod.at(1, 1).constant_value();
  };
  auto brute_count = [&]() -> BigInt {
    BigInt bound = enumeration_bound(g, labels);
    if (bound > guard)
      throw GuardExceeded("predicted search space " + bound.str() + " exceeds guard " +
                          std::to_string(guard));
    Enumerator counter(g, labels, nullptr);
    counter.run(0);
    return counter.count;
  };
  switch (method) {
    case CountMethod::Brute:
      return brute_count();
    case CountMethod::Matrix:
      if (!is_straight_word(g.word()) && !is_zigzag_word(g.word()))
        throw ValidationError("matrix counting requires a straight or zigzag word, got '" +
                              g.word() + "'");
      return matrix_count();
    case CountMethod::Auto: {
      if (is_straight_word(g.word()) || is_zigzag_word(g.word())) {
        bool constant_on_matching = true;
        for (const GridEdge& e : g.canonical_matching())
          constant_on_matching = constant_on_matching && labels.at(e.a) == labels.at(e.b);
        if (constant_on_matching) return matrix_count();
      }
      return brute_count();
    }
  }
  throw ValidationError("unknown counting method");
}

std::vector<MixedDimerCover> filter_by_final_edge(const SnakeGraph& g,
                                                  const std::vector<MixedDimerCover>& covers,
                                                  const GridEdge& edge, int k) {
  if (!g.has_edge(edge))
    throw ValidationError("filter edge " + to_string(edge) + " is not part of the graph");
  std::vector<MixedDimerCover> out;
  for (const MixedDimerCover& c : covers)
    if (c.multiplicity(edge) == k) out.push_back(c);
  return out;
}

}  // namespace snakedimer
