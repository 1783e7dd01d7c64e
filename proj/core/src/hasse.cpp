#include "snakedimer/hasse.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>

#include "snakedimer/errors.hpp"

namespace snakedimer {

namespace {

std::string escape_json(const std::string& text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

}  // namespace

HasseDiagram::HasseDiagram(std::vector<std::string> labels,
                           std::vector<std::pair<int, int>> covers)
    : labels_(std::move(labels)), covers_(std::move(covers)) {
  const int n = size();
  if (n == 0) {
    throw ValidationError("a diagram needs at least one element");
  }
  std::sort(covers_.begin(), covers_.end());
  covers_.erase(std::unique(covers_.begin(), covers_.end()), covers_.end());
  std::vector<std::vector<int>> up(static_cast<size_t>(n)), down(static_cast<size_t>(n));
  for (const auto& [lo, hi] : covers_) {
    if (lo < 0 || lo >= n || hi < 0 || hi >= n || lo == hi) {
      throw ValidationError("cover pair out of range");
    }
    up[static_cast<size_t>(lo)].push_back(hi);
    down[static_cast<size_t>(hi)].push_back(lo);
  }

  for (int i = 0; i < n; ++i) {
    if (down[static_cast<size_t>(i)].empty()) {
      if (minimum_ >= 0) throw ValidationError("more than one minimal element");
      minimum_ = i;
    }
    if (up[static_cast<size_t>(i)].empty()) {
      if (maximum_ >= 0) throw ValidationError("more than one maximal element");
      maximum_ = i;
    }
  }
  if (minimum_ < 0 || maximum_ < 0) {
    throw ValidationError("cover digraph has no minimal or no maximal element");
  }

  // Shortest-path rank from the minimum; every cover must climb exactly one
  // step, which also rules out transitive edges and cycles.
  rank_.assign(static_cast<size_t>(n), -1);
  rank_[static_cast<size_t>(minimum_)] = 0;
  std::deque<int> queue{minimum_};
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (int w : up[static_cast<size_t>(v)]) {
      if (rank_[static_cast<size_t>(w)] < 0) {
        rank_[static_cast<size_t>(w)] = rank_[static_cast<size_t>(v)] + 1;
        queue.push_back(w);
      }
    }
  }
  for (int i = 0; i < n; ++i) {
    if (rank_[static_cast<size_t>(i)] < 0) {
      throw ValidationError("element unreachable from the minimum (cycle or disconnection)");
    }
  }
  for (const auto& [lo, hi] : covers_) {
    if (rank_[static_cast<size_t>(hi)] != rank_[static_cast<size_t>(lo)] + 1) {
      throw ValidationError("cover from rank " + std::to_string(rank_[static_cast<size_t>(lo)]) +
                            " to rank " + std::to_string(rank_[static_cast<size_t>(hi)]) +
                            " breaks the grading");
    }
  }

  // Down-sets in rank order.
  down_.assign(static_cast<size_t>(n), Bitset(static_cast<size_t>(n)));
  std::vector<int> order(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) order[static_cast<size_t>(i)] = i;
  std::sort(order.begin(), order.end(),
            [this](int a, int b) { return rank_[static_cast<size_t>(a)] < rank_[static_cast<size_t>(b)]; });
  for (int v : order) {
    down_[static_cast<size_t>(v)].set(static_cast<size_t>(v));
    for (int w : down[static_cast<size_t>(v)]) {
      down_[static_cast<size_t>(v)] |= down_[static_cast<size_t>(w)];
    }
  }
}

const std::string& HasseDiagram::label(int i) const {
  if (i < 0 || i >= size()) throw ValidationError("element index out of range");
  return labels_[static_cast<size_t>(i)];
}

int HasseDiagram::rank(int i) const {
  if (i < 0 || i >= size()) throw ValidationError("element index out of range");
  return rank_[static_cast<size_t>(i)];
}

int HasseDiagram::max_rank() const { return rank_[static_cast<size_t>(maximum_)]; }

bool HasseDiagram::leq(int a, int b) const {
  if (a < 0 || a >= size() || b < 0 || b >= size()) {
    throw ValidationError("element index out of range");
  }
  return down_[static_cast<size_t>(b)].test(static_cast<size_t>(a));
}

const Bitset& HasseDiagram::down_set(int i) const {
  if (i < 0 || i >= size()) throw ValidationError("element index out of range");
  return down_[static_cast<size_t>(i)];
}

std::vector<int> HasseDiagram::upper_covers(int i) const {
  std::vector<int> out;
  for (const auto& [lo, hi] : covers_) {
    if (lo == i) out.push_back(hi);
  }
  return out;
}

std::vector<int> HasseDiagram::lower_covers(int i) const {
  std::vector<int> out;
  for (const auto& [lo, hi] : covers_) {
    if (hi == i) out.push_back(lo);
  }
  return out;
}

LaurentPoly rank_polynomial(const HasseDiagram& lattice, const Indeterminate& q) {
  LaurentPoly result(0);
  LaurentPoly qv = LaurentPoly::variable(q);
  for (int i = 0; i < lattice.size(); ++i) {
    result += qv.pow(lattice.rank(i));
  }
  return result;
}

namespace {

int extreme_of_bounds(const HasseDiagram& lattice, const Bitset& bounds, bool want_max) {
  if (bounds.none()) {
    throw ValidationError("elements have no common bound");
  }
  int best = -1;
  for (size_t i = bounds.find_first(); i != Bitset::npos; i = bounds.find_next(i)) {
    int candidate = static_cast<int>(i);
    if (best < 0 ||
        (want_max ? lattice.rank(candidate) > lattice.rank(best)
                  : lattice.rank(candidate) < lattice.rank(best))) {
      best = candidate;
    }
  }
  return best;
}

}  // namespace

int meet(const HasseDiagram& lattice, int x, int y) {
  Bitset common = lattice.down_set(x) & lattice.down_set(y);
  int bottom = extreme_of_bounds(lattice, common, /*want_max=*/true);
  if ((common & ~lattice.down_set(bottom)).any()) {
    throw ValidationError("no greatest lower bound: not a lattice");
  }
  return bottom;
}

int join(const HasseDiagram& lattice, int x, int y) {
  // Common upper bounds = elements whose down-set contains both x and y.
  Bitset common(static_cast<size_t>(lattice.size()));
  for (int i = 0; i < lattice.size(); ++i) {
    if (lattice.leq(x, i) && lattice.leq(y, i)) common.set(static_cast<size_t>(i));
  }
  int top = extreme_of_bounds(lattice, common, /*want_max=*/false);
  for (size_t i = common.find_first(); i != Bitset::npos; i = common.find_next(i)) {
    if (!lattice.leq(top, static_cast<int>(i))) {
      throw ValidationError("no least upper bound: not a lattice");
    }
  }
  return top;
}

FinitePoset::FinitePoset(std::vector<std::string> labels, std::vector<Bitset> leq_rows)
    : labels_(std::move(labels)), leq_(std::move(leq_rows)) {
  const size_t n = labels_.size();
  if (leq_.size() != n) throw ValidationError("relation size does not match element count");
  for (size_t a = 0; a < n; ++a) {
    if (leq_[a].size() != n) throw ValidationError("relation row has the wrong width");
    if (!leq_[a].test(a)) throw ValidationError("relation is not reflexive");
  }
  for (size_t a = 0; a < n; ++a) {
    for (size_t b = leq_[a].find_first(); b != Bitset::npos; b = leq_[a].find_next(b)) {
      if (a != b && leq_[b].test(a)) throw ValidationError("relation is not antisymmetric");
      if ((leq_[b] & ~leq_[a]).any()) throw ValidationError("relation is not transitive");
    }
  }
}

const std::string& FinitePoset::label(int i) const {
  if (i < 0 || i >= size()) throw ValidationError("element index out of range");
  return labels_[static_cast<size_t>(i)];
}

bool FinitePoset::leq(int a, int b) const {
  if (a < 0 || a >= size() || b < 0 || b >= size()) {
    throw ValidationError("element index out of range");
  }
  return leq_[static_cast<size_t>(a)].test(static_cast<size_t>(b));
}

const Bitset& FinitePoset::up_set(int a) const {
  if (a < 0 || a >= size()) throw ValidationError("element index out of range");
  return leq_[static_cast<size_t>(a)];
}

std::vector<std::pair<int, int>> FinitePoset::cover_pairs() const {
  std::vector<std::pair<int, int>> out;
  const int n = size();
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (a == b || !leq(a, b)) continue;
      bool direct = true;
      for (int c = 0; c < n && direct; ++c) {
        if (c != a && c != b && leq(a, c) && leq(c, b)) direct = false;
      }
      if (direct) out.emplace_back(a, b);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> FinitePoset::heights() const {
  const int n = size();
  std::vector<int> below(static_cast<size_t>(n), 0), height(static_cast<size_t>(n), 0);
  std::vector<int> order(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    order[static_cast<size_t>(i)] = i;
    for (int j = 0; j < n; ++j) {
      if (j != i && leq(j, i)) ++below[static_cast<size_t>(i)];
    }
  }
  std::sort(order.begin(), order.end(), [&below](int a, int b) {
    return below[static_cast<size_t>(a)] < below[static_cast<size_t>(b)];
  });
  for (int b : order) {
    for (int a = 0; a < n; ++a) {
      if (a != b && leq(a, b)) {
        height[static_cast<size_t>(b)] =
            std::max(height[static_cast<size_t>(b)], height[static_cast<size_t>(a)] + 1);
      }
    }
  }
  return height;
}

namespace {

std::vector<int> join_irreducibles(const HasseDiagram& lattice) {
  std::vector<int> counts(static_cast<size_t>(lattice.size()), 0);
  for (const auto& [lo, hi] : lattice.covers()) {
    (void)lo;
    ++counts[static_cast<size_t>(hi)];
  }
  std::vector<int> irr;
  for (int i = 0; i < lattice.size(); ++i) {
    if (counts[static_cast<size_t>(i)] == 1) irr.push_back(i);
  }
  return irr;
}

// Induced subposet of the lattice on the given elements.
FinitePoset induced_poset(const HasseDiagram& lattice, const std::vector<int>& elements) {
  const size_t k = elements.size();
  std::vector<std::string> labels(k);
  std::vector<Bitset> rows(k, Bitset(k));
  for (size_t a = 0; a < k; ++a) {
    labels[a] = lattice.label(elements[a]);
    for (size_t b = 0; b < k; ++b) {
      if (lattice.leq(elements[a], elements[b])) rows[a].set(b);
    }
  }
  return FinitePoset(std::move(labels), std::move(rows));
}

// All order ideals of the poset as bitsets, aborting once `limit` ideals have
// been found (returns an empty list in that case).
std::vector<Bitset> enumerate_ideals(const FinitePoset& poset, size_t limit) {
  const size_t n = static_cast<size_t>(poset.size());
  std::vector<Bitset> strict_down(n, Bitset(n));
  for (size_t x = 0; x < n; ++x) {
    for (size_t y = 0; y < n; ++y) {
      if (x != y && poset.leq(static_cast<int>(y), static_cast<int>(x))) strict_down[x].set(y);
    }
  }
  std::set<Bitset> seen;
  std::deque<Bitset> queue;
  Bitset empty(n);
  seen.insert(empty);
  queue.push_back(empty);
  while (!queue.empty()) {
    Bitset ideal = queue.front();
    queue.pop_front();
    for (size_t x = 0; x < n; ++x) {
      if (ideal.test(x)) continue;
      if ((strict_down[x] & ~ideal).any()) continue;
      Bitset next = ideal;
      next.set(x);
      if (seen.insert(next).second) {
        if (seen.size() > limit) return {};
        queue.push_back(next);
      }
    }
  }
  return std::vector<Bitset>(seen.begin(), seen.end());
}

}  // namespace

bool is_distributive(const HasseDiagram& lattice) {
  std::vector<int> irr = join_irreducibles(lattice);
  if (irr.empty()) return lattice.size() == 1;
  FinitePoset poset = induced_poset(lattice, irr);
  std::vector<Bitset> ideals = enumerate_ideals(poset, static_cast<size_t>(lattice.size()));
  return static_cast<int>(ideals.size()) == lattice.size();
}

FinitePoset birkhoff_poset(const HasseDiagram& lattice) {
  if (!is_distributive(lattice)) {
    throw ValidationError("lattice is not distributive");
  }
  // A singleton lattice has no join-irreducibles and yields the empty poset,
  // whose single (empty) ideal recovers the singleton.
  return induced_poset(lattice, join_irreducibles(lattice));
}

HasseDiagram ideal_lattice(const FinitePoset& poset) {
  constexpr size_t kIdealLimit = 200000;
  std::vector<Bitset> ideals = enumerate_ideals(poset, kIdealLimit);
  if (ideals.empty()) {
    throw GuardExceeded("more than " + std::to_string(kIdealLimit) + " order ideals");
  }
  std::sort(ideals.begin(), ideals.end(), [](const Bitset& a, const Bitset& b) {
    if (a.count() != b.count()) return a.count() < b.count();
    return a < b;
  });
  std::map<Bitset, int> index;
  std::vector<std::string> labels;
  for (size_t i = 0; i < ideals.size(); ++i) {
    index[ideals[i]] = static_cast<int>(i);
    std::ostringstream text;
    text << '{';
    bool first = true;
    for (size_t x = ideals[i].find_first(); x != Bitset::npos; x = ideals[i].find_next(x)) {
      if (!first) text << ',';
      text << (x + 1);
      first = false;
    }
    text << '}';
    labels.push_back(text.str());
  }
  std::vector<std::pair<int, int>> covers;
  const size_t n = static_cast<size_t>(poset.size());
  for (size_t i = 0; i < ideals.size(); ++i) {
    for (size_t x = 0; x < n; ++x) {
      if (ideals[i].test(x)) continue;
      Bitset next = ideals[i];
      next.set(x);
      auto it = index.find(next);
      if (it != index.end()) {
        covers.emplace_back(static_cast<int>(i), it->second);
      }
    }
  }
  return HasseDiagram(std::move(labels), std::move(covers));
}

std::vector<Bitset> irreducible_down_sets(const HasseDiagram& lattice) {
  std::vector<int> irr = join_irreducibles(lattice);
  std::vector<Bitset> out(static_cast<size_t>(lattice.size()), Bitset(irr.size()));
  for (int x = 0; x < lattice.size(); ++x) {
    for (size_t j = 0; j < irr.size(); ++j) {
      if (lattice.leq(irr[j], x)) out[static_cast<size_t>(x)].set(j);
    }
  }
  return out;
}

namespace {

struct IsoSearch {
  const FinitePoset& a;
  const FinitePoset& b;
  std::vector<int> image;         // a-index -> b-index or -1
  std::vector<bool> used;         // b-index taken
  std::vector<long long> profile_a, profile_b;

  bool compatible(int x, int y) const {
    if (profile_a[static_cast<size_t>(x)] != profile_b[static_cast<size_t>(y)]) return false;
    for (int x2 = 0; x2 < a.size(); ++x2) {
      int y2 = image[static_cast<size_t>(x2)];
      if (y2 < 0) continue;
      if (a.leq(x, x2) != b.leq(y, y2)) return false;
      if (a.leq(x2, x) != b.leq(y2, y)) return false;
    }
    return true;
  }

  bool extend(size_t position, const std::vector<int>& order) {
    if (position == order.size()) return true;
    int x = order[position];
    for (int y = 0; y < b.size(); ++y) {
      if (used[static_cast<size_t>(y)] || !compatible(x, y)) continue;
      image[static_cast<size_t>(x)] = y;
      used[static_cast<size_t>(y)] = true;
      if (extend(position + 1, order)) return true;
      image[static_cast<size_t>(x)] = -1;
      used[static_cast<size_t>(y)] = false;
    }
    return false;
  }
};

std::vector<long long> poset_profiles(const FinitePoset& p) {
  std::vector<int> height = p.heights();
  std::vector<long long> out(static_cast<size_t>(p.size()));
  for (int x = 0; x < p.size(); ++x) {
    long long up = 0, downward = 0;
    for (int y = 0; y < p.size(); ++y) {
      if (p.leq(x, y)) ++up;
      if (p.leq(y, x)) ++downward;
    }
    out[static_cast<size_t>(x)] =
        ((long long)height[static_cast<size_t>(x)] << 40) + (up << 20) + downward;
  }
  return out;
}

}  // namespace

std::optional<std::vector<int>> poset_isomorphism(const FinitePoset& a, const FinitePoset& b) {
  if (a.size() != b.size()) return std::nullopt;
  std::vector<long long> pa = poset_profiles(a), pb = poset_profiles(b);
  std::vector<long long> sa = pa, sb = pb;
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  if (sa != sb) return std::nullopt;
  IsoSearch search{a, b, std::vector<int>(static_cast<size_t>(a.size()), -1),
                   std::vector<bool>(static_cast<size_t>(b.size()), false), pa, pb};
  std::vector<int> order(static_cast<size_t>(a.size()));
  for (int i = 0; i < a.size(); ++i) order[static_cast<size_t>(i)] = i;
  // Assign rarest profiles first.
  std::map<long long, int> multiplicity;
  for (long long v : pa) ++multiplicity[v];
  std::sort(order.begin(), order.end(), [&](int x, int y) {
    auto kx = std::make_pair(multiplicity[pa[static_cast<size_t>(x)]], pa[static_cast<size_t>(x)]);
    auto ky = std::make_pair(multiplicity[pa[static_cast<size_t>(y)]], pa[static_cast<size_t>(y)]);
    return kx < ky;
  });
  if (search.extend(0, order)) return search.image;
  return std::nullopt;
}

namespace {

FinitePoset poset_from_diagram(const HasseDiagram& d) {
  const size_t n = static_cast<size_t>(d.size());
  std::vector<Bitset> rows(n, Bitset(n));
  for (size_t a = 0; a < n; ++a) {
    for (size_t b = 0; b < n; ++b) {
      if (d.leq(static_cast<int>(a), static_cast<int>(b))) rows[a].set(b);
    }
  }
  return FinitePoset(d.labels(), std::move(rows));
}

}  // namespace

std::optional<std::vector<int>> hasse_isomorphism(const HasseDiagram& a,
                                                 const HasseDiagram& b) {
  return poset_isomorphism(poset_from_diagram(a), poset_from_diagram(b));
}

std::string hasse_to_dot(const HasseDiagram& lattice) {
  std::ostringstream out;
  out << "digraph hasse {\n  rankdir=BT;\n  node [shape=box];\n";
  for (int i = 0; i < lattice.size(); ++i) {
    out << "  n" << i << " [label=\"" << escape_json(lattice.label(i)) << "\"];\n";
  }
  for (int r = 0; r <= lattice.max_rank(); ++r) {
    out << "  { rank=same;";
    for (int i = 0; i < lattice.size(); ++i) {
      if (lattice.rank(i) == r) out << " n" << i << ';';
    }
    out << " }\n";
  }
  for (const auto& [lo, hi] : lattice.covers()) {
    out << "  n" << lo << " -> n" << hi << ";\n";
  }
  out << "}\n";
  return out.str();
}

std::string hasse_to_json(const HasseDiagram& lattice) {
  std::ostringstream out;
  out << "{\n  \"elements\": [";
  for (int i = 0; i < lattice.size(); ++i) {
    out << (i ? ", " : "") << '"' << escape_json(lattice.label(i)) << '"';
  }
  out << "],\n  \"covers\": [";
  bool first = true;
  for (const auto& [lo, hi] : lattice.covers()) {
    out << (first ? "" : ", ") << '[' << lo << ", " << hi << ']';
    first = false;
  }
  out << "],\n  \"ranks\": [";
  for (int i = 0; i < lattice.size(); ++i) {
    out << (i ? ", " : "") << lattice.rank(i);
  }
  out << "]\n}\n";
  return out.str();
}

}  // namespace snakedimer
