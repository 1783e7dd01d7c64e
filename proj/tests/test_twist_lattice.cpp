#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "snakedimer/bijections.hpp"
#include "snakedimer/dimer_cover.hpp"
#include "snakedimer/errors.hpp"
#include "snakedimer/hasse.hpp"
#include "snakedimer/permutation.hpp"
#include "snakedimer/snake_graph.hpp"
#include "snakedimer/transfer.hpp"
#include "snakedimer/twist.hpp"

using namespace snakedimer;

namespace {

std::vector<std::string> all_words(int length) {
  std::vector<std::string> out{""};
  for (int i = 0; i < length; ++i) {
    std::vector<std::string> next;
    for (const std::string& w : out) {
      next.push_back(w + "R");
      next.push_back(w + "U");
    }
    out = next;
  }
  return out;
}

// True when the entries form the Lehmer code of a permutation in the class.
bool in_class(const std::vector<int>& entries, PermutationClass cls) {
  const int n = static_cast<int>(entries.size());
  for (int i = 1; i <= n; ++i) {
    if (entries[static_cast<size_t>(i - 1)] < 0 ||
        entries[static_cast<size_t>(i - 1)] > n - i) {
      return false;
    }
  }
  Permutation sigma = lehmer_decode(LehmerCode(entries));
  PermutationClassification c = classify(sigma);
  return cls == PermutationClass::Alternating ? c.alternating : c.avoids_132;
}

}  // namespace

TEST_CASE("checkerboard coloring anchors") {
  SnakeGraph straight4 = SnakeGraph::straight(4);  // word RRR
  VertexColoring coloring = color_vertices(straight4);
  CHECK(coloring.at(GridPoint{4, 0}) == VertexColor::Black);
  CHECK(coloring.at(GridPoint{0, 0}) == VertexColor::Black);  // same parity
  CHECK(coloring.at(GridPoint{1, 0}) == VertexColor::White);

  SnakeGraph zig5 = SnakeGraph::zigzag(5);  // word URUR, ends in R
  coloring = color_vertices(zig5);
  CHECK(coloring.at(GridPoint{3, 2}) == VertexColor::Black);

  SnakeGraph zig4 = SnakeGraph::zigzag(4);  // word URU, ends in U
  coloring = color_vertices(zig4);
  CHECK(coloring.at(GridPoint{2, 3}) == VertexColor::Black);

  for (const std::string& word : all_words(3)) {
    SnakeGraph g = build_snake(word);
    VertexColoring c = color_vertices(g);
    for (const GridEdge& e : g.edges()) {
      CHECK(c.at(e.a) != c.at(e.b));
    }
    VertexColoring r = c.reversed();
    for (const GridPoint& v : g.vertices()) {
      CHECK(c.at(v) != r.at(v));
    }
    for (const Tile& tile : g.tiles()) {
      CHECK(odd_edges(tile, c).size() == 2);
    }
  }
}

TEST_CASE("single tile twists walk the two-element chain") {
  SnakeGraph g = SnakeGraph::straight(1);
  VertexLabeling labels = VertexLabeling::from_matching_values(g, {1, 2});
  VertexColoring coloring = color_vertices(g);
  std::vector<MixedDimerCover> covers = enumerate_covers(g, labels);
  REQUIRE(covers.size() == 2);

  GridEdge bottom(GridPoint{0, 0}, GridPoint{1, 0});
  auto with_horizontal = std::find_if(covers.begin(), covers.end(), [&](const auto& c) {
    return c.multiplicity(bottom) == 1;
  });
  REQUIRE(with_horizontal != covers.end());
  MixedDimerCover low = *with_horizontal;

  FaceTwistOutcome up = face_twist(g, coloring, low, 1, TwistDirection::Positive);
  REQUIRE(up.ok());
  CHECK(up.cover->multiplicity(bottom) == 0);
  CHECK(up.cover->multiplicity(GridEdge(GridPoint{0, 0}, GridPoint{0, 1})) == 1);
  CHECK(up.cover->multiplicity(GridEdge(GridPoint{1, 0}, GridPoint{1, 1})) == 2);

  // The top cover cannot be twisted further; the bottom edge blocks first.
  FaceTwistOutcome blocked = face_twist(g, coloring, *up.cover, 1, TwistDirection::Positive);
  CHECK_FALSE(blocked.ok());
  CHECK(blocked.blocking_edge == bottom);

  // Negative is the exact inverse, and is refused at the minimum.
  FaceTwistOutcome down = face_twist(g, coloring, *up.cover, 1, TwistDirection::Negative);
  REQUIRE(down.ok());
  CHECK(*down.cover == low);
  CHECK_FALSE(face_twist(g, coloring, low, 1, TwistDirection::Negative).ok());

  CHECK_THROWS_AS(face_twist(g, coloring, low, 0, TwistDirection::Positive), ValidationError);
  CHECK_THROWS_AS(face_twist(g, coloring, low, 2, TwistDirection::Positive), ValidationError);
}

TEST_CASE("twists preserve validity and invert each other") {
  for (const std::string& word : {"", "R", "UR", "RRU", "URU"}) {
    SnakeGraph g = build_snake(word);
    VertexLabeling labels = VertexLabeling::standard(g);
    VertexColoring coloring = color_vertices(g);
    for (const MixedDimerCover& cover : enumerate_covers(g, labels)) {
      for (int t = 1; t <= g.tile_count(); ++t) {
        FaceTwistOutcome outcome = face_twist(g, coloring, cover, t, TwistDirection::Positive);
        if (!outcome.ok()) continue;
        CHECK(validate_cover(g, labels, *outcome.cover).valid());
        FaceTwistOutcome back =
            face_twist(g, coloring, *outcome.cover, t, TwistDirection::Negative);
        REQUIRE(back.ok());
        CHECK(*back.cover == cover);
      }
    }
  }
}

TEST_CASE("the bottom of the zigzag lattice admits no negative twist") {
  SnakeGraph g = SnakeGraph::zigzag(3);
  VertexColoring coloring = color_vertices(g);
  MixedDimerCover minimal = cat_to_cover(Permutation::identity(4));
  for (int t = 1; t <= 3; ++t) {
    CHECK_FALSE(face_twist(g, coloring, minimal, t, TwistDirection::Negative).ok());
  }
  HasseDiagram lattice = build_lattice(g, zigzag_standard_labeling(g));
  CHECK(lattice.label(lattice.minimum()) == minimal.str());
}

TEST_CASE("rank generating functions of the two flagship lattices") {
  Indeterminate q("q");
  LaurentPoly qv = LaurentPoly::variable(q);

  SnakeGraph gs = SnakeGraph::straight(3);
  HasseDiagram straight_lattice = build_lattice(gs, VertexLabeling::standard(gs));
  CHECK(straight_lattice.size() == 16);
  LaurentPoly expected = LaurentPoly(1) + 2 * qv + 3 * qv.pow(2) + 4 * qv.pow(3) +
                         3 * qv.pow(4) + 2 * qv.pow(5) + qv.pow(6);
  CHECK(rank_polynomial(straight_lattice, q) == expected);
  CHECK(qv.pow(2) * rank_polynomial(straight_lattice, q) == q_euler_poly(5, q));

  SnakeGraph gz = SnakeGraph::zigzag(3);
  HasseDiagram zig_lattice = build_lattice(gz, zigzag_standard_labeling(gz));
  CHECK(zig_lattice.size() == 14);
  CHECK(rank_polynomial(zig_lattice, q) == q_catalan_poly(4, q));
}

TEST_CASE("rank polynomials match the weighted matrix products") {
  Indeterminate q("q");
  LaurentPoly qv = LaurentPoly::variable(q);
  for (int n = 4; n <= 7; ++n) {
    SnakeGraph g = SnakeGraph::straight(n - 2);
    HasseDiagram lattice = build_lattice(g, VertexLabeling::standard(g));
    CHECK(qv.pow(n / 2) * rank_polynomial(lattice, q) == q_euler_poly(n, q));
  }
  for (int n = 2; n <= 6; ++n) {
    SnakeGraph g = SnakeGraph::zigzag(n - 1);
    HasseDiagram lattice = build_lattice(g, zigzag_standard_labeling(g));
    CHECK(rank_polynomial(lattice, q) == q_catalan_poly(n, q));
  }
}

TEST_CASE("degenerate and guarded lattices") {
  SnakeGraph g = SnakeGraph::straight(3);
  HasseDiagram trivial = build_lattice(g, VertexLabeling::constant(g, 0));
  CHECK(trivial.size() == 1);
  CHECK(trivial.covers().empty());
  CHECK(rank_polynomial(trivial) == LaurentPoly(1));
  CHECK(trivial.minimum() == trivial.maximum());

  CHECK_THROWS_AS(build_lattice(g, VertexLabeling::constant(g, 50), 10), GuardExceeded);
}

TEST_CASE("every short word yields a graded distributive lattice") {
  Indeterminate q("q");
  for (int length = 0; length <= 5; ++length) {
    for (const std::string& word : all_words(length)) {
      SnakeGraph g = build_snake(word);
      VertexLabeling labels = VertexLabeling::standard(g);
      // Construction already validates acyclicity, grading, unique extremes.
      HasseDiagram lattice = build_lattice(g, labels);
      CHECK(is_distributive(lattice));
      CHECK(rank_polynomial(lattice, q).sum_of_coefficients() == BigInt(lattice.size()));
      CHECK(BigInt(enumerate_covers(g, labels).size()) == BigInt(lattice.size()));
    }
  }
}

TEST_CASE("meet and join behave like lattice operations") {
  SnakeGraph g = SnakeGraph::zigzag(3);
  HasseDiagram lattice = build_lattice(g, zigzag_standard_labeling(g));
  const int n = lattice.size();
  for (int x = 0; x < n; ++x) {
    CHECK(meet(lattice, x, x) == x);
    CHECK(join(lattice, x, x) == x);
    CHECK(meet(lattice, x, lattice.minimum()) == lattice.minimum());
    CHECK(join(lattice, x, lattice.maximum()) == lattice.maximum());
    for (int y = 0; y < n; ++y) {
      int m = meet(lattice, x, y);
      int j = join(lattice, x, y);
      CHECK(meet(lattice, y, x) == m);
      CHECK(join(lattice, y, x) == j);
      CHECK(lattice.leq(m, x));
      CHECK(lattice.leq(m, y));
      CHECK(lattice.leq(x, j));
      CHECK(join(lattice, x, m) == x);   // absorption
      CHECK(meet(lattice, x, j) == x);
    }
  }
}

TEST_CASE("distributive law verified on all triples of the flagship lattices") {
  for (bool zig : {false, true}) {
    SnakeGraph g = zig ? SnakeGraph::zigzag(3) : SnakeGraph::straight(3);
    VertexLabeling labels = zig ? zigzag_standard_labeling(g) : VertexLabeling::standard(g);
    HasseDiagram lattice = build_lattice(g, labels);
    const int n = lattice.size();
    for (int x = 0; x < n; ++x) {
      for (int y = 0; y < n; ++y) {
        for (int z = 0; z < n; ++z) {
          CHECK(meet(lattice, x, join(lattice, y, z)) ==
                join(lattice, meet(lattice, x, y), meet(lattice, x, z)));
        }
      }
    }
  }
}

TEST_CASE("underlying poset of the zigzag lattices is the interval-containment poset") {
  for (int tiles = 1; tiles <= 4; ++tiles) {
    SnakeGraph g = SnakeGraph::zigzag(tiles);
    HasseDiagram lattice = build_lattice(g, zigzag_standard_labeling(g));
    FinitePoset poset = birkhoff_poset(lattice);
    CHECK(poset.size() == tiles * (tiles + 1) / 2);

    // Intervals [i,j] within 1..tiles ordered by reverse containment: the
    // full interval sits at the bottom and the singletons are the maxima.
    std::vector<std::pair<int, int>> intervals;
    for (int i = 1; i <= tiles; ++i) {
      for (int j = i; j <= tiles; ++j) intervals.emplace_back(i, j);
    }
    std::vector<std::string> names;
    std::vector<Bitset> rows(intervals.size(), Bitset(intervals.size()));
    for (size_t a = 0; a < intervals.size(); ++a) {
      names.push_back("[" + std::to_string(intervals[a].first) + "," +
                      std::to_string(intervals[a].second) + "]");
      for (size_t b = 0; b < intervals.size(); ++b) {
        if (intervals[a].first <= intervals[b].first &&
            intervals[b].second <= intervals[a].second) {
          rows[a].set(b);
        }
      }
    }
    FinitePoset root_poset(names, rows);
    CHECK(poset_isomorphism(poset, root_poset).has_value());

    HasseDiagram ideals = ideal_lattice(root_poset);
    CHECK(BigInt(ideals.size()) == catalan_number(tiles + 1));
    CHECK(hasse_isomorphism(ideals, lattice).has_value());
  }
}

TEST_CASE("underlying poset of the small straight lattices") {
  SnakeGraph g2 = SnakeGraph::straight(2);
  FinitePoset p2 = birkhoff_poset(build_lattice(g2, VertexLabeling::standard(g2)));
  CHECK(p2.size() == 3);
  std::vector<int> h2 = p2.heights();
  CHECK(std::count(h2.begin(), h2.end(), 0) == 1);
  CHECK(std::count(h2.begin(), h2.end(), 1) == 2);

  SnakeGraph g3 = SnakeGraph::straight(3);
  FinitePoset p3 = birkhoff_poset(build_lattice(g3, VertexLabeling::standard(g3)));
  CHECK(p3.size() == 6);
  std::vector<int> h3 = p3.heights();
  CHECK(std::count(h3.begin(), h3.end(), 0) == 2);
  CHECK(std::count(h3.begin(), h3.end(), 1) == 2);
  CHECK(std::count(h3.begin(), h3.end(), 2) == 2);
}

TEST_CASE("chains decompose to chains") {
  SnakeGraph g = SnakeGraph::straight(1);
  VertexLabeling labels = VertexLabeling::from_matching_values(g, {3, 3});
  HasseDiagram lattice = build_lattice(g, labels);
  CHECK(lattice.size() == 4);
  CHECK(lattice.max_rank() == 3);

  FinitePoset poset = birkhoff_poset(lattice);
  CHECK(poset.size() == 3);
  CHECK(poset.cover_pairs().size() == 2);
  std::vector<int> h = poset.heights();
  std::sort(h.begin(), h.end());
  CHECK(h == std::vector<int>{0, 1, 2});

  HasseDiagram back = ideal_lattice(poset);
  CHECK(back.size() == 4);
  CHECK(hasse_isomorphism(back, lattice).has_value());
}

TEST_CASE("ideal lattice round-trip for every short word") {
  for (int length = 0; length <= 3; ++length) {
    for (const std::string& word : all_words(length)) {
      SnakeGraph g = build_snake(word);
      HasseDiagram lattice = build_lattice(g, VertexLabeling::standard(g));
      HasseDiagram rebuilt = ideal_lattice(birkhoff_poset(lattice));
      CHECK(rebuilt.size() == lattice.size());
      CHECK(hasse_isomorphism(rebuilt, lattice).has_value());
    }
  }
}

TEST_CASE("ideal lattice round-trip via canonical irreducible sets") {
  // Larger case: match elements by their sets of join-irreducibles instead of
  // searching for an isomorphism.
  SnakeGraph g = SnakeGraph::straight(5);
  HasseDiagram lattice = build_lattice(g, VertexLabeling::standard(g));
  CHECK(lattice.size() == 272);
  HasseDiagram rebuilt = ideal_lattice(birkhoff_poset(lattice));
  REQUIRE(rebuilt.size() == 272);

  std::vector<Bitset> down = irreducible_down_sets(lattice);
  std::map<std::string, int> rebuilt_index;
  for (int i = 0; i < rebuilt.size(); ++i) rebuilt_index[rebuilt.label(i)] = i;
  std::vector<int> image(static_cast<size_t>(lattice.size()));
  for (int x = 0; x < lattice.size(); ++x) {
    std::string key = "{";
    bool first = true;
    for (size_t j = down[static_cast<size_t>(x)].find_first(); j != Bitset::npos;
         j = down[static_cast<size_t>(x)].find_next(j)) {
      if (!first) key += ',';
      key += std::to_string(j + 1);
      first = false;
    }
    key += '}';
    auto it = rebuilt_index.find(key);
    REQUIRE(it != rebuilt_index.end());
    image[static_cast<size_t>(x)] = it->second;
  }
  std::set<std::pair<int, int>> mapped;
  for (const auto& [lo, hi] : lattice.covers()) {
    mapped.emplace(image[static_cast<size_t>(lo)], image[static_cast<size_t>(hi)]);
  }
  std::set<std::pair<int, int>> target(rebuilt.covers().begin(), rebuilt.covers().end());
  CHECK(mapped == target);
}

TEST_CASE("the five-element diamond is rejected as non-distributive") {
  HasseDiagram diamond({"0", "a", "b", "c", "1"},
                       {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}});
  CHECK_FALSE(is_distributive(diamond));
  CHECK_THROWS_AS(birkhoff_poset(diamond), ValidationError);
}

TEST_CASE("positive twists increment one code entry") {
  for (int n = 4; n <= 6; ++n) {
    SnakeGraph g = SnakeGraph::straight(n - 2);
    VertexLabeling labels = VertexLabeling::standard(g);
    VertexColoring coloring = color_vertices(g);
    for (const MixedDimerCover& cover : enumerate_covers(g, labels)) {
      std::vector<int> code = lehmer_encode(cover_to_alt(g, cover)).entries();
      for (int t = 1; t <= g.tile_count(); ++t) {
        int position = n - 1 - t;  // tiles act on the code right-to-left
        std::vector<int> bumped = code;
        ++bumped[static_cast<size_t>(position - 1)];
        FaceTwistOutcome outcome = face_twist(g, coloring, cover, t, TwistDirection::Positive);
        if (outcome.ok()) {
          CHECK(lehmer_encode(cover_to_alt(g, *outcome.cover)).entries() == bumped);
        } else {
          CHECK_FALSE(in_class(bumped, PermutationClass::Alternating));
        }
      }
    }
  }
  for (int n = 2; n <= 6; ++n) {
    SnakeGraph g = SnakeGraph::zigzag(n - 1);
    VertexLabeling labels = zigzag_standard_labeling(g);
    VertexColoring coloring = color_vertices(g);
    for (const MixedDimerCover& cover : enumerate_covers(g, labels)) {
      std::vector<int> code = lehmer_encode(cover_to_cat(g, cover)).entries();
      for (int t = 1; t <= g.tile_count(); ++t) {
        int position = n - t;
        std::vector<int> bumped = code;
        ++bumped[static_cast<size_t>(position - 1)];
        FaceTwistOutcome outcome = face_twist(g, coloring, cover, t, TwistDirection::Positive);
        if (outcome.ok()) {
          CHECK(lehmer_encode(cover_to_cat(g, *outcome.cover)).entries() == bumped);
        } else {
          CHECK_FALSE(in_class(bumped, PermutationClass::Avoiding132));
        }
      }
    }
  }
}

TEST_CASE("reversing the coloring turns the lattice upside down") {
  for (const std::string& word : {"R", "UR", "RRU"}) {
    SnakeGraph g = build_snake(word);
    VertexLabeling labels = VertexLabeling::standard(g);
    HasseDiagram forward = build_lattice(g, labels);
    HasseDiagram backward = build_lattice(g, labels, color_vertices(g).reversed());
    std::set<std::pair<int, int>> flipped;
    for (const auto& [lo, hi] : forward.covers()) flipped.emplace(hi, lo);
    std::set<std::pair<int, int>> got(backward.covers().begin(), backward.covers().end());
    CHECK(flipped == got);
    CHECK(backward.minimum() == forward.maximum());
    CHECK(backward.maximum() == forward.minimum());
  }
}

TEST_CASE("lattice exports") {
  SnakeGraph g = SnakeGraph::zigzag(1);
  HasseDiagram lattice = build_lattice(g, zigzag_standard_labeling(g));
  std::string dot = hasse_to_dot(lattice);
  CHECK(dot.find("digraph hasse") != std::string::npos);
  CHECK(dot.find("n0 -> n1") != std::string::npos);
  CHECK(dot.find("rank=same") != std::string::npos);
  std::string json = hasse_to_json(lattice);
  CHECK(json.find("\"elements\"") != std::string::npos);
  CHECK(json.find("\"covers\": [[0, 1]]") != std::string::npos);
  CHECK(json.find("\"ranks\": [0, 1]") != std::string::npos);
}
