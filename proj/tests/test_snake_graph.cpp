#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>
#include <string>
#include <vector>

#include "snakedimer/snake_graph.hpp"

using namespace snakedimer;

namespace {

std::vector<std::string> all_words_up_to(int max_len) {
  std::vector<std::string> out = {""};
  for (size_t i = 0; i < out.size(); ++i) {
    if (static_cast<int>(out[i].size()) < max_len) {
      out.push_back(out[i] + "R");
      out.push_back(out[i] + "U");
    }
  }
  return out;
}

}  // namespace

TEST_CASE("grid primitives") {
  GridEdge e({1, 2}, {1, 1});
  CHECK(e.a == GridPoint{1, 1});
  CHECK(e.b == GridPoint{1, 2});
  CHECK(e.vertical());
  CHECK_FALSE(e.horizontal());
  CHECK_THROWS_AS(GridEdge({0, 0}, {1, 1}), ValidationError);
  CHECK_THROWS_AS(GridEdge({0, 0}, {0, 0}), ValidationError);
  CHECK(to_string(e) == "(1,1)-(1,2)");

  Tile t{{2, 3}};
  CHECK(t.bottom() == GridEdge({2, 3}, {3, 3}));
  CHECK(t.top() == GridEdge({2, 4}, {3, 4}));
  CHECK(t.left() == GridEdge({2, 3}, {2, 4}));
  CHECK(t.right() == GridEdge({3, 3}, {3, 4}));
  CHECK(t.contains(t.top()));
  CHECK_FALSE(t.contains(GridEdge({0, 0}, {1, 0})));
}

TEST_CASE("one-tile snake") {
  SnakeGraph g("");
  CHECK(g.tile_count() == 1);
  CHECK(g.vertices().size() == 4);
  CHECK(g.edges().size() == 4);
  CHECK(g.canonical_matching() ==
        std::vector<GridEdge>{GridEdge({0, 0}, {0, 1}), GridEdge({1, 0}, {1, 1})});
  CHECK(canonical_lattice_path(g).step_word() == "RU");
  CHECK(g.final_edge() == GridEdge({1, 0}, {1, 1}));
}

TEST_CASE("straight snake RRR") {
  SnakeGraph g("RRR");
  CHECK(g.tile_count() == 4);
  CHECK(g.vertices().size() == 10);
  CHECK(g.edges().size() == 13);
  std::vector<GridEdge> verticals;
  for (int x = 0; x <= 4; ++x) verticals.push_back(GridEdge({x, 0}, {x, 1}));
  CHECK(g.canonical_matching() == verticals);
  VertexLabeling lab = standard_labeling(g);
  for (int x = 0; x <= 4; ++x) {
    CHECK(lab.at({x, 0}) == x + 1);
    CHECK(lab.at({x, 1}) == x + 1);
  }
  EdgePath p = canonical_lattice_path(g);
  CHECK(p.step_word() == "RRRRU");
  CHECK(p.start() == GridPoint{0, 0});
  CHECK(p.end() == GridPoint{4, 1});
  CHECK(g.final_edge() == GridEdge({4, 0}, {4, 1}));
}

TEST_CASE("vertical runs mirror horizontal ones") {
  SnakeGraph g("UU");
  std::vector<GridEdge> horizontals;
  for (int y = 0; y <= 3; ++y) horizontals.push_back(GridEdge({0, y}, {1, y}));
  CHECK(g.canonical_matching() == horizontals);
  CHECK(canonical_lattice_path(g).step_word() == "UUUR");
  CHECK(g.final_edge() == GridEdge({0, 3}, {1, 3}));
}

TEST_CASE("zigzag URUR: labels match the five-tile staircase") {
  SnakeGraph g("URUR");
  CHECK(g.tile_count() == 5);
  CHECK(g.canonical_matching() ==
        std::vector<GridEdge>{
            GridEdge({0, 0}, {1, 0}), GridEdge({0, 1}, {0, 2}), GridEdge({1, 1}, {2, 1}),
            GridEdge({1, 2}, {1, 3}), GridEdge({2, 2}, {3, 2}), GridEdge({2, 3}, {3, 3})});
  VertexLabeling lab = standard_labeling(g);
  std::map<GridPoint, int> expect = {
      {{0, 0}, 1}, {{1, 0}, 1}, {{0, 1}, 2}, {{0, 2}, 2}, {{1, 1}, 3}, {{2, 1}, 3},
      {{1, 2}, 4}, {{1, 3}, 4}, {{2, 2}, 5}, {{3, 2}, 5}, {{2, 3}, 6}, {{3, 3}, 6}};
  CHECK(lab.values() == expect);
  CHECK(canonical_lattice_path(g).step_word() == "URURUR");
  CHECK(g.final_edge() == GridEdge({3, 2}, {3, 3}));
}

TEST_CASE("zigzag UR and RU are mirror images") {
  SnakeGraph ur("UR");
  CHECK(ur.canonical_matching() ==
        std::vector<GridEdge>{GridEdge({0, 0}, {1, 0}), GridEdge({0, 1}, {0, 2}),
                              GridEdge({1, 1}, {2, 1}), GridEdge({1, 2}, {2, 2})});
  SnakeGraph ru("RU");
  CHECK(ru.canonical_matching() ==
        std::vector<GridEdge>{GridEdge({0, 0}, {0, 1}), GridEdge({1, 0}, {2, 0}),
                              GridEdge({1, 1}, {1, 2}), GridEdge({2, 1}, {2, 2})});
}

TEST_CASE("nineteen-tile mixed word: full matching and labels") {
  SnakeGraph g("UUUURRRRURURURURRR");
  CHECK(g.tile_count() == 19);
  std::vector<GridEdge> expect = {
      GridEdge({0, 0}, {1, 0}),  GridEdge({0, 1}, {1, 1}),  GridEdge({0, 2}, {1, 2}),
      GridEdge({0, 3}, {1, 3}),  GridEdge({0, 4}, {0, 5}),  GridEdge({1, 4}, {1, 5}),
      GridEdge({2, 4}, {2, 5}),  GridEdge({3, 4}, {3, 5}),  GridEdge({4, 4}, {5, 4}),
      GridEdge({4, 5}, {4, 6}),  GridEdge({5, 5}, {6, 5}),  GridEdge({5, 6}, {5, 7}),
      GridEdge({6, 6}, {7, 6}),  GridEdge({6, 7}, {6, 8}),  GridEdge({7, 7}, {8, 7}),
      GridEdge({7, 8}, {7, 9}),  GridEdge({8, 8}, {8, 9}),  GridEdge({9, 8}, {9, 9}),
      GridEdge({10, 8}, {10, 9}), GridEdge({11, 8}, {11, 9})};
  CHECK(g.canonical_matching() == expect);
  VertexLabeling lab = standard_labeling(g);
  for (int k = 0; k < 20; ++k) {
    CHECK(lab.at(expect[k].a) == k + 1);
    CHECK(lab.at(expect[k].b) == k + 1);
  }
  CHECK(canonical_lattice_path(g).step_word() == "UUUURRRRURURURURRRRU");
}

TEST_CASE("continuation letter") {
  CHECK(SnakeGraph("").continuation_letter() == 'R');
  CHECK(SnakeGraph("R").continuation_letter() == 'R');
  CHECK(SnakeGraph("U").continuation_letter() == 'U');
  CHECK(SnakeGraph("RR").continuation_letter() == 'R');
  CHECK(SnakeGraph("UR").continuation_letter() == 'U');
  CHECK(SnakeGraph("RU").continuation_letter() == 'R');
  CHECK(SnakeGraph("URU").continuation_letter() == 'R');
  CHECK(SnakeGraph("UURR").continuation_letter() == 'R');
  CHECK(SnakeGraph("RRU").continuation_letter() == 'R');
}

TEST_CASE("structural invariants on every word up to length 10") {
  for (int len = 0; len <= 10; ++len) {
    // Sample deterministically: all words to length 7, a letter-mix beyond.
    std::vector<std::string> words;
    if (len <= 7) {
      for (const std::string& w : all_words_up_to(len))
        if (static_cast<int>(w.size()) == len) words.push_back(w);
    } else {
      for (unsigned seed = 0; seed < 64; ++seed) {
        std::string w;
        unsigned s = seed * 2654435761u + len;
        for (int i = 0; i < len; ++i) {
          w.push_back((s & 1) ? 'U' : 'R');
          s = s * 1103515245u + 12345u;
          s ^= s >> 7;
        }
        words.push_back(w);
      }
    }
    for (const std::string& w : words) {
      SnakeGraph g(w);
      int n = g.tile_count();
      REQUIRE(n == len + 1);
      REQUIRE(static_cast<int>(g.edges().size()) == 3 * n + 1);
      REQUIRE(static_cast<int>(g.vertices().size()) == 2 * n + 2);

      // Canonical matching is a perfect matching.
      std::set<GridPoint> covered;
      for (const GridEdge& e : g.canonical_matching()) {
        REQUIRE(g.has_edge(e));
        REQUIRE_FALSE(covered.count(e.a));
        REQUIRE_FALSE(covered.count(e.b));
        covered.insert(e.a);
        covered.insert(e.b);
      }
      REQUIRE(covered.size() == g.vertices().size());

      // Standard labeling is constant on matching edges with values 1..n+1.
      VertexLabeling lab = standard_labeling(g);
      std::vector<int> mv = lab.matching_values(g);
      for (int k = 0; k <= n; ++k) REQUIRE(mv[k] == k + 1);

      // Canonical path runs corner to corner and avoids the matching away
      // from the last tile.
      EdgePath p = canonical_lattice_path(g);
      REQUIRE(p.start() == GridPoint{0, 0});
      GridPoint tr{g.tiles().back().ll.x + 1, g.tiles().back().ll.y + 1};
      REQUIRE(p.end() == tr);
      std::set<GridEdge> d0(g.canonical_matching().begin(), g.canonical_matching().end());
      for (const GridEdge& e : p.edges()) {
        REQUIRE(g.has_edge(e));
        if (d0.count(e)) REQUIRE(g.tiles().back().contains(e));
      }
    }
  }
}

TEST_CASE("labelings") {
  SnakeGraph g("UR");
  VertexLabeling c2 = VertexLabeling::constant(g, 2);
  for (const GridPoint& v : g.vertices()) CHECK(c2.at(v) == 2);
  CHECK(c2.matching_values(g) == std::vector<int>{2, 2, 2, 2});

  VertexLabeling m = VertexLabeling::from_matching_values(g, {3, 1, 4, 1});
  CHECK(m.matching_values(g) == std::vector<int>{3, 1, 4, 1});
  CHECK(m.at({0, 0}) == 3);
  CHECK(m.at({1, 0}) == 3);
  CHECK_THROWS_AS(VertexLabeling::from_matching_values(g, {1, 2}), ValidationError);
  CHECK_THROWS_AS(VertexLabeling::from_matching_values(g, {1, -2, 3, 4}), ValidationError);

  std::map<GridPoint, int> vals = standard_labeling(g).values();
  CHECK(VertexLabeling::from_values(g, vals) == standard_labeling(g));
  vals[{0, 0}] = 9;  // break the matching-edge constancy
  CHECK_THROWS_AS(VertexLabeling::from_values(g, vals).matching_values(g), ValidationError);
  vals.erase(GridPoint{0, 0});
  CHECK_THROWS_AS(VertexLabeling::from_values(g, vals), ValidationError);
}

TEST_CASE("word shape classifiers and word validation") {
  CHECK(is_straight_word(""));
  CHECK(is_straight_word("R"));
  CHECK(is_straight_word("UUU"));
  CHECK_FALSE(is_straight_word("RU"));
  CHECK(is_zigzag_word(""));
  CHECK(is_zigzag_word("U"));
  CHECK(is_zigzag_word("URUR"));
  CHECK(is_zigzag_word("RURU"));
  CHECK_FALSE(is_zigzag_word("RRU"));
  CHECK_THROWS_AS(SnakeGraph("RXU"), ValidationError);
}

TEST_CASE("factory shapes") {
  CHECK(SnakeGraph::straight(4).word() == "RRR");
  CHECK(SnakeGraph::zigzag(5).word() == "URUR");
  CHECK(SnakeGraph::zigzag(1).word() == "");
  CHECK_THROWS_AS(SnakeGraph::straight(0), ValidationError);
}
