#pragma once

#include "snakedimer/dimer_cover.hpp"
#include "snakedimer/permutation.hpp"
#include "snakedimer/snake_graph.hpp"

namespace snakedimer {

// The labeling the zigzag-family constructions use: the bottom edge of each
// odd tile t carries value t, the left edge of each even tile t carries t,
// and the top (n odd) or right (n even) edge of the last tile carries n+1.
// It agrees with VertexLabeling::standard on every zigzag graph with at
// least three tiles but not on the shorter ones: the single-tile graph gets
// its values on the horizontal edges (bottom 1, top 2) instead of the
// verticals, and the two-tile graph gets bottom 1 / left 2 / right 3
// instead of one value per height.
VertexLabeling zigzag_standard_labeling(const SnakeGraph& graph);

// Down-up alternating sigma in S_n (n >= 3) <-> cover of the horizontal
// straight graph with n-2 tiles under its standard labeling.  The vertical
// edge at column j carries l_{n-1-j}, where l_1 = L_1, l_{2i} =
// L_{2i-1}-L_{2i}-1, l_{2i+1} = L_{2i+1}-L_{2i} for the Lehmer code L; the
// horizontal multiplicities are then forced by the vertex labels.
MixedDimerCover alt_to_cover(const Permutation& sigma);
Permutation cover_to_alt(const SnakeGraph& graph, const MixedDimerCover& cover);

// 132-avoiding sigma in S_n (n >= 2) <-> cover of the zigzag graph with n-1
// tiles.  The final edge of the t-tile prefix carries L_{n-t}, the edge
// shared by tiles t and t+1 carries L_{n-1-t} - L_{n-t}, and the remaining
// multiplicities are forced by the vertex labels.
MixedDimerCover cat_to_cover(const Permutation& sigma);
Permutation cover_to_cat(const SnakeGraph& graph, const MixedDimerCover& cover);

}  // namespace snakedimer
