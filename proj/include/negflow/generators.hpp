#pragma once

#include <cstdint>
#include <string>

#include "negflow/cycles.hpp"
#include "negflow/graph.hpp"

namespace negflow {

/// Base cycle x1 y1 x2 y2 ... xk yk of 2k arcs of weight -1, plus two
/// parallel two-arc paths x_i -> z_i -> y_i and x_i -> z'_i -> y_i of
/// weight k per arc. 4k nodes, 6k arcs. Throws std::invalid_argument for k < 1.
WeightedDigraph gen_fig3(int k);

/// Smallest instance of each 2-cycle shape.
///   EdgeDisjoint: triangles 1-2-3 (weights -1,0,0) and 4-5-6 (1,0,0).
///   ThreePath:    u->v 0, v->u -1, v->w 1, w->u 0 with u,v,w = 1,2,3.
WeightedDigraph gen_fig1(TwoCycleShape shape);

struct RandomGraphParams {
    std::size_t nodes = 4;
    std::size_t arcs = 8;
    std::int64_t wmax = 3;  // weights uniform in [-wmax, wmax]
    std::uint32_t seed = 1;
};

/// Reproducible random simple digraph (no loops, no parallel arcs).
///
/// The stream is std::minstd_rand (x <- 48271 x mod 2^31-1) seeded with
/// `seed`; a value in [0, n) is drawn as `next() % n`. Arcs are the first
/// `arcs` entries of a Fisher-Yates shuffle of all ordered pairs (u,v),
/// u != v, listed row-major; then one weight is drawn per arc in arc order.
/// Throws std::invalid_argument when arcs > nodes * (nodes - 1).
WeightedDigraph gen_random(const RandomGraphParams& params);

/// The `c family:` comment recorded in generated graph files.
std::string family_comment_fig3(int k);
std::string family_comment_fig1(TwoCycleShape shape);
std::string family_comment_random(const RandomGraphParams& params);

}  // namespace negflow
