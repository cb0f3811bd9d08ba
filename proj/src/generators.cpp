#include "negflow/generators.hpp"

#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

namespace negflow {

WeightedDigraph gen_fig3(int k) {
    if (k < 1) throw std::invalid_argument("fig3 needs k >= 1");
    const auto uk = static_cast<std::size_t>(k);
    DigraphBuilder gb;
    for (std::size_t i = 1; i <= uk; ++i) {
        gb.add_node("x" + std::to_string(i));
        gb.add_node("y" + std::to_string(i));
    }
    for (std::size_t i = 1; i <= uk; ++i) {
        gb.add_node("z" + std::to_string(i));
        gb.add_node("z'" + std::to_string(i));
    }
    auto x = [](std::size_t i) { return 2 * (i - 1); };
    auto y = [](std::size_t i) { return 2 * (i - 1) + 1; };
    auto z = [uk](std::size_t i) { return 2 * uk + 2 * (i - 1); };
    auto z_prime = [uk](std::size_t i) { return 2 * uk + 2 * (i - 1) + 1; };

    for (std::size_t i = 1; i <= uk; ++i) {
        gb.add_arc(x(i), y(i), -1);
        gb.add_arc(y(i), x(i % uk + 1), -1);
    }
    const Rational half_path(k);
    for (std::size_t i = 1; i <= uk; ++i) {
        gb.add_arc(x(i), z(i), half_path);
        gb.add_arc(z(i), y(i), half_path);
        gb.add_arc(x(i), z_prime(i), half_path);
        gb.add_arc(z_prime(i), y(i), half_path);
    }
    return gb.build();
}

WeightedDigraph gen_fig1(TwoCycleShape shape) {
    if (shape == TwoCycleShape::EdgeDisjoint) {
        DigraphBuilder gb(6);
        gb.add_arc(0, 1, -1);
        gb.add_arc(1, 2, 0);
        gb.add_arc(2, 0, 0);
        gb.add_arc(3, 4, 1);
        gb.add_arc(4, 5, 0);
        gb.add_arc(5, 3, 0);
        return gb.build();
    }
    DigraphBuilder gb;
    const NodeId u = gb.add_node("u");
    const NodeId v = gb.add_node("v");
    const NodeId w = gb.add_node("w");
    gb.add_arc(u, v, 0);   // shared path
    gb.add_arc(v, u, -1);  // closes the negative cycle
    gb.add_arc(v, w, 1);   // closes the positive cycle
    gb.add_arc(w, u, 0);
    return gb.build();
}

WeightedDigraph gen_random(const RandomGraphParams& params) {
    const std::size_t n = params.nodes;
    if (n == 0) throw std::invalid_argument("random graph needs at least one node");
    if (params.wmax < 0) throw std::invalid_argument("wmax must be nonnegative");
    if (params.arcs > n * (n - 1)) throw std::invalid_argument("too many arcs for a simple digraph");

    std::minstd_rand rng(params.seed);
    auto below = [&rng](std::size_t bound) { return static_cast<std::size_t>(rng() % bound); };

    std::vector<std::pair<NodeId, NodeId>> pairs;
    for (NodeId u = 0; u < n; ++u) {
        for (NodeId v = 0; v < n; ++v) {
            if (u != v) pairs.push_back({u, v});
        }
    }
    for (std::size_t i = 0; i < params.arcs; ++i) {
        const std::size_t j = i + below(pairs.size() - i);
        std::swap(pairs[i], pairs[j]);
    }
    const auto span = static_cast<std::size_t>(2 * params.wmax + 1);
    DigraphBuilder gb(n);
    for (std::size_t i = 0; i < params.arcs; ++i) {
        const auto w = static_cast<std::int64_t>(below(span)) - params.wmax;
        gb.add_arc(pairs[i].first, pairs[i].second, w);
    }
    return gb.build();
}

std::string family_comment_fig3(int k) { return "family: fig3 k=" + std::to_string(k); }

std::string family_comment_fig1(TwoCycleShape shape) {
    return std::string("family: fig1 shape=") + (shape == TwoCycleShape::EdgeDisjoint ? "edge-disjoint" : "three-path");
}

std::string family_comment_random(const RandomGraphParams& p) {
    return "family: random nodes=" + std::to_string(p.nodes) + " arcs=" + std::to_string(p.arcs) +
           " wmax=" + std::to_string(p.wmax) + " seed=" + std::to_string(p.seed);
}

}  // namespace negflow
