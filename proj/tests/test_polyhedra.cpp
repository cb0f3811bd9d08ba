#include <doctest.h>

#include "brute_force.hpp"
#include "negflow/characterize.hpp"
#include "negflow/errors.hpp"
#include "negflow/generators.hpp"
#include "negflow/polyhedra.hpp"

using namespace negflow;

namespace {

const char* kTriangle = "p 3 3\na 1 2 -1\na 2 3 -1\na 3 1 -1\n";

/// Support contains two distinct cycles as arc subsets.
std::size_t cycles_inside(const WeightedDigraph& g, const std::vector<ArcId>& support,
                          const std::vector<std::vector<ArcId>>& all_cycles, int sign_filter) {
    std::size_t n = 0;
    for (const auto& c : all_cycles) {
        if (!std::includes(support.begin(), support.end(), c.begin(), c.end())) continue;
        const int s = testing::set_weight(g, c).sign();
        if (sign_filter == 2 || s == sign_filter) ++n;
    }
    return n;
}

}  // namespace

TEST_CASE("build_P: rows and the flow-row identity") {
    const auto tri = parse_graph(kTriangle);
    const HRep h = build_P(tri);
    CHECK(h.dimension == 3);
    REQUIRE(h.equalities.size() == 4);
    CHECK(h.equalities.back().rhs == Rational(-1));
    // Flow rows sum to zero.
    std::vector<Rational> sum(3);
    for (std::size_t r = 0; r < 3; ++r) {
        for (std::size_t c = 0; c < 3; ++c) sum[c] += h.equalities[r].coefficients[c];
    }
    CHECK(sum == std::vector<Rational>(3));
    CHECK(export_hrep(h) ==
          "eq 0 : 1 0 -1\neq 0 : -1 1 0\neq 0 : 0 -1 1\neq -1 : -1 -1 -1\nnonneg all\n");
}

TEST_CASE("build_P: digon has the unique point (1,1)") {
    const auto digon = parse_graph("p 2 2\na 1 2 -1/2\na 2 1 -1/2\n");
    CHECK(build_P(digon).equalities.size() == 3);
    const auto v = oracle_vertices(build_P(digon));
    CHECK(v.points == std::vector<ArcVector>{ArcVector({1, 1})});
    CHECK(is_feasible_point(build_P(digon), ArcVector({1, 1})).feasible);
    CHECK_FALSE(is_feasible_point(build_P(digon), ArcVector({2, 2})).feasible);
}

TEST_CASE("build_P: empty graph is infeasible") {
    const WeightedDigraph empty(1, {});
    const auto v = oracle_vertices(build_P(empty));
    CHECK(v.points.empty());
    CHECK(v.polyhedron_empty);
}

TEST_CASE("build_P_prime") {
    const auto zero = parse_graph("p 3 3\na 1 2 1\na 2 3 -1\na 3 1 0\n");
    const HRep hp = build_P_prime(zero);
    CHECK(hp.equalities.size() == 5);
    const auto v = oracle_vertices(hp);
    const Rational t(1, 3);
    CHECK(v.points == std::vector<ArcVector>{ArcVector({t, t, t})});

    const auto negative_only = parse_graph(kTriangle);
    const auto none = oracle_vertices(build_P_prime(negative_only));
    CHECK(none.points.empty());
    CHECK(none.polyhedron_empty);

    const auto d = oracle_extreme_directions(gen_fig1(TwoCycleShape::EdgeDisjoint));
    const Rational s(1, 6);
    CHECK(d.points == std::vector<ArcVector>{ArcVector({s, s, s, s, s, s})});
}

TEST_CASE("oracle_vertices: examples") {
    const Rational t(1, 3);
    CHECK(oracle_vertices(build_P(parse_graph(kTriangle))).points == std::vector<ArcVector>{ArcVector({t, t, t})});

    // Triangles 1-2-3 (weight -2) and 1-4-5 (weight -1) sharing node 1.
    const auto shared = parse_graph("p 5 6\na 1 2 -1\na 2 3 -1\na 3 1 0\na 1 4 -1\na 4 5 0\na 5 1 0\n");
    const Rational h(1, 2);
    const std::vector<ArcVector> expected{ArcVector({0, 0, 0, 1, 1, 1}), ArcVector({h, h, h, 0, 0, 0})};
    CHECK(oracle_vertices(build_P(shared)).points == expected);

    const auto positive = parse_graph("p 3 4\na 1 2 1\na 2 3 2\na 3 1 0\na 2 1 1\n");
    const auto v = oracle_vertices(build_P(positive));
    CHECK(v.points.empty());
    CHECK(v.polyhedron_empty);
}

TEST_CASE("oracle_extreme_directions: examples") {
    CHECK(oracle_extreme_directions(parse_graph(kTriangle)).points.empty());
    CHECK(oracle_extreme_directions(gen_fig3(1)).points.size() == 2);
    CHECK(oracle_extreme_directions(gen_fig3(1)).points.size() == enumerate_two_cycles(gen_fig3(1)).size());
}

TEST_CASE("oracle cap") {
    CHECK_THROWS_AS(oracle_vertices(build_P(gen_fig3(3)), 1000), CapExceeded);
    CHECK_NOTHROW(oracle_vertices(build_P(gen_fig3(2)), 1 << 12));
}

TEST_CASE("is_feasible_point reports violated constraints") {
    const HRep h = build_P(parse_graph(kTriangle));
    const Rational t(1, 3);
    CHECK(is_feasible_point(h, ArcVector({t, t, t})).feasible);
    const auto r = is_feasible_point(h, ArcVector({1, 0, 0}));
    CHECK_FALSE(r.feasible);
    std::size_t flow = 0;
    for (const auto& v : r.violations) flow += v.rfind("flow", 0) == 0;
    CHECK(flow == 2);
    CHECK_THROWS_AS(is_feasible_point(h, ArcVector(2)), DimensionMismatch);
}

TEST_CASE("property: oracle vertices have full tight rank and obey the support properties") {
    for (std::uint32_t seed = 1; seed <= 60; ++seed) {
        const auto g = gen_random({4 + seed % 3, 8 + seed % 5, 3, seed});
        const auto all_cycles = testing::brute_force_cycle_sets(g);
        const HRep p = build_P(g);
        const auto comps = strongly_connected_components(g);
        std::vector<std::size_t> comp_of(g.node_count());
        for (std::size_t c = 0; c < comps.size(); ++c) {
            for (NodeId v : comps[c]) comp_of[v] = c;
        }
        for (const auto& y : oracle_vertices(p).points) {
            CHECK(tight_rank(p, y) == p.dimension);
            CHECK(is_vertex(p, y));
            const auto support = y.support();
            // Support arcs never leave an SCC of the support graph.
            const auto sub = subgraph(g, support);
            const auto sub_comps = strongly_connected_components(sub.graph);
            std::vector<std::size_t> sub_comp(sub.graph.node_count());
            for (std::size_t c = 0; c < sub_comps.size(); ++c) {
                for (NodeId v : sub_comps[c]) sub_comp[v] = c;
            }
            for (const Arc& a : sub.graph.arcs()) CHECK(sub_comp[a.tail] == sub_comp[a.head]);
            CHECK(cycles_inside(g, support, all_cycles, 0) == 0);  // no zero cycle
            CHECK(cycles_inside(g, support, all_cycles, 2) == 1);  // exactly one cycle
        }
        const HRep pp = build_P_prime(g);
        for (const auto& y : oracle_vertices(pp).points) {
            CHECK(tight_rank(pp, y) == pp.dimension);
            const auto support = y.support();
            const auto neg = cycles_inside(g, support, all_cycles, -1);
            const auto pos = cycles_inside(g, support, all_cycles, 1);
            const auto zero = cycles_inside(g, support, all_cycles, 0);
            CHECK(zero <= 1);
            if (neg > 0 && pos > 0) CHECK(neg + pos + zero == 2);
        }
    }
}

TEST_CASE("property: oracle output is invariant under arc reordering") {
    for (std::uint32_t seed = 1; seed <= 25; ++seed) {
        const auto g = gen_random({5, 9, 3, seed});
        const std::size_t m = g.arc_count();
        std::vector<Arc> rotated;
        for (std::size_t i = 0; i < m; ++i) {
            const Arc& a = g.arc((i + 3) % m);
            rotated.push_back(Arc{i, a.tail, a.head, a.weight});
        }
        const WeightedDigraph h(g.node_count(), rotated);
        auto permute = [&](const std::vector<ArcVector>& pts) {
            std::vector<ArcVector> out;
            for (const auto& p : pts) {
                ArcVector q(m);
                for (std::size_t i = 0; i < m; ++i) q[i] = p[(i + 3) % m];
                out.push_back(q);
            }
            normalize(out);
            return out;
        };
        CHECK(permute(oracle_vertices(build_P(g)).points) == oracle_vertices(build_P(h)).points);
        CHECK(permute(oracle_extreme_directions(g).points) == oracle_extreme_directions(h).points);
    }
}
