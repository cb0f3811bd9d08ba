// Acceptance suite: one PASS/FAIL line per criterion, exit status 0 only if
// every criterion passes. All comparisons are exact rational equality.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "negflow/characterize.hpp"
#include "negflow/generators.hpp"
#include "negflow/reduction.hpp"

using namespace negflow;

namespace {

// Pinned limits.
constexpr double kCorpusSecondsLimit = 300.0;
constexpr std::uint32_t kRandomGraphs = 200;
constexpr std::uint32_t kRandomFormulas = 10;
constexpr std::uint32_t kCirculations = 100;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
    bool pass = true;
    std::string detail;
};

int failures = 0;

void report(int id, const std::string& name, const Outcome& o) {
    std::cout << (o.pass ? "PASS" : "FAIL") << "  criterion " << id << " (" << name << "): " << o.detail << '\n'
              << std::flush;
    if (!o.pass) ++failures;
}

struct NamedGraph {
    std::string name;
    WeightedDigraph graph;
};

std::vector<NamedGraph> graph_corpus() {
    std::vector<NamedGraph> out;
    for (std::uint32_t seed = 1; seed <= kRandomGraphs; ++seed) {
        const RandomGraphParams p{4 + seed % 3, 8 + seed % 5, 3, seed};
        out.push_back({family_comment_random(p), gen_random(p)});
    }
    out.push_back({family_comment_fig1(TwoCycleShape::EdgeDisjoint), gen_fig1(TwoCycleShape::EdgeDisjoint)});
    out.push_back({family_comment_fig1(TwoCycleShape::ThreePath), gen_fig1(TwoCycleShape::ThreePath)});
    for (int k = 1; k <= 3; ++k) out.push_back({family_comment_fig3(k), gen_fig3(k)});
    return out;
}

/// Every set of 1-3 distinct clauses (size 2-3, no repeated variable) over
/// n in {2, 3} variables in which every variable occurs, plus seeded random
/// 4-variable formulas.
std::vector<CnfFormula> cnf_corpus() {
    std::vector<CnfFormula> out;
    for (int n = 2; n <= 3; ++n) {
        std::vector<std::vector<int>> clauses;
        for (int size = 2; size <= std::min(3, n); ++size) {
            for (int vars = 0; vars < (1 << n); ++vars) {
                if (__builtin_popcount(vars) != size) continue;
                for (int signs = 0; signs < (1 << size); ++signs) {
                    std::vector<int> c;
                    int bit = 0;
                    for (int v = 1; v <= n; ++v) {
                        if (!(vars >> (v - 1) & 1)) continue;
                        c.push_back((signs >> bit++ & 1) ? -v : v);
                    }
                    clauses.push_back(c);
                }
            }
        }
        const std::size_t c = clauses.size();
        auto add = [&](std::vector<std::size_t> pick) {
            CnfFormula f{static_cast<std::size_t>(n), {}};
            int seen = 0;
            for (auto i : pick) {
                f.clauses.push_back(clauses[i]);
                for (int lit : clauses[i]) seen |= 1 << (std::abs(lit) - 1);
            }
            if (seen == (1 << n) - 1) out.push_back(f);
        };
        for (std::size_t i = 0; i < c; ++i) {
            add({i});
            for (std::size_t j = i + 1; j < c; ++j) {
                add({i, j});
                for (std::size_t k = j + 1; k < c; ++k) add({i, j, k});
            }
        }
    }
    for (std::uint32_t seed = 1; seed <= kRandomFormulas; ++seed) {
        std::minstd_rand rng(seed);
        CnfFormula f{4, {}};
        const std::size_t m = 3 + rng() % 2;
        for (std::size_t j = 0; j < m; ++j) {
            std::vector<int> vars{1, 2, 3, 4};
            const std::size_t size = 2 + rng() % 2;
            std::vector<int> clause;
            for (std::size_t t = 0; t < size; ++t) {
                const std::size_t pick = t + rng() % (vars.size() - t);
                std::swap(vars[t], vars[pick]);
                clause.push_back(rng() % 2 ? -vars[t] : vars[t]);
            }
            f.clauses.push_back(clause);
        }
        out.push_back(f);
    }
    return out;
}

/// Unsatisfiable formulas added so the equivalence is exercised in both
/// directions; no CNF with at most three clauses of size >= 2 is unsatisfiable.
std::vector<CnfFormula> unsat_supplement() {
    return {
        {2, {{1, 2}, {-1, 2}, {1, -2}, {-1, -2}}},
        {3, {{1, 2}, {1, -2}, {-1, 3}, {-1, -3}}},
        {3, {{1, 2}, {-1, 3}, {-2, 3}, {-3, 1}, {-3, -1}}},
    };
}

/// Identity checks shared by every 2-cycle.
bool coefficient_identities(const TwoCycle& tc) {
    const Rational l1(static_cast<std::int64_t>(tc.negative.length()));
    const Rational l2(static_cast<std::int64_t>(tc.positive.length()));
    return tc.mu > Rational(0) && tc.mu_prime > Rational(0) && tc.mu * l1 + tc.mu_prime * l2 == Rational(1) &&
           tc.mu * tc.negative.weight + tc.mu_prime * tc.positive.weight == Rational(0);
}

struct TwoCycleTally {
    std::size_t checked = 0;
    std::size_t identity_failures = 0;
    std::size_t not_vertex = 0;
    std::size_t by_full_oracle = 0;
    std::size_t by_rank_test = 0;
};

/// `oracle_set` holds the full oracle vertex set of P' when it was computed.
void check_two_cycles(const WeightedDigraph& g, const std::vector<TwoCycle>& twos,
                      const std::vector<ArcVector>* oracle_set, TwoCycleTally& t) {
    const HRep pp = build_P_prime(g);
    for (const auto& tc : twos) {
        ++t.checked;
        if (!coefficient_identities(tc)) ++t.identity_failures;
        const ArcVector d = direction_of_two_cycle(g, tc);
        bool vertex;
        if (oracle_set) {
            vertex = std::binary_search(oracle_set->begin(), oracle_set->end(), d);
            ++t.by_full_oracle;
        } else {
            vertex = is_feasible_point(pp, d).feasible && is_vertex(pp, d);
            ++t.by_rank_test;
        }
        if (!vertex) ++t.not_vertex;
    }
}

std::string fmt_seconds(double s) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.1f s", s);
    return buf;
}

}  // namespace

int main() {
    TwoCycleTally tally;

    // 1. Cycle formulas against the brute-force oracle.
    const auto graphs = graph_corpus();
    {
        const auto t0 = Clock::now();
        std::size_t mismatches = 0;
        std::string first_bad;
        for (const auto& ng : graphs) {
            const auto cycles = enumerate_cycles(ng.graph);
            const auto twos = two_cycles_among(ng.graph, cycles);
            const auto fv = vertices_from_cycles(ng.graph, cycles);
            const auto fd = directions_from_cycles(ng.graph, cycles, twos);
            const auto ov = oracle_vertices(build_P(ng.graph));
            const auto od = oracle_extreme_directions(ng.graph);
            if (fv.points != ov.points || fd.points != od.points) {
                if (mismatches++ == 0) first_bad = ng.name;
            }
            check_two_cycles(ng.graph, twos, &od.points, tally);
        }
        const double secs = seconds_since(t0);
        Outcome o;
        o.pass = mismatches == 0 && secs < kCorpusSecondsLimit;
        o.detail = std::to_string(graphs.size()) + " graphs, " + std::to_string(mismatches) + " mismatches, " +
                   fmt_seconds(secs) + " (limit " + fmt_seconds(kCorpusSecondsLimit) + ")";
        if (mismatches) o.detail += ", first: " + first_bad;
        report(1, "vertex and direction sets equal the oracle", o);
    }

    // Reduction corpus, shared by 2, 3, 4 and 7.
    const auto t_cnf = Clock::now();
    auto formulas = cnf_corpus();
    const std::size_t pinned_formulas = formulas.size();
    for (auto& f : unsat_supplement()) formulas.push_back(f);
    struct CnfResult {
        bool arcs_identity = true;
        bool degenerate = false;
        Ve01Decision d;
        bool x_subset = true;
        bool x_size_ok = true;
        bool prop1_applicable = false;
        bool prop1_ok = true;
    };
    std::vector<CnfResult> results;
    results.reserve(formulas.size());
    for (const auto& f : formulas) {
        const auto art = build_reduction(f);
        CnfResult r;
        r.degenerate = !art.non_degenerate();
        r.arcs_identity = art.graph.arc_count() - art.standin_arcs.size() == art.formula_arc_count() &&
                          (r.degenerate || art.graph.arc_count() == art.formula_arc_count());

        const auto cycles = enumerate_cycles(art.graph);
        const auto vertices = vertices_from_cycles(art.graph, cycles);
        const auto x = trivial_vertex_family(art);
        r.x_size_ok = x.size() == f.occurrence_count();
        for (const auto& v : x) r.x_subset = r.x_subset && vertices.contains(v);
        r.d = decide_ve01(art);

        r.prop1_applicable = !f.has_unit_clause();
        if (r.prop1_applicable) {
            const auto counts = count_by_sign(cycles);
            const auto directions = directions_from_cycles(art.graph, cycles, two_cycles_among(art.graph, cycles));
            r.prop1_ok = directions.points.size() >= std::max(counts.positive, counts.negative) + counts.zero;
        }
        results.push_back(std::move(r));
    }
    const double cnf_secs = seconds_since(t_cnf);

    // 2. Reduction counts.
    {
        CnfFormula fig2{3, {{1, 2, -3}, {1, -2, 3}, {-1, 2, -3}}};
        const auto art = build_reduction(fig2);
        std::size_t identity_failures = 0, degenerate = 0;
        for (const auto& r : results) {
            identity_failures += !r.arcs_identity;
            degenerate += r.degenerate;
        }
        Outcome o;
        const bool arcs_ok = art.graph.arc_count() == 55;
        const bool nodes_ok = art.graph.node_count() == 46;
        o.pass = arcs_ok && nodes_ok && identity_failures == 0;
        o.detail = "three-clause formula: " + std::to_string(art.graph.arc_count()) + " arcs (expected 55), " +
                   std::to_string(art.graph.node_count()) + " nodes (expected 46); arc identity fails on " +
                   std::to_string(identity_failures) + " of " + std::to_string(results.size()) + " formulas (" +
                   std::to_string(degenerate) + " degenerate, counted without stand-in arcs)";
        report(2, "reduction arc and node counts", o);
    }

    // 3. Weight -1 negative cycles, 0/1 vertices, trivial family inside the vertex set.
    {
        std::size_t bad = 0;
        for (const auto& r : results) {
            bad += !(r.d.negative_weights_all_minus_one && r.d.all_vertices_01 && r.x_subset && r.x_size_ok);
        }
        Outcome o;
        o.pass = bad == 0;
        o.detail = std::to_string(results.size()) + " formulas, " + std::to_string(bad) + " violations, " +
                   fmt_seconds(cnf_secs) + " for the whole reduction corpus";
        report(3, "0/1 vertices on the reduction corpus", o);
    }

    // 4. Soundness against brute-force SAT.
    {
        std::size_t bad = 0, sat = 0, extras = 0;
        for (const auto& r : results) {
            bool extras_ok = r.d.extras_all_long;
            for (const auto& c : r.d.extra_cycles) extras_ok = extras_ok && c.weight == Rational(-1);
            bad += !(r.d.consistent() && extras_ok);
            sat += r.d.sat.satisfiable;
            extras += r.d.extra_cycles.size();
        }
        Outcome o;
        o.pass = bad == 0;
        o.detail = std::to_string(results.size()) + " formulas (" + std::to_string(pinned_formulas) +
                   " pinned + " + std::to_string(results.size() - pinned_formulas) + " unsatisfiable supplement; " +
                   std::to_string(sat) + " satisfiable), " +
                   std::to_string(extras) + " extra vertices all long of weight -1; " + std::to_string(bad) +
                   " violations";
        report(4, "trivial family is the vertex set iff unsatisfiable", o);
    }

    // 5. fig3 counts.
    {
        Outcome o;
        std::ostringstream detail;
        for (int k = 1; k <= 4; ++k) {
            const auto g = gen_fig3(k);
            const auto cycles = enumerate_cycles(g);
            const auto counts = count_by_sign(cycles);
            const auto twos = two_cycles_among(g, cycles);
            std::size_t three_pow = 1;
            for (int i = 0; i < k; ++i) three_pow *= 3;
            const bool two_ok = twos.size() == static_cast<std::size_t>(2 * k);
            const bool exceeds = counts.positive > (std::size_t{1} << k);
            const bool exact = counts.positive == three_pow - 1;
            const bool rest = counts.negative == 1 && counts.zero == 0;
            o.pass = o.pass && two_ok && exceeds && exact && rest;
            detail << (k > 1 ? "; " : "") << "k=" << k << ": " << twos.size() << " two-cycles, " << counts.positive
                   << " positive (2^k=" << (1u << k) << (exceeds ? ", exceeded" : ", NOT exceeded") << "), "
                   << counts.negative << " negative, " << counts.zero << " zero";
            if (k <= 3) {
                const auto od = oracle_extreme_directions(g);
                check_two_cycles(g, twos, &od.points, tally);
            } else {
                check_two_cycles(g, twos, nullptr, tally);
            }
        }
        o.detail = detail.str();
        report(5, "fig3 cycle counts", o);
    }

    // 6. Coefficient identities for every 2-cycle met in 1-5.
    {
        Outcome o;
        o.pass = tally.identity_failures == 0 && tally.not_vertex == 0 && tally.checked > 0;
        o.detail = std::to_string(tally.checked) + " two-cycles (" + std::to_string(tally.by_full_oracle) +
                   " against the full oracle, " + std::to_string(tally.by_rank_test) + " by the rank test), " +
                   std::to_string(tally.identity_failures) + " identity failures, " +
                   std::to_string(tally.not_vertex) + " not vertices";
        report(6, "2-cycle coefficient identities", o);
    }

    // 7. Direction count lower bound.
    {
        std::size_t checked = 0, bad = 0, bad_degenerate = 0;
        for (const auto& r : results) {
            if (!r.prop1_applicable) continue;
            ++checked;
            bad += !r.prop1_ok;
            bad_degenerate += !r.prop1_ok && r.degenerate;
        }
        Outcome o;
        o.pass = bad == 0 && checked > 0;
        o.detail = std::to_string(checked) + " formulas with all clauses of size >= 2, " + std::to_string(bad) +
                   " violations (" + std::to_string(bad_degenerate) +
                   " on formulas with a literal of one polarity only, which have stand-in chains)";
        report(7, "directions >= max(positive, negative) + zero cycles", o);
    }

    // 8. Circulation decomposition.
    {
        std::minstd_rand rng(2024);
        std::size_t done = 0, bad = 0;
        for (std::size_t i = 0; done < kCirculations; ++i) {
            const auto& g = graphs[i % graphs.size()].graph;
            const auto cycles = enumerate_cycles(g);
            if (cycles.empty()) continue;
            const std::size_t terms = 1 + rng() % 3;
            ArcVector y(g.arc_count());
            for (std::size_t t = 0; t < terms; ++t) {
                const Cycle& c = cycles[rng() % cycles.size()];
                const Rational lambda(static_cast<std::int64_t>(1 + rng() % 7), static_cast<std::int64_t>(1 + rng() % 5));
                y += lambda * characteristic_vector(g, c.arcs);
            }
            const auto d = decompose_circulation(g, y);
            bool ok = d.reconstruct(g) == y && d.terms.size() <= y.support().size();
            for (const auto& term : d.terms) ok = ok && term.second > Rational(0);
            bad += !ok;
            ++done;
        }
        Outcome o;
        o.pass = bad == 0;
        o.detail = std::to_string(done) + " circulations, " + std::to_string(bad) + " failures";
        report(8, "cycle decomposition reconstructs the circulation", o);
    }

    std::cout << (failures == 0 ? "ALL PASS" : std::to_string(failures) + " criteria FAILED") << '\n';
    return failures == 0 ? 0 : 1;
}
