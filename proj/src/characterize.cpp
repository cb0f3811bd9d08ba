#include "negflow/characterize.hpp"

#include <algorithm>
#include <iterator>
#include <sstream>
#include <stdexcept>

namespace negflow {

namespace {

std::vector<ArcVector> difference(const std::vector<ArcVector>& a, const std::vector<ArcVector>& b) {
    std::vector<ArcVector> out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

/// Distinct cycles have distinct arc sets, so a collision means a bug.
void finish(std::vector<ArcVector>& points, const char* what) {
    const std::size_t before = points.size();
    normalize(points);
    if (points.size() != before) throw std::logic_error(std::string(what) + ": two cycles gave one vector");
}

}  // namespace

ArcVector vertex_of_cycle(const WeightedDigraph& g, const Cycle& c) {
    if (c.weight.sign() >= 0) throw std::invalid_argument("vertex_of_cycle needs a negative cycle");
    return (Rational(-1) / c.weight) * characteristic_vector(g, c.arcs);
}

ArcVector direction_of_zero_cycle(const WeightedDigraph& g, const Cycle& c) {
    if (!c.weight.is_zero()) throw std::invalid_argument("direction_of_zero_cycle needs a zero cycle");
    return Rational(1, static_cast<std::int64_t>(c.length())) * characteristic_vector(g, c.arcs);
}

ArcVector direction_of_two_cycle(const WeightedDigraph& g, const TwoCycle& tc) {
    return tc.mu * characteristic_vector(g, tc.negative.arcs) +
           tc.mu_prime * characteristic_vector(g, tc.positive.arcs);
}

VertexSet vertices_from_cycles(const WeightedDigraph& g, const std::vector<Cycle>& cycles) {
    VertexSet out;
    for (const Cycle& c : cycles) {
        if (classify(c) == SignClass::Negative) out.points.push_back(vertex_of_cycle(g, c));
    }
    finish(out.points, "vertices");
    out.polyhedron_empty = out.points.empty();
    return out;
}

VertexSet vertices_from_negative_cycles(const WeightedDigraph& g, std::size_t cycle_cap) {
    return vertices_from_cycles(g, enumerate_cycles(g, cycle_cap));
}

VertexSet directions_from_cycles(const WeightedDigraph& g, const std::vector<Cycle>& cycles,
                                 const std::vector<TwoCycle>& two_cycles) {
    VertexSet out;
    for (const Cycle& c : cycles) {
        if (classify(c) == SignClass::Zero) out.points.push_back(direction_of_zero_cycle(g, c));
    }
    for (const TwoCycle& tc : two_cycles) out.points.push_back(direction_of_two_cycle(g, tc));
    finish(out.points, "directions");
    out.polyhedron_empty = out.points.empty();
    return out;
}

VertexSet directions_from_cycles(const WeightedDigraph& g, std::size_t cycle_cap) {
    const auto cycles = enumerate_cycles(g, cycle_cap);
    return directions_from_cycles(g, cycles, two_cycles_among(g, cycles, cycle_cap));
}

CycleCounts count_by_sign(const std::vector<Cycle>& cycles) {
    CycleCounts counts;
    for (const Cycle& c : cycles) {
        switch (classify(c)) {
            case SignClass::Negative: ++counts.negative; break;
            case SignClass::Zero: ++counts.zero; break;
            case SignClass::Positive: ++counts.positive; break;
        }
    }
    return counts;
}

CharacterizationReport verify_characterization(const WeightedDigraph& g, std::size_t cycle_cap,
                                       std::size_t oracle_cap) {
    const auto cycles = enumerate_cycles(g, cycle_cap);
    const auto two_cycles = two_cycles_among(g, cycles, cycle_cap);
    const VertexSet formula_v = vertices_from_cycles(g, cycles);
    const VertexSet formula_d = directions_from_cycles(g, cycles, two_cycles);
    const VertexSet oracle_v = oracle_vertices(build_P(g), oracle_cap);
    const VertexSet oracle_d = oracle_extreme_directions(g, oracle_cap);

    CharacterizationReport r;
    r.vertices_missing_from_formula = difference(oracle_v.points, formula_v.points);
    r.vertices_extra_in_formula = difference(formula_v.points, oracle_v.points);
    r.directions_missing_from_formula = difference(oracle_d.points, formula_d.points);
    r.directions_extra_in_formula = difference(formula_d.points, oracle_d.points);
    r.vertices_match = r.vertices_missing_from_formula.empty() && r.vertices_extra_in_formula.empty();
    r.directions_match = r.directions_missing_from_formula.empty() && r.directions_extra_in_formula.empty();
    r.counts = count_by_sign(cycles);
    r.counts.two_cycles = two_cycles.size();
    r.counts.vertices = oracle_v.points.size();
    r.counts.directions = oracle_d.points.size();
    r.polyhedron_empty = oracle_v.polyhedron_empty;
    return r;
}

std::string CharacterizationReport::to_text() const {
    std::ostringstream out;
    out << "vertices_match: " << (vertices_match ? "true" : "false") << '\n'
        << "directions_match: " << (directions_match ? "true" : "false") << '\n'
        << "polyhedron_empty: " << (polyhedron_empty ? "true" : "false") << '\n'
        << "negative_cycles: " << counts.negative << '\n'
        << "zero_cycles: " << counts.zero << '\n'
        << "positive_cycles: " << counts.positive << '\n'
        << "two_cycles: " << counts.two_cycles << '\n'
        << "vertices: " << counts.vertices << '\n'
        << "directions: " << counts.directions << '\n';
    auto dump = [&](const char* tag, const std::vector<ArcVector>& vs) {
        for (const auto& v : vs) out << tag << '\n' << serialize_arc_vector(v);
    };
    dump("vertex_missing_from_formula", vertices_missing_from_formula);
    dump("vertex_extra_in_formula", vertices_extra_in_formula);
    dump("direction_missing_from_formula", directions_missing_from_formula);
    dump("direction_extra_in_formula", directions_extra_in_formula);
    return out.str();
}

}  // namespace negflow
