#include "negflow/polyhedra.hpp"

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <stdexcept>

#include "negflow/errors.hpp"

namespace negflow {

namespace {

std::vector<Equality> flow_rows(const WeightedDigraph& g) {
    std::vector<Equality> rows;
    for (NodeId v = 0; v < g.node_count(); ++v) {
        Equality eq{"flow v" + std::to_string(v + 1), std::vector<Rational>(g.arc_count()), Rational{}};
        for (ArcId id : g.out_arcs(v)) eq.coefficients[id] += 1;
        for (ArcId id : g.in_arcs(v)) eq.coefficients[id] -= 1;
        rows.push_back(std::move(eq));
    }
    return rows;
}

Equality weight_row(const WeightedDigraph& g, Rational rhs) {
    Equality eq{"weight", {}, std::move(rhs)};
    for (const Arc& a : g.arcs()) eq.coefficients.push_back(a.weight);
    return eq;
}

}  // namespace

linalg::Matrix HRep::matrix() const {
    linalg::Matrix m(0, dimension);
    for (const auto& eq : equalities) m.append_row(eq.coefficients);
    return m;
}

std::vector<Rational> HRep::rhs() const {
    std::vector<Rational> b;
    for (const auto& eq : equalities) b.push_back(eq.rhs);
    return b;
}

HRep build_P(const WeightedDigraph& g) {
    HRep h{g.arc_count(), flow_rows(g)};
    h.equalities.push_back(weight_row(g, -1));
    return h;
}

HRep build_P_prime(const WeightedDigraph& g) {
    HRep h{g.arc_count(), flow_rows(g)};
    h.equalities.push_back(weight_row(g, 0));
    h.equalities.push_back(Equality{"normalize", std::vector<Rational>(g.arc_count(), Rational(1)), 1});
    return h;
}

std::string export_hrep(const HRep& h) {
    std::ostringstream out;
    for (const auto& eq : h.equalities) {
        out << "eq " << eq.rhs << " :";
        for (const auto& c : eq.coefficients) out << ' ' << c;
        out << '\n';
    }
    out << "nonneg all\n";
    return out.str();
}

FeasibilityReport is_feasible_point(const HRep& h, const ArcVector& y) {
    if (y.dimension() != h.dimension) throw DimensionMismatch(h.dimension, y.dimension());
    FeasibilityReport report;
    for (const auto& eq : h.equalities) {
        Rational lhs;
        for (std::size_t i = 0; i < h.dimension; ++i) lhs += eq.coefficients[i] * y[i];
        if (lhs != eq.rhs) {
            report.feasible = false;
            report.violations.push_back(eq.name + ": " + lhs.str() + " != " + eq.rhs.str());
        }
    }
    for (std::size_t i = 0; i < h.dimension; ++i) {
        if (y[i].sign() < 0) {
            report.feasible = false;
            report.violations.push_back("nonneg e" + std::to_string(i) + ": " + y[i].str() + " < 0");
        }
    }
    return report;
}

std::size_t tight_rank(const HRep& h, const ArcVector& y) {
    if (y.dimension() != h.dimension) throw DimensionMismatch(h.dimension, y.dimension());
    linalg::Matrix m = h.matrix();
    for (std::size_t i = 0; i < h.dimension; ++i) {
        if (!y[i].is_zero()) continue;
        std::vector<Rational> row(h.dimension);
        row[i] = 1;
        m.append_row(row);
    }
    if (m.rows() == 0) return 0;
    return linalg::rank(m);
}

bool is_vertex(const HRep& h, const ArcVector& y) {
    return is_feasible_point(h, y).feasible && tight_rank(h, y) == h.dimension;
}

bool VertexSet::contains(const ArcVector& v) const {
    return std::binary_search(points.begin(), points.end(), v);
}

void normalize(std::vector<ArcVector>& points) {
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
}

VertexSet oracle_vertices(const HRep& h, std::size_t cap) {
    const std::size_t d = h.dimension;
    if (d >= 63 || (std::uint64_t{1} << d) > cap) throw CapExceeded("max-oracle", cap);

    const linalg::Matrix a = h.matrix();
    const std::vector<Rational> b = h.rhs();
    const linalg::IntegerSystem system(a, b);

    // A row whose restriction to S is single-signed cannot be met by a point
    // that is strictly positive on S unless the rhs agrees; this prunes most
    // supports before any elimination.
    const std::size_t m = system.rows();
    std::vector<std::uint64_t> pos(m, 0), neg(m, 0);
    std::vector<int> rhs_sign(m);
    for (std::size_t r = 0; r < m; ++r) {
        for (std::size_t c = 0; c < d; ++c) {
            const int s = system.sign(r, c);
            if (s > 0) pos[r] |= std::uint64_t{1} << c;
            if (s < 0) neg[r] |= std::uint64_t{1} << c;
        }
        rhs_sign[r] = system.rhs_sign(r);
    }

    VertexSet result;
    std::vector<std::size_t> columns;
    const std::uint64_t end = std::uint64_t{1} << d;
    for (std::uint64_t support = 0; support < end; ++support) {
        bool possible = true;
        for (std::size_t r = 0; r < m && possible; ++r) {
            const bool p = (support & pos[r]) != 0;
            const bool n = (support & neg[r]) != 0;
            if (rhs_sign[r] == 0) possible = p == n;
            else if (rhs_sign[r] > 0) possible = p;
            else possible = n;
        }
        if (!possible) continue;

        columns.clear();
        for (std::size_t c = 0; c < d; ++c) {
            if (support & (std::uint64_t{1} << c)) columns.push_back(c);
        }
        const auto sol = system.solve_columns(columns);
        if (sol.kind != linalg::SolutionKind::Unique) continue;
        if (!std::all_of(sol.x.begin(), sol.x.end(), [](const Rational& q) { return q.sign() > 0; })) {
            continue;
        }
        ArcVector v(d);
        for (std::size_t j = 0; j < columns.size(); ++j) v[columns[j]] = sol.x[j];
        result.points.push_back(std::move(v));
    }
    normalize(result.points);

    result.polyhedron_empty = !linalg::find_nonnegative_solution(a, b).has_value();
    // Nonnegativity on every coordinate makes the polyhedron pointed, so it is
    // nonempty exactly when it has a vertex.
    if (result.polyhedron_empty != result.points.empty()) {
        throw std::logic_error("oracle: feasibility solve disagrees with vertex search");
    }
    return result;
}

VertexSet oracle_extreme_directions(const WeightedDigraph& g, std::size_t cap) {
    return oracle_vertices(build_P_prime(g), cap);
}

}  // namespace negflow
