#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "negflow/graph.hpp"
#include "negflow/linalg.hpp"

namespace negflow {

/// Default bound on the number of candidate supports the oracle may try.
inline constexpr std::size_t kDefaultMaxOracle = std::size_t{1} << 20;

struct Equality {
    std::string name;  // "flow v<k>", "weight", "normalize"
    std::vector<Rational> coefficients;
    Rational rhs;
};

/// { y : every equality holds, y >= 0 }. Nonnegativity is implicit on
/// every coordinate.
struct HRep {
    std::size_t dimension = 0;
    std::vector<Equality> equalities;

    linalg::Matrix matrix() const;
    std::vector<Rational> rhs() const;
};

/// Flow conservation at every node plus sum(w_e y_e) = -1.
HRep build_P(const WeightedDigraph& g);

/// Flow conservation, sum(w_e y_e) = 0 and sum(y_e) = 1. Its vertices are
/// the normalized extreme directions of build_P(g).
HRep build_P_prime(const WeightedDigraph& g);

/// `eq <rhs> : <coef> ...` per equality, then `nonneg all`.
std::string export_hrep(const HRep& h);

struct FeasibilityReport {
    bool feasible = true;
    std::vector<std::string> violations;
};

/// Exact membership test. Throws DimensionMismatch.
FeasibilityReport is_feasible_point(const HRep& h, const ArcVector& y);

/// Rank of the constraints tight at y: all equalities plus y_e >= 0 for the
/// coordinates where y_e = 0.
std::size_t tight_rank(const HRep& h, const ArcVector& y);

/// Feasible with tight-constraint rank equal to the dimension.
bool is_vertex(const HRep& h, const ArcVector& y);

struct VertexSet {
    std::vector<ArcVector> points;  // sorted, distinct
    /// Set by an independent phase-one simplex solve, not inferred from
    /// `points`.
    bool polyhedron_empty = false;

    bool contains(const ArcVector& v) const;
};

/// Brute-force vertex enumeration straight from the definition: for each
/// candidate support S, solve the equalities with y_e = 0 off S and keep
/// unique solutions that are strictly positive on S. Throws
/// CapExceeded("max-oracle") when 2^dimension exceeds `cap`.
VertexSet oracle_vertices(const HRep& h, std::size_t cap = kDefaultMaxOracle);

/// oracle_vertices(build_P_prime(g)).
VertexSet oracle_extreme_directions(const WeightedDigraph& g, std::size_t cap = kDefaultMaxOracle);

/// Sorts and removes duplicates.
void normalize(std::vector<ArcVector>& points);

}  // namespace negflow
