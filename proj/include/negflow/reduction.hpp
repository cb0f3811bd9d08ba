#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "negflow/characterize.hpp"
#include "negflow/cycles.hpp"
#include "negflow/graph.hpp"

namespace negflow {

class EmptyClause : public std::invalid_argument {
public:
    explicit EmptyClause(std::size_t clause)
        : std::invalid_argument("clause " + std::to_string(clause + 1) + " is empty"), clause_(clause) {}
    std::size_t clause() const { return clause_; }

private:
    std::size_t clause_;
};

class TooManyVariables : public std::invalid_argument {
public:
    TooManyVariables(std::size_t n, std::size_t limit)
        : std::invalid_argument(std::to_string(n) + " variables exceed the limit of " + std::to_string(limit)) {}
};

/// Literals are signed, 1-based variable indices: 3 is x3, -3 is not-x3.
struct CnfFormula {
    std::size_t variable_count = 0;
    std::vector<std::vector<int>> clauses;

    std::size_t occurrence_count() const;
    bool has_unit_clause() const;
    /// Throws EmptyClause or std::invalid_argument for an out-of-range literal.
    void validate() const;
};

/// Standard DIMACS CNF. Throws ParseError, also for an empty clause.
CnfFormula parse_dimacs_cnf(std::string_view text);
std::string to_dimacs(const CnfFormula& f);

/// One literal occurrence and the six arcs of its two gadget paths.
///   (p,a) 1/2   (a,b) -1/2   (b,q) 0       positive-side path through a, b
///   (r,b) 0     (b,a) -1/2   (a,s) 1/2     clause-side path through b, a
struct Occurrence {
    std::size_t clause;
    std::size_t position;
    int literal;
    NodeId a;
    NodeId b;
    ArcId p_a, a_b, b_q;
    ArcId r_b, b_a, a_s;
};

struct ReductionArtifact {
    CnfFormula formula;
    WeightedDigraph graph;
    std::vector<Occurrence> occurrences;
    /// v_0 .. v_n, then v'_1 .. v'_m.
    std::vector<NodeId> connectors;
    ArcId closing_arc = 0;
    /// Zero-weight arcs standing in for a variable chain with no occurrences.
    std::vector<ArcId> standin_arcs;

    /// 6 * sum|C_j| + 1.
    std::size_t formula_arc_count() const;
    /// 5 * sum|C_j| + m - n + 1, the count quoted for the construction.
    long long formula_node_count() const;
    /// True when every variable occurs both positively and negatively.
    bool non_degenerate() const { return standin_arcs.empty(); }
};

/// Builds the satisfiability gadget graph. Node labels record roles.
ReductionArtifact build_reduction(const CnfFormula& f);

/// One 0/1 vector per occurrence, supported on the digon (a,b),(b,a).
std::vector<ArcVector> trivial_vertex_family(const ReductionArtifact& art);

/// True when `c` visits every connector node.
bool is_long(const ReductionArtifact& art, const Cycle& c);

/// First negative long cycle in canonical order, if any. Long cycles of
/// positive weight exist in general and are skipped.
std::optional<Cycle> has_long_cycle(const ReductionArtifact& art, std::size_t cap = kDefaultMaxCycles);

struct SatResult {
    bool satisfiable = false;
    std::vector<bool> assignment;  // index i is x_{i+1}; empty when unsatisfiable
};

inline constexpr std::size_t kMaxBruteForceVariables = 24;

/// Truth-table search. Throws TooManyVariables above 24 variables.
SatResult brute_force_sat(const CnfFormula& f);

struct Ve01Decision {
    bool x_equals_v = false;
    SatResult sat;
    std::size_t x_size = 0;
    std::size_t v_size = 0;
    /// Negative cycles whose vertex lies outside the trivial family.
    std::vector<Cycle> extra_cycles;
    bool extras_all_long = true;
    bool negative_weights_all_minus_one = true;
    bool all_vertices_01 = true;

    /// x_equals_v exactly when the formula is unsatisfiable.
    bool consistent() const { return x_equals_v == !sat.satisfiable; }
    std::string to_text(const ReductionArtifact& art) const;
};

Ve01Decision decide_ve01(const ReductionArtifact& art, std::size_t cap = kDefaultMaxCycles);
Ve01Decision decide_ve01(const CnfFormula& f, std::size_t cap = kDefaultMaxCycles);

}  // namespace negflow
