#include "negflow/reduction.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "negflow/errors.hpp"

namespace negflow {

std::size_t CnfFormula::occurrence_count() const {
    std::size_t total = 0;
    for (const auto& c : clauses) total += c.size();
    return total;
}

bool CnfFormula::has_unit_clause() const {
    return std::any_of(clauses.begin(), clauses.end(), [](const auto& c) { return c.size() == 1; });
}

void CnfFormula::validate() const {
    for (std::size_t j = 0; j < clauses.size(); ++j) {
        if (clauses[j].empty()) throw EmptyClause(j);
        for (int lit : clauses[j]) {
            const auto var = static_cast<std::size_t>(std::abs(lit));
            if (lit == 0 || var > variable_count) {
                throw std::invalid_argument("literal " + std::to_string(lit) + " out of range");
            }
        }
    }
}

CnfFormula parse_dimacs_cnf(std::string_view text) {
    CnfFormula f;
    bool have_header = false;
    std::size_t declared_clauses = 0;
    std::vector<int> current;
    std::size_t line_no = 0, last_line = 0;
    std::istringstream in{std::string(text)};
    for (std::string line; std::getline(in, line);) {
        ++line_no;
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok)) continue;
        if (tok == "c") continue;
        if (tok == "%") break;  // SATLIB end marker
        if (tok == "p") {
            if (have_header) throw ParseError(line_no, "duplicate header");
            std::string kind;
            long long n = -1, m = -1;
            std::string extra;
            if (!(ls >> kind >> n >> m) || kind != "cnf" || n < 0 || m < 0 || (ls >> extra)) {
                throw ParseError(line_no, "malformed header, expected 'p cnf <vars> <clauses>'");
            }
            f.variable_count = static_cast<std::size_t>(n);
            declared_clauses = static_cast<std::size_t>(m);
            have_header = true;
            continue;
        }
        if (!have_header) throw ParseError(line_no, "clause before 'p cnf' header");
        ls.clear();
        ls.str(line);
        while (ls >> tok) {
            char* end = nullptr;
            const long lit = std::strtol(tok.c_str(), &end, 10);
            if (end == tok.c_str() || *end != '\0') throw ParseError(line_no, "malformed literal '" + tok + "'");
            if (lit == 0) {
                if (current.empty()) throw ParseError(line_no, "empty clause");
                f.clauses.push_back(std::move(current));
                current.clear();
                continue;
            }
            if (static_cast<std::size_t>(std::labs(lit)) > f.variable_count) {
                throw ParseError(line_no, "variable " + tok + " out of range");
            }
            current.push_back(static_cast<int>(lit));
            last_line = line_no;
        }
    }
    if (!have_header) throw ParseError(0, "missing 'p cnf' header");
    if (!current.empty()) throw ParseError(last_line, "clause not terminated by 0");
    if (f.clauses.size() != declared_clauses) {
        throw ParseError(0, "header declares " + std::to_string(declared_clauses) + " clauses but " +
                                std::to_string(f.clauses.size()) + " given");
    }
    return f;
}

std::string to_dimacs(const CnfFormula& f) {
    std::ostringstream out;
    out << "p cnf " << f.variable_count << ' ' << f.clauses.size() << '\n';
    for (const auto& c : f.clauses) {
        for (int lit : c) out << lit << ' ';
        out << "0\n";
    }
    return out.str();
}

// --- construction ---------------------------------------------------------

namespace {

std::string literal_name(int lit) {
    return (lit < 0 ? "~x" : "x") + std::to_string(std::abs(lit));
}

std::string occurrence_tag(const Occurrence& o) {
    return literal_name(o.literal) + "@C" + std::to_string(o.clause + 1);
}

}  // namespace

std::size_t ReductionArtifact::formula_arc_count() const { return 6 * formula.occurrence_count() + 1; }

long long ReductionArtifact::formula_node_count() const {
    return 5 * static_cast<long long>(formula.occurrence_count()) +
           static_cast<long long>(formula.clauses.size()) - static_cast<long long>(formula.variable_count) + 1;
}

ReductionArtifact build_reduction(const CnfFormula& f) {
    f.validate();
    const std::size_t n = f.variable_count;
    const std::size_t m = f.clauses.size();

    ReductionArtifact art;
    art.formula = f;
    DigraphBuilder gb;

    // Connectors v_0..v_n, v'_1..v'_m. v'_0 is v_n.
    for (std::size_t i = 0; i <= n; ++i) art.connectors.push_back(gb.add_node("v" + std::to_string(i)));
    for (std::size_t j = 1; j <= m; ++j) art.connectors.push_back(gb.add_node("v'" + std::to_string(j)));
    auto v = [&](std::size_t i) { return art.connectors[i]; };
    auto v_prime = [&](std::size_t j) { return j == 0 ? v(n) : art.connectors[n + j]; };

    // Shared a/b nodes, one pair per occurrence, in clause order.
    for (std::size_t j = 0; j < m; ++j) {
        for (std::size_t k = 0; k < f.clauses[j].size(); ++k) {
            Occurrence o{j, k, f.clauses[j][k], 0, 0, 0, 0, 0, 0, 0, 0};
            o.a = gb.add_node("a " + occurrence_tag(o));
            o.b = gb.add_node("b " + occurrence_tag(o));
            art.occurrences.push_back(o);
        }
    }

    const Rational half(1, 2);
    // Variable gadgets: chain of positive occurrences and chain of negated
    // occurrences, in parallel between v_{i-1} and v_i.
    for (std::size_t i = 1; i <= n; ++i) {
        for (int polarity : {1, -1}) {
            const int lit = polarity * static_cast<int>(i);
            std::vector<Occurrence*> chain;
            for (auto& o : art.occurrences) {
                if (o.literal == lit) chain.push_back(&o);
            }
            if (chain.empty()) {
                art.standin_arcs.push_back(gb.add_arc(v(i - 1), v(i), 0));
                continue;
            }
            NodeId p = v(i - 1);
            for (std::size_t k = 0; k < chain.size(); ++k) {
                Occurrence& o = *chain[k];
                NodeId q = v(i);
                if (k + 1 < chain.size()) {
                    q = gb.add_node("q " + occurrence_tag(o) + " = p " + occurrence_tag(*chain[k + 1]));
                }
                o.p_a = gb.add_arc(p, o.a, half);
                o.a_b = gb.add_arc(o.a, o.b, -half);
                o.b_q = gb.add_arc(o.b, q, 0);
                p = q;
            }
        }
    }
    // Clause gadgets: one path per literal, in parallel between v'_{j-1} and v'_j.
    for (auto& o : art.occurrences) {
        o.r_b = gb.add_arc(v_prime(o.clause), o.b, 0);
        o.b_a = gb.add_arc(o.b, o.a, -half);
        o.a_s = gb.add_arc(o.a, v_prime(o.clause + 1), half);
    }
    art.closing_arc = gb.add_arc(v_prime(m), v(0), -1);
    art.graph = gb.build();
    return art;
}

std::vector<ArcVector> trivial_vertex_family(const ReductionArtifact& art) {
    std::vector<ArcVector> family;
    for (const auto& o : art.occurrences) {
        const ArcId digon[] = {o.a_b, o.b_a};
        family.push_back(characteristic_vector(art.graph, digon));
    }
    return family;
}

bool is_long(const ReductionArtifact& art, const Cycle& c) {
    std::vector<bool> on_cycle(art.graph.node_count(), false);
    for (NodeId v : c.nodes(art.graph)) on_cycle[v] = true;
    return std::all_of(art.connectors.begin(), art.connectors.end(), [&](NodeId v) { return on_cycle[v]; });
}

std::optional<Cycle> has_long_cycle(const ReductionArtifact& art, std::size_t cap) {
    for (const Cycle& c : enumerate_cycles(art.graph, cap)) {
        if (classify(c) == SignClass::Negative && is_long(art, c)) return c;
    }
    return std::nullopt;
}

SatResult brute_force_sat(const CnfFormula& f) {
    const std::size_t n = f.variable_count;
    if (n > kMaxBruteForceVariables) throw TooManyVariables(n, kMaxBruteForceVariables);
    f.validate();
    for (std::uint32_t bits = 0; bits < (std::uint32_t{1} << n); ++bits) {
        auto value = [&](int lit) {
            const bool x = (bits >> (std::abs(lit) - 1)) & 1u;
            return lit > 0 ? x : !x;
        };
        const bool all = std::all_of(f.clauses.begin(), f.clauses.end(), [&](const auto& clause) {
            return std::any_of(clause.begin(), clause.end(), value);
        });
        if (all) {
            SatResult r{true, std::vector<bool>(n)};
            for (std::size_t i = 0; i < n; ++i) r.assignment[i] = (bits >> i) & 1u;
            return r;
        }
    }
    return {};
}

Ve01Decision decide_ve01(const ReductionArtifact& art, std::size_t cap) {
    const auto cycles = enumerate_cycles(art.graph, cap);
    const VertexSet vertices = vertices_from_cycles(art.graph, cycles);
    auto family = trivial_vertex_family(art);
    normalize(family);

    Ve01Decision d;
    d.x_size = family.size();
    d.v_size = vertices.points.size();
    d.x_equals_v = vertices.points == family;
    for (const Cycle& c : cycles) {
        if (classify(c) != SignClass::Negative) continue;
        if (c.weight != Rational(-1)) d.negative_weights_all_minus_one = false;
        const ArcVector vertex = vertex_of_cycle(art.graph, c);
        for (const auto& q : vertex.entries()) {
            if (!q.is_zero() && q != Rational(1)) d.all_vertices_01 = false;
        }
        if (!std::binary_search(family.begin(), family.end(), vertex)) {
            d.extra_cycles.push_back(c);
            if (!is_long(art, c)) d.extras_all_long = false;
        }
    }
    d.sat = brute_force_sat(art.formula);
    return d;
}

Ve01Decision decide_ve01(const CnfFormula& f, std::size_t cap) { return decide_ve01(build_reduction(f), cap); }

std::string Ve01Decision::to_text(const ReductionArtifact& art) const {
    std::ostringstream out;
    auto b = [](bool x) { return x ? "true" : "false"; };
    out << "variables: " << art.formula.variable_count << '\n'
        << "clauses: " << art.formula.clauses.size() << '\n'
        << "occurrences: " << art.formula.occurrence_count() << '\n'
        << "nodes: " << art.graph.node_count() << '\n'
        << "arcs: " << art.graph.arc_count() << '\n'
        << "X_size: " << x_size << '\n'
        << "V_size: " << v_size << '\n'
        << "X_equals_V: " << b(x_equals_v) << '\n'
        << "sat: " << b(sat.satisfiable) << '\n';
    if (sat.satisfiable) {
        out << "assignment:";
        for (std::size_t i = 0; i < sat.assignment.size(); ++i) {
            out << ' ' << (sat.assignment[i] ? "" : "-") << i + 1;
        }
        out << '\n';
    }
    out << "negative_cycles_weight_minus_one: " << b(negative_weights_all_minus_one) << '\n'
        << "vertices_01: " << b(all_vertices_01) << '\n'
        << "extra_vertices: " << extra_cycles.size() << '\n'
        << "extras_all_long: " << b(extras_all_long) << '\n'
        << "consistent_with_unsat: " << b(consistent()) << '\n';
    if (!extra_cycles.empty()) out << "witness_long_cycle: " << format_cycle(extra_cycles.front()) << '\n';
    return out.str();
}

}  // namespace negflow
