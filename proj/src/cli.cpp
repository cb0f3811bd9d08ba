#include "negflow/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <functional>
#include <sstream>

#include <CLI11.hpp>

#include "negflow/characterize.hpp"
#include "negflow/errors.hpp"
#include "negflow/generators.hpp"
#include "negflow/reduction.hpp"

namespace negflow::cli {

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out << text;
}

std::size_t default_cycle_cap() {
    if (const char* env = std::getenv("NEGFLOW_MAX_CYCLES")) {
        try {
            const auto v = std::stoull(env);
            if (v > 0) return v;
        } catch (const std::exception&) {
        }
        throw std::invalid_argument(std::string("NEGFLOW_MAX_CYCLES is not a positive integer: '") + env + "'");
    }
    return kDefaultMaxCycles;
}

void write_set(std::ostream& out, char tag, const VertexSet& set) {
    out << "c " << (tag == 'v' ? "vertices" : "directions") << ": " << set.points.size() << '\n';
    for (const auto& p : set.points) out << tag << '\n' << serialize_arc_vector(p);
}

std::string set_text(char tag, const std::vector<ArcVector>& points) {
    std::ostringstream out;
    VertexSet s;
    s.points = points;
    write_set(out, tag, s);
    return out.str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Vertices and extreme directions of negative-weight flow polyhedra"};
    app.name("negflow");
    app.require_subcommand(1);

    std::size_t max_cycles = 0;
    std::size_t max_oracle = kDefaultMaxOracle;
    std::string graph_path, vector_path, cnf_path, out_path, x_path;
    bool prime = false, emit_hrep = false;

    auto add_caps = [&](CLI::App* sub, bool oracle) {
        sub->add_option("--max-cycles", max_cycles, "cycle enumeration cap (env NEGFLOW_MAX_CYCLES)");
        if (oracle) sub->add_option("--max-oracle", max_oracle, "oracle support-enumeration cap")->capture_default_str();
    };

    std::function<int()> action;

    auto* vertices = app.add_subcommand("vertices", "vertices from negative cycles");
    vertices->add_option("graph", graph_path)->required();
    add_caps(vertices, false);
    vertices->callback([&] {
        action = [&] {
            const auto g = parse_graph(read_file(graph_path));
            write_set(out, 'v', vertices_from_negative_cycles(g, max_cycles));
            return kOk;
        };
    });

    auto* directions = app.add_subcommand("directions", "extreme directions from zero cycles and 2-cycles");
    directions->add_option("graph", graph_path)->required();
    add_caps(directions, false);
    directions->callback([&] {
        action = [&] {
            const auto g = parse_graph(read_file(graph_path));
            write_set(out, 'd', directions_from_cycles(g, max_cycles));
            return kOk;
        };
    });

    auto* cycles = app.add_subcommand("cycles", "list all simple cycles");
    cycles->add_option("graph", graph_path)->required();
    add_caps(cycles, false);
    cycles->callback([&] {
        action = [&] {
            const auto g = parse_graph(read_file(graph_path));
            for (const auto& c : enumerate_cycles(g, max_cycles)) out << format_cycle(c) << '\n';
            return kOk;
        };
    });

    auto* oracle = app.add_subcommand("oracle", "brute-force vertices of P, or of P' with --prime");
    oracle->add_option("graph", graph_path)->required();
    oracle->add_flag("--prime", prime, "use the normalized direction polytope");
    oracle->add_flag("--hrep", emit_hrep, "print the H-representation instead");
    add_caps(oracle, true);
    oracle->callback([&] {
        action = [&] {
            const auto g = parse_graph(read_file(graph_path));
            const HRep h = prime ? build_P_prime(g) : build_P(g);
            if (emit_hrep) {
                out << export_hrep(h);
                return kOk;
            }
            const VertexSet set = oracle_vertices(h, max_oracle);
            out << "c polyhedron_empty: " << (set.polyhedron_empty ? "true" : "false") << '\n';
            write_set(out, prime ? 'd' : 'v', set);
            return kOk;
        };
    });

    auto* verify = app.add_subcommand("verify", "compare the cycle formulas with the oracle");
    verify->add_option("graph", graph_path)->required();
    add_caps(verify, true);
    verify->callback([&] {
        action = [&] {
            const auto g = parse_graph(read_file(graph_path));
            const auto report = verify_characterization(g, max_cycles, max_oracle);
            out << report.to_text();
            return report.ok() ? kOk : kFailure;
        };
    });

    auto* decompose = app.add_subcommand("decompose", "decompose a circulation into cycles");
    decompose->add_option("graph", graph_path)->required();
    decompose->add_option("vector", vector_path)->required();
    decompose->callback([&] {
        action = [&] {
            const auto g = parse_graph(read_file(graph_path));
            const auto y = parse_arc_vector(read_file(vector_path), g.arc_count());
            const auto d = decompose_circulation(g, y);
            out << "c terms: " << d.terms.size() << '\n';
            for (const auto& [c, lambda] : d.terms) out << "t " << lambda << ' ' << format_cycle(c) << '\n';
            return kOk;
        };
    });

    auto* reduce = app.add_subcommand("reduce", "build the gadget graph of a CNF formula");
    reduce->add_option("cnf", cnf_path)->required();
    reduce->add_option("-o", out_path, "graph output file (default stdout)");
    reduce->add_option("--emit-x", x_path, "write the trivial vertex family here");
    reduce->callback([&] {
        action = [&] {
            const auto art = build_reduction(parse_dimacs_cnf(read_file(cnf_path)));
            std::vector<std::string> comments{
                "family: reduction",
                "occurrences: " + std::to_string(art.formula.occurrence_count()),
            };
            if (art.formula.has_unit_clause()) comments.push_back("warning: formula has a 1-literal clause");
            const std::string text = serialize_graph(art.graph, comments);
            if (out_path.empty()) out << text;
            else write_file(out_path, text);
            if (!x_path.empty()) write_file(x_path, set_text('v', trivial_vertex_family(art)));
            return kOk;
        };
    });

    auto* decide = app.add_subcommand("decide", "is the trivial family the whole vertex set?");
    decide->add_option("cnf", cnf_path)->required();
    add_caps(decide, false);
    decide->callback([&] {
        action = [&] {
            const auto art = build_reduction(parse_dimacs_cnf(read_file(cnf_path)));
            out << decide_ve01(art, max_cycles).to_text(art);
            return kOk;
        };
    });

    auto* gen = app.add_subcommand("gen", "generate instance families");
    gen->require_subcommand(1);
    gen->add_option("-o", out_path, "output file (default stdout)");
    int k = 0;
    std::string shape;
    RandomGraphParams rp;
    auto emit = [&](const WeightedDigraph& g, const std::string& comment) {
        const std::string text = serialize_graph(g, std::vector<std::string>{comment});
        if (out_path.empty()) out << text;
        else write_file(out_path, text);
        return kOk;
    };
    auto* fig3 = gen->add_subcommand("fig3", "exponentially many positive cycles, 2k 2-cycles");
    fig3->add_option("-o", out_path, "output file (default stdout)");
    fig3->add_option("--k", k)->required()->check(CLI::PositiveNumber);
    fig3->callback([&] { action = [&] { return emit(gen_fig3(k), family_comment_fig3(k)); }; });
    auto* fig1 = gen->add_subcommand("fig1", "smallest 2-cycle of each shape");
    fig1->add_option("-o", out_path, "output file (default stdout)");
    fig1->add_option("--shape", shape)->required()->check(CLI::IsMember({"edge-disjoint", "three-path"}));
    fig1->callback([&] {
        action = [&] {
            const auto s = shape == "edge-disjoint" ? TwoCycleShape::EdgeDisjoint : TwoCycleShape::ThreePath;
            return emit(gen_fig1(s), family_comment_fig1(s));
        };
    });
    auto* random = gen->add_subcommand("random", "seeded random simple digraph");
    random->add_option("-o", out_path, "output file (default stdout)");
    random->add_option("--nodes", rp.nodes)->required();
    random->add_option("--arcs", rp.arcs)->required();
    random->add_option("--wmax", rp.wmax)->required();
    random->add_option("--seed", rp.seed)->required();
    random->callback([&] { action = [&] { return emit(gen_random(rp), family_comment_random(rp)); }; });

    std::vector<const char*> argv{"negflow"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kUsage;
    }

    try {
        if (max_cycles == 0) max_cycles = default_cycle_cap();
        if (max_oracle == 0) throw std::invalid_argument("--max-oracle must be positive");
        return action();
    } catch (const CapExceeded& e) {
        err << "error: " << e.what() << "; raise --" << e.cap_name() << '\n';
        return kCapExceeded;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kFailure;
    }
}

}  // namespace negflow::cli
