#include "negflow/graph.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "negflow/errors.hpp"

namespace negflow {

WeightedDigraph::WeightedDigraph(std::size_t node_count, std::vector<Arc> arcs,
                                 std::vector<std::string> labels)
    : node_count_(node_count), arcs_(std::move(arcs)), labels_(std::move(labels)) {
    if (labels_.size() > node_count_) throw std::invalid_argument("more labels than nodes");
    labels_.resize(node_count_);
    out_.resize(node_count_);
    in_.resize(node_count_);
    for (std::size_t i = 0; i < arcs_.size(); ++i) {
        const Arc& a = arcs_[i];
        if (a.id != i) throw std::invalid_argument("arc ids must be contiguous from 0");
        if (a.tail >= node_count_ || a.head >= node_count_) {
            throw std::invalid_argument("arc " + std::to_string(i) + " has an endpoint out of range");
        }
        out_[a.tail].push_back(i);
        in_[a.head].push_back(i);
    }
}

const Arc& WeightedDigraph::arc(ArcId id) const {
    if (id >= arcs_.size()) throw InvalidArcId(id);
    return arcs_[id];
}

const std::string& WeightedDigraph::label(NodeId v) const { return labels_.at(v); }

NodeId DigraphBuilder::add_node(std::string label) {
    labels_.resize(node_count_);
    labels_.push_back(std::move(label));
    return node_count_++;
}

ArcId DigraphBuilder::add_arc(NodeId tail, NodeId head, Rational weight) {
    const ArcId id = arcs_.size();
    arcs_.push_back(Arc{id, tail, head, std::move(weight)});
    return id;
}

void DigraphBuilder::set_label(NodeId v, std::string label) {
    if (labels_.size() < node_count_) labels_.resize(node_count_);
    labels_.at(v) = std::move(label);
}

WeightedDigraph DigraphBuilder::build() const {
    auto labels = labels_;
    labels.resize(node_count_);
    return WeightedDigraph(node_count_, arcs_, std::move(labels));
}

// --- ArcVector ------------------------------------------------------------

std::vector<ArcId> ArcVector::support() const {
    std::vector<ArcId> s;
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (!entries_[i].is_zero()) s.push_back(i);
    }
    return s;
}

Rational ArcVector::sum() const {
    Rational total;
    for (const auto& q : entries_) total += q;
    return total;
}

ArcVector& ArcVector::operator+=(const ArcVector& rhs) {
    if (rhs.dimension() != dimension()) throw DimensionMismatch(dimension(), rhs.dimension());
    for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += rhs.entries_[i];
    return *this;
}

ArcVector& ArcVector::operator-=(const ArcVector& rhs) {
    if (rhs.dimension() != dimension()) throw DimensionMismatch(dimension(), rhs.dimension());
    for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= rhs.entries_[i];
    return *this;
}

ArcVector operator*(const Rational& s, ArcVector v) {
    for (auto& q : v.entries_) q *= s;
    return v;
}

// --- queries --------------------------------------------------------------

Rational total_weight(const WeightedDigraph& g, std::span<const ArcId> arcs) {
    Rational total;
    for (ArcId id : arcs) total += g.arc(id).weight;
    return total;
}

ArcVector characteristic_vector(const WeightedDigraph& g, std::span<const ArcId> arcs) {
    ArcVector v(g.arc_count());
    for (ArcId id : arcs) {
        if (id >= g.arc_count()) throw InvalidArcId(id);
        v[id] = 1;
    }
    return v;
}

std::vector<std::vector<NodeId>> strongly_connected_components(const WeightedDigraph& g) {
    // Iterative Tarjan.
    constexpr std::size_t kUnvisited = std::numeric_limits<std::size_t>::max();
    const std::size_t n = g.node_count();
    std::vector<std::size_t> index(n, kUnvisited), lowlink(n, 0);
    std::vector<bool> on_stack(n, false);
    std::vector<NodeId> stack;
    std::vector<std::vector<NodeId>> components;
    std::size_t next_index = 0;

    struct Frame {
        NodeId node;
        std::size_t next_arc;
    };
    std::vector<Frame> call;

    for (NodeId root = 0; root < n; ++root) {
        if (index[root] != kUnvisited) continue;
        call.push_back({root, 0});
        index[root] = lowlink[root] = next_index++;
        stack.push_back(root);
        on_stack[root] = true;

        while (!call.empty()) {
            Frame& f = call.back();
            const auto out = g.out_arcs(f.node);
            if (f.next_arc < out.size()) {
                const NodeId w = g.arc(out[f.next_arc++]).head;
                if (index[w] == kUnvisited) {
                    index[w] = lowlink[w] = next_index++;
                    stack.push_back(w);
                    on_stack[w] = true;
                    call.push_back({w, 0});
                } else if (on_stack[w]) {
                    lowlink[f.node] = std::min(lowlink[f.node], index[w]);
                }
                continue;
            }
            const NodeId v = f.node;
            call.pop_back();
            if (!call.empty()) {
                lowlink[call.back().node] = std::min(lowlink[call.back().node], lowlink[v]);
            }
            if (lowlink[v] == index[v]) {
                std::vector<NodeId> component;
                NodeId w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on_stack[w] = false;
                    component.push_back(w);
                } while (w != v);
                std::sort(component.begin(), component.end());
                components.push_back(std::move(component));
            }
        }
    }
    std::sort(components.begin(), components.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return components;
}

Subgraph subgraph(const WeightedDigraph& g, std::span<const ArcId> arcs) {
    std::vector<ArcId> ids(arcs.begin(), arcs.end());
    for (ArcId id : ids) {
        if (id >= g.arc_count()) throw InvalidArcId(id);
    }
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());

    constexpr std::size_t kAbsent = std::numeric_limits<std::size_t>::max();
    std::vector<std::size_t> local(g.node_count(), kAbsent);
    Subgraph sub;
    auto map_node = [&](NodeId v) {
        if (local[v] == kAbsent) {
            local[v] = sub.original_node.size();
            sub.original_node.push_back(v);
        }
        return local[v];
    };
    std::vector<Arc> sub_arcs;
    for (ArcId id : ids) {
        const Arc& a = g.arc(id);
        const NodeId t = map_node(a.tail);
        const NodeId h = map_node(a.head);
        sub_arcs.push_back(Arc{sub_arcs.size(), t, h, a.weight});
        sub.original_arc.push_back(id);
    }
    std::vector<std::string> labels;
    for (NodeId v : sub.original_node) labels.push_back(g.label(v));
    sub.graph = WeightedDigraph(sub.original_node.size(), std::move(sub_arcs), std::move(labels));
    return sub;
}

// --- text formats ---------------------------------------------------------

namespace {

std::vector<std::string> split_ws(std::string_view line) {
    std::vector<std::string> tokens;
    std::istringstream in{std::string(line)};
    for (std::string t; in >> t;) tokens.push_back(std::move(t));
    return tokens;
}

std::size_t parse_index(const std::string& token, std::size_t line, const char* what) {
    if (token.empty() || token.find_first_not_of("0123456789") != std::string::npos) {
        throw ParseError(line, std::string("malformed ") + what + " '" + token + "'");
    }
    try {
        return std::stoull(token);
    } catch (const std::exception&) {
        throw ParseError(line, std::string(what) + " out of range '" + token + "'");
    }
}

template <typename Fn>
void for_each_line(std::string_view text, Fn&& fn) {
    std::size_t line_no = 0;
    while (!text.empty()) {
        const auto nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        fn(line_no, line);
    }
}

}  // namespace

WeightedDigraph parse_graph(std::string_view text) {
    bool have_header = false;
    std::size_t nodes = 0, declared_arcs = 0, header_line = 0;
    std::vector<Arc> arcs;
    std::vector<std::pair<std::size_t, std::pair<std::size_t, std::string>>> roles;

    for_each_line(text, [&](std::size_t ln, std::string_view line) {
        const auto tok = split_ws(line);
        if (tok.empty()) return;
        if (tok[0] == "c") {
            if (tok.size() >= 3 && tok[1] == "role:") {
                const std::size_t v = parse_index(tok[2], ln, "node");
                const auto pos = line.find(tok[2], line.find("role:") + 5) + tok[2].size();
                auto rest = line.substr(pos);
                while (!rest.empty() && rest.front() == ' ') rest.remove_prefix(1);
                roles.push_back({ln, {v, std::string(rest)}});
            }
            return;
        }
        if (tok[0] == "p") {
            if (have_header) throw ParseError(ln, "duplicate header");
            if (tok.size() != 3) throw ParseError(ln, "header must be 'p <nodes> <arcs>'");
            nodes = parse_index(tok[1], ln, "node count");
            declared_arcs = parse_index(tok[2], ln, "arc count");
            have_header = true;
            header_line = ln;
            return;
        }
        if (tok[0] == "a") {
            if (!have_header) throw ParseError(ln, "arc before header");
            if (tok.size() != 4) throw ParseError(ln, "arc must be 'a <tail> <head> <weight>'");
            const std::size_t t = parse_index(tok[1], ln, "tail");
            const std::size_t h = parse_index(tok[2], ln, "head");
            if (t < 1 || t > nodes) throw ParseError(ln, "tail " + tok[1] + " out of range");
            if (h < 1 || h > nodes) throw ParseError(ln, "head " + tok[2] + " out of range");
            Rational w;
            try {
                w = Rational::parse(tok[3]);
            } catch (const std::exception& e) {
                throw ParseError(ln, e.what());
            }
            arcs.push_back(Arc{arcs.size(), t - 1, h - 1, std::move(w)});
            return;
        }
        throw ParseError(ln, "unrecognized line '" + std::string(line) + "'");
    });

    if (!have_header) throw ParseError(0, "missing 'p' header");
    if (arcs.size() != declared_arcs) {
        throw ParseError(header_line, "header declares " + std::to_string(declared_arcs) +
                                          " arcs but " + std::to_string(arcs.size()) + " given");
    }
    std::vector<std::string> labels(nodes);
    for (auto& [ln, role] : roles) {
        if (role.first < 1 || role.first > nodes) throw ParseError(ln, "role for unknown node");
        labels[role.first - 1] = role.second;
    }
    return WeightedDigraph(nodes, std::move(arcs), std::move(labels));
}

std::string serialize_graph(const WeightedDigraph& g, std::span<const std::string> comments) {
    std::ostringstream out;
    for (const auto& c : comments) out << "c " << c << '\n';
    for (NodeId v = 0; v < g.node_count(); ++v) {
        if (!g.label(v).empty()) out << "c role: " << v + 1 << ' ' << g.label(v) << '\n';
    }
    out << "p " << g.node_count() << ' ' << g.arc_count() << '\n';
    for (const Arc& a : g.arcs()) {
        out << "a " << a.tail + 1 << ' ' << a.head + 1 << ' ' << a.weight << '\n';
    }
    return out.str();
}

ArcVector parse_arc_vector(std::string_view text, std::size_t dimension) {
    ArcVector v(dimension);
    std::vector<bool> seen(dimension, false);
    for_each_line(text, [&](std::size_t ln, std::string_view line) {
        const auto tok = split_ws(line);
        if (tok.empty() || tok[0] == "c") return;
        if (tok[0] != "e" || tok.size() != 3) throw ParseError(ln, "expected 'e <arc_id> <value>'");
        const std::size_t id = parse_index(tok[1], ln, "arc id");
        if (id >= dimension) throw ParseError(ln, "arc id " + tok[1] + " out of range");
        if (seen[id]) throw ParseError(ln, "arc id " + tok[1] + " given twice");
        seen[id] = true;
        try {
            v[id] = Rational::parse(tok[2]);
        } catch (const std::exception& e) {
            throw ParseError(ln, e.what());
        }
    });
    return v;
}

std::string serialize_arc_vector(const ArcVector& v) {
    std::ostringstream out;
    for (ArcId id : v.support()) out << "e " << id << ' ' << v[id] << '\n';
    return out.str();
}

}  // namespace negflow
