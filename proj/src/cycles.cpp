#include "negflow/cycles.hpp"

#include <algorithm>
#include <iterator>
#include <deque>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "negflow/errors.hpp"

namespace negflow {

namespace {

/// Lightweight adjacency used by the cycle search: (head, arc id) per out-arc,
/// in ascending arc id order.
struct Adjacency {
    std::vector<std::vector<std::pair<NodeId, ArcId>>> out;
};

Adjacency adjacency_of(const WeightedDigraph& g) {
    Adjacency adj;
    adj.out.resize(g.node_count());
    for (const Arc& a : g.arcs()) adj.out[a.tail].push_back({a.head, a.id});
    return adj;
}

/// Johnson's circuit enumeration, restricted at each round to nodes >= s.
class JohnsonSearch {
public:
    JohnsonSearch(const Adjacency& adj, const std::function<bool(const std::vector<ArcId>&)>& visit)
        : adj_(adj), visit_(visit), blocked_(adj.out.size()), b_(adj.out.size()) {}

    void run() {
        const std::size_t n = adj_.out.size();
        for (start_ = 0; start_ < n && !stop_; ++start_) {
            for (NodeId v = start_; v < n; ++v) {
                blocked_[v] = false;
                b_[v].clear();
            }
            circuit(start_);
        }
    }

private:
    bool circuit(NodeId v) {
        bool found = false;
        blocked_[v] = true;
        for (const auto& [w, arc] : adj_.out[v]) {
            if (stop_) return found;
            if (w < start_) continue;
            if (w == start_) {
                path_.push_back(arc);
                if (!visit_(path_)) stop_ = true;
                path_.pop_back();
                found = true;
            } else if (!blocked_[w]) {
                path_.push_back(arc);
                if (circuit(w)) found = true;
                path_.pop_back();
            }
        }
        if (found) {
            unblock(v);
        } else {
            for (const auto& [w, arc] : adj_.out[v]) {
                if (w < start_) continue;
                auto& list = b_[w];
                if (std::find(list.begin(), list.end(), v) == list.end()) list.push_back(v);
            }
        }
        return found;
    }

    void unblock(NodeId u) {
        blocked_[u] = false;
        auto pending = std::move(b_[u]);
        b_[u].clear();
        for (NodeId w : pending) {
            if (blocked_[w]) unblock(w);
        }
    }

    const Adjacency& adj_;
    const std::function<bool(const std::vector<ArcId>&)>& visit_;
    std::vector<bool> blocked_;
    std::vector<std::vector<NodeId>> b_;
    std::vector<ArcId> path_;
    NodeId start_ = 0;
    bool stop_ = false;
};

std::size_t count_up_to(const Adjacency& adj, std::size_t limit) {
    std::size_t count = 0;
    const std::function<bool(const std::vector<ArcId>&)> visit = [&](const std::vector<ArcId>&) {
        return ++count <= limit;
    };
    JohnsonSearch(adj, visit).run();
    return count;
}

std::vector<ArcId> canonical_rotation(std::vector<ArcId> arcs) {
    const auto first = std::min_element(arcs.begin(), arcs.end());
    std::rotate(arcs.begin(), first, arcs.end());
    return arcs;
}

Cycle unchecked_cycle(const WeightedDigraph& g, const std::vector<ArcId>& raw) {
    Cycle c;
    c.arcs = canonical_rotation(raw);
    c.weight = total_weight(g, c.arcs);
    return c;
}

}  // namespace

std::vector<NodeId> Cycle::nodes(const WeightedDigraph& g) const {
    std::vector<NodeId> out;
    out.reserve(arcs.size());
    for (ArcId id : arcs) out.push_back(g.arc(id).tail);
    return out;
}

Cycle make_cycle(const WeightedDigraph& g, std::vector<ArcId> arcs) {
    if (arcs.empty()) throw std::invalid_argument("a cycle needs at least one arc");
    std::vector<bool> seen(g.node_count(), false);
    for (std::size_t i = 0; i < arcs.size(); ++i) {
        const Arc& a = g.arc(arcs[i]);
        const Arc& next = g.arc(arcs[(i + 1) % arcs.size()]);
        if (a.head != next.tail) throw std::invalid_argument("arcs are not head-to-tail");
        if (seen[a.tail]) throw std::invalid_argument("cycle repeats a node");
        seen[a.tail] = true;
    }
    return unchecked_cycle(g, arcs);
}

SignClass classify(const Cycle& c) {
    const int s = c.weight.sign();
    return s < 0 ? SignClass::Negative : (s == 0 ? SignClass::Zero : SignClass::Positive);
}

std::string to_string(SignClass s) {
    switch (s) {
        case SignClass::Negative: return "negative";
        case SignClass::Zero: return "zero";
        case SignClass::Positive: return "positive";
    }
    return {};
}

std::string to_string(TwoCycleShape s) {
    return s == TwoCycleShape::EdgeDisjoint ? "edge-disjoint" : "three-path";
}

void for_each_cycle(const WeightedDigraph& g,
                    const std::function<bool(const std::vector<ArcId>&)>& visit) {
    const Adjacency adj = adjacency_of(g);
    JohnsonSearch(adj, visit).run();
}

std::size_t count_cycles_up_to(const WeightedDigraph& g, std::size_t limit) {
    return count_up_to(adjacency_of(g), limit);
}

std::vector<Cycle> enumerate_cycles(const WeightedDigraph& g, std::size_t cap) {
    std::vector<Cycle> cycles;
    bool exceeded = false;
    for_each_cycle(g, [&](const std::vector<ArcId>& raw) {
        if (cycles.size() == cap) {
            exceeded = true;
            return false;
        }
        cycles.push_back(unchecked_cycle(g, raw));
        return true;
    });
    if (exceeded) throw CapExceeded("max-cycles", cap);
    std::sort(cycles.begin(), cycles.end());
    return cycles;
}

std::optional<TwoCycle> is_two_cycle(const WeightedDigraph& g, const Cycle& c1, const Cycle& c2) {
    if (classify(c1) != SignClass::Negative || classify(c2) != SignClass::Positive) return std::nullopt;

    // Union subgraph with local node numbering.
    std::vector<ArcId> union_arcs = c1.arcs;
    union_arcs.insert(union_arcs.end(), c2.arcs.begin(), c2.arcs.end());
    std::sort(union_arcs.begin(), union_arcs.end());
    union_arcs.erase(std::unique(union_arcs.begin(), union_arcs.end()), union_arcs.end());

    std::vector<std::pair<NodeId, NodeId>> local_nodes;  // (global, local)
    auto local = [&](NodeId v) {
        for (const auto& [gv, lv] : local_nodes) {
            if (gv == v) return lv;
        }
        local_nodes.push_back({v, local_nodes.size()});
        return local_nodes.back().second;
    };
    Adjacency adj;
    for (ArcId id : union_arcs) {
        const Arc& a = g.arc(id);
        const NodeId t = local(a.tail);
        const NodeId h = local(a.head);
        if (adj.out.size() < local_nodes.size()) adj.out.resize(local_nodes.size());
        adj.out[t].push_back({h, id});
    }
    if (count_up_to(adj, 2) != 2) return std::nullopt;

    TwoCycle tc{c1, c2, TwoCycleShape::EdgeDisjoint, {}, {}, {}};

    auto s1 = c1.arcs, s2 = c2.arcs;
    std::sort(s1.begin(), s1.end());
    std::sort(s2.begin(), s2.end());
    std::vector<ArcId> shared;
    std::set_intersection(s1.begin(), s1.end(), s2.begin(), s2.end(), std::back_inserter(shared));
    if (!shared.empty()) {
        // The shared arcs must be consecutive on c1 and form one directed path.
        const std::size_t len = c1.arcs.size();
        auto is_shared = [&](ArcId id) { return std::binary_search(shared.begin(), shared.end(), id); };
        std::size_t begin = len;
        for (std::size_t i = 0; i < len; ++i) {
            if (is_shared(c1.arcs[i]) && !is_shared(c1.arcs[(i + len - 1) % len])) {
                if (begin != len) begin = len + 1;  // more than one run
                else begin = i;
            }
        }
        if (begin >= len) {
            std::ostringstream msg;
            msg << "2-cycle dichotomy violated for " << format_cycle(c1) << " / " << format_cycle(c2);
            throw std::logic_error(msg.str());
        }
        for (std::size_t k = 0; k < shared.size(); ++k) tc.shared_path.push_back(c1.arcs[(begin + k) % len]);
        if (!std::all_of(tc.shared_path.begin(), tc.shared_path.end(), is_shared)) {
            throw std::logic_error("2-cycle shared arcs are not a single path");
        }
        tc.shape = TwoCycleShape::ThreePath;
    }

    const Rational len1(static_cast<std::int64_t>(c1.length()));
    const Rational len2(static_cast<std::int64_t>(c2.length()));
    const Rational denom = c2.weight * len1 - c1.weight * len2;
    if (denom.sign() <= 0) throw std::logic_error("2-cycle coefficient denominator is not positive");
    tc.mu = c2.weight / denom;
    tc.mu_prime = -c1.weight / denom;
    return tc;
}

std::vector<TwoCycle> two_cycles_among(const WeightedDigraph& g, const std::vector<Cycle>& cycles,
                                       std::size_t cap) {
    std::vector<const Cycle*> negative, positive;
    for (const Cycle& c : cycles) {
        if (classify(c) == SignClass::Negative) negative.push_back(&c);
        if (classify(c) == SignClass::Positive) positive.push_back(&c);
    }
    if (!negative.empty() && positive.size() > cap / negative.size()) throw CapExceeded("max-cycles", cap);

    std::vector<TwoCycle> out;
    for (const Cycle* n : negative) {
        for (const Cycle* p : positive) {
            if (auto tc = is_two_cycle(g, *n, *p)) out.push_back(std::move(*tc));
        }
    }
    return out;
}

std::vector<TwoCycle> enumerate_two_cycles(const WeightedDigraph& g, std::size_t cap) {
    return two_cycles_among(g, enumerate_cycles(g, cap), cap);
}

ArcVector CycleDecomposition::reconstruct(const WeightedDigraph& g) const {
    ArcVector sum(g.arc_count());
    for (const auto& [cycle, coefficient] : terms) {
        for (ArcId id : cycle.arcs) sum[id] += coefficient;
    }
    return sum;
}

CycleDecomposition decompose_circulation(const WeightedDigraph& g, const ArcVector& y) {
    if (y.dimension() != g.arc_count()) throw DimensionMismatch(g.arc_count(), y.dimension());
    for (const Arc& a : g.arcs()) {
        if (y[a.id].sign() < 0) {
            throw NotACirculation(a.tail, "negative flow on arc " + std::to_string(a.id));
        }
    }
    for (NodeId v = 0; v < g.node_count(); ++v) {
        Rational balance;
        for (ArcId id : g.out_arcs(v)) balance += y[id];
        for (ArcId id : g.in_arcs(v)) balance -= y[id];
        if (!balance.is_zero()) {
            throw NotACirculation(v, "flow conservation violated at node " + std::to_string(v + 1));
        }
    }

    ArcVector residual = y;
    CycleDecomposition result;
    constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
    for (;;) {
        ArcId first = kNone;
        for (ArcId id = 0; id < residual.dimension(); ++id) {
            if (residual[id].sign() > 0) {
                first = id;
                break;
            }
        }
        if (first == kNone) break;

        const Arc& e = g.arc(first);
        std::vector<ArcId> arcs{first};
        if (e.head != e.tail) {
            // BFS from head back to tail through the remaining support.
            std::vector<ArcId> via(g.node_count(), kNone);
            std::vector<bool> seen(g.node_count(), false);
            std::deque<NodeId> queue{e.head};
            seen[e.head] = true;
            while (!queue.empty() && !seen[e.tail]) {
                const NodeId v = queue.front();
                queue.pop_front();
                for (ArcId id : g.out_arcs(v)) {
                    const NodeId w = g.arc(id).head;
                    if (residual[id].sign() <= 0 || seen[w]) continue;
                    seen[w] = true;
                    via[w] = id;
                    queue.push_back(w);
                }
            }
            if (!seen[e.tail]) throw std::logic_error("support arc lies on no cycle");
            std::vector<ArcId> back;
            for (NodeId v = e.tail; v != e.head; v = g.arc(via[v]).tail) back.push_back(via[v]);
            arcs.insert(arcs.end(), back.rbegin(), back.rend());
        }
        Rational bottleneck = residual[arcs.front()];
        for (ArcId id : arcs) bottleneck = std::min(bottleneck, residual[id]);
        for (ArcId id : arcs) residual[id] -= bottleneck;
        result.terms.emplace_back(make_cycle(g, std::move(arcs)), std::move(bottleneck));
    }
    return result;
}

std::string format_cycle(const Cycle& c) {
    std::ostringstream out;
    out << "C " << c.weight << " :";
    for (ArcId id : c.arcs) out << ' ' << id;
    return out.str();
}

}  // namespace negflow
