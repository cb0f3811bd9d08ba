#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "negflow/graph.hpp"

namespace negflow {

inline constexpr std::size_t kDefaultMaxCycles = 1'000'000;

/// Simple directed cycle, stored as its arc sequence rotated so that the
/// smallest arc id comes first.
struct Cycle {
    std::vector<ArcId> arcs;
    Rational weight;

    std::size_t length() const { return arcs.size(); }
    /// Nodes in traversal order, starting at the tail of arcs.front().
    std::vector<NodeId> nodes(const WeightedDigraph& g) const;

    friend bool operator==(const Cycle& a, const Cycle& b) { return a.arcs == b.arcs; }
    friend auto operator<=>(const Cycle& a, const Cycle& b) { return a.arcs <=> b.arcs; }
};

/// Validates that `arcs` is a closed head-to-tail walk with no repeated
/// node, and returns it in canonical rotation. Throws std::invalid_argument.
Cycle make_cycle(const WeightedDigraph& g, std::vector<ArcId> arcs);

enum class SignClass { Negative, Zero, Positive };

SignClass classify(const Cycle& c);
std::string to_string(SignClass s);

/// All simple cycles, sorted lexicographically by canonical arc sequence.
/// Throws CapExceeded("max-cycles") when there are more than `cap`.
std::vector<Cycle> enumerate_cycles(const WeightedDigraph& g, std::size_t cap = kDefaultMaxCycles);

/// Streams the simple cycles (each as a raw arc sequence starting from its
/// smallest node) to `visit`; stops early when `visit` returns false.
/// Order is deterministic but not sorted.
void for_each_cycle(const WeightedDigraph& g,
                    const std::function<bool(const std::vector<ArcId>&)>& visit);

/// Number of simple cycles, counting stops once `limit` is passed.
std::size_t count_cycles_up_to(const WeightedDigraph& g, std::size_t limit);

enum class TwoCycleShape { EdgeDisjoint, ThreePath };
std::string to_string(TwoCycleShape s);

/// A negative cycle and a positive cycle whose union holds no third cycle.
/// `mu` and `mu_prime` are the weights that combine their characteristic
/// vectors into a point with unit coordinate sum and zero total weight.
struct TwoCycle {
    Cycle negative;
    Cycle positive;
    TwoCycleShape shape;
    Rational mu;
    Rational mu_prime;
    /// Arcs on both cycles, in path order. Empty for EdgeDisjoint.
    std::vector<ArcId> shared_path;
};

/// Tests the defining property by enumerating every cycle of the union
/// subgraph. Throws std::logic_error if a valid pair violates the
/// edge-disjoint / three-path dichotomy.
std::optional<TwoCycle> is_two_cycle(const WeightedDigraph& g, const Cycle& c1, const Cycle& c2);

/// Every 2-cycle, ordered by (negative, positive). `cap` bounds both the
/// cycle enumeration and the number of candidate pairs.
std::vector<TwoCycle> enumerate_two_cycles(const WeightedDigraph& g,
                                           std::size_t cap = kDefaultMaxCycles);

/// Same, reusing an already enumerated cycle list.
std::vector<TwoCycle> two_cycles_among(const WeightedDigraph& g, const std::vector<Cycle>& cycles,
                                       std::size_t cap = kDefaultMaxCycles);

struct CycleDecomposition {
    std::vector<std::pair<Cycle, Rational>> terms;

    /// Sum of coefficient times characteristic vector over all terms.
    ArcVector reconstruct(const WeightedDigraph& g) const;
};

/// Greedy peeling: repeatedly take the cycle through the smallest-id support
/// arc and subtract its bottleneck value. Throws NotACirculation if `y` has a
/// negative entry or violates conservation at some node.
CycleDecomposition decompose_circulation(const WeightedDigraph& g, const ArcVector& y);

/// `C <weight> : <arc> <arc> ...`
std::string format_cycle(const Cycle& c);

}  // namespace negflow
