#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "negflow/rational.hpp"

namespace negflow {

using NodeId = std::size_t;
using ArcId = std::size_t;

struct Arc {
    ArcId id;
    NodeId tail;
    NodeId head;
    Rational weight;

    friend bool operator==(const Arc&, const Arc&) = default;
};

/// Directed multigraph with an exact rational weight on every arc.
///
/// Nodes are 0-based internally. Arc ids are contiguous from 0 in insertion
/// order; parallel arcs, antiparallel pairs and self-loops are all allowed.
/// Immutable after construction.
class WeightedDigraph {
public:
    WeightedDigraph() = default;
    /// Throws std::invalid_argument if an arc id is out of sequence or an
    /// endpoint is not a valid node.
    WeightedDigraph(std::size_t node_count, std::vector<Arc> arcs,
                    std::vector<std::string> labels = {});

    std::size_t node_count() const { return node_count_; }
    std::size_t arc_count() const { return arcs_.size(); }

    const std::vector<Arc>& arcs() const { return arcs_; }
    /// Throws InvalidArcId.
    const Arc& arc(ArcId id) const;

    std::span<const ArcId> out_arcs(NodeId v) const { return out_[v]; }
    std::span<const ArcId> in_arcs(NodeId v) const { return in_[v]; }

    /// Empty string when the node carries no label.
    const std::string& label(NodeId v) const;
    const std::vector<std::string>& labels() const { return labels_; }

    friend bool operator==(const WeightedDigraph& a, const WeightedDigraph& b) {
        return a.node_count_ == b.node_count_ && a.arcs_ == b.arcs_;
    }

private:
    std::size_t node_count_ = 0;
    std::vector<Arc> arcs_;
    std::vector<std::string> labels_;
    std::vector<std::vector<ArcId>> out_;
    std::vector<std::vector<ArcId>> in_;
};

/// Convenience builder; arc ids follow call order.
class DigraphBuilder {
public:
    explicit DigraphBuilder(std::size_t node_count = 0) : node_count_(node_count) {}

    NodeId add_node(std::string label = {});
    ArcId add_arc(NodeId tail, NodeId head, Rational weight);
    void set_label(NodeId v, std::string label);
    std::size_t node_count() const { return node_count_; }
    WeightedDigraph build() const;

private:
    std::size_t node_count_;
    std::vector<Arc> arcs_;
    std::vector<std::string> labels_;
};

/// Exact rational vector indexed by the arc ids of one graph. Used for both
/// points of the flow polyhedron and its recession directions.
class ArcVector {
public:
    ArcVector() = default;
    explicit ArcVector(std::size_t dimension) : entries_(dimension) {}
    explicit ArcVector(std::vector<Rational> entries) : entries_(std::move(entries)) {}

    std::size_t dimension() const { return entries_.size(); }
    const Rational& operator[](std::size_t i) const { return entries_[i]; }
    Rational& operator[](std::size_t i) { return entries_[i]; }
    const std::vector<Rational>& entries() const { return entries_; }

    /// Arc ids with a nonzero entry, ascending.
    std::vector<ArcId> support() const;
    Rational sum() const;

    ArcVector& operator+=(const ArcVector& rhs);
    ArcVector& operator-=(const ArcVector& rhs);
    friend ArcVector operator+(ArcVector a, const ArcVector& b) { return a += b; }
    friend ArcVector operator-(ArcVector a, const ArcVector& b) { return a -= b; }
    friend ArcVector operator*(const Rational& s, ArcVector v);

    friend bool operator==(const ArcVector&, const ArcVector&) = default;
    friend auto operator<=>(const ArcVector& a, const ArcVector& b) {
        return a.entries_ <=> b.entries_;
    }

private:
    std::vector<Rational> entries_;
};

/// Sum of the weights of the arcs in `arcs`. Throws InvalidArcId.
Rational total_weight(const WeightedDigraph& g, std::span<const ArcId> arcs);

/// 0/1 vector with ones exactly on `arcs`. Throws InvalidArcId.
ArcVector characteristic_vector(const WeightedDigraph& g, std::span<const ArcId> arcs);

/// Maximal strongly connected components. Each component is sorted, and the
/// components are ordered by their smallest node.
std::vector<std::vector<NodeId>> strongly_connected_components(const WeightedDigraph& g);

struct Subgraph {
    WeightedDigraph graph;
    std::vector<ArcId> original_arc;    // subgraph arc id -> arc id in the parent
    std::vector<NodeId> original_node;  // subgraph node -> node in the parent
};

/// Restriction to the arcs `arcs` (taken in ascending id order) and their
/// endpoints. Node labels are copied from the parent.
Subgraph subgraph(const WeightedDigraph& g, std::span<const ArcId> arcs);

// --- text formats ---------------------------------------------------------

/// Parses the `p`/`a` graph format (see README). `c role: <node> <text>`
/// comments set node labels; all other comments are ignored.
/// Throws ParseError with the offending line number.
WeightedDigraph parse_graph(std::string_view text);

/// Inverse of parse_graph. `comments` are emitted first as `c <line>`, then
/// one `c role:` line per labelled node.
std::string serialize_graph(const WeightedDigraph& g, std::span<const std::string> comments = {});

/// Parses `e <arc_id> <rational>` lines; omitted arcs are zero.
ArcVector parse_arc_vector(std::string_view text, std::size_t dimension);
/// Writes the nonzero entries as `e` lines.
std::string serialize_arc_vector(const ArcVector& v);

}  // namespace negflow
