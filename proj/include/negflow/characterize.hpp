#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "negflow/cycles.hpp"
#include "negflow/polyhedra.hpp"

namespace negflow {

/// (-1 / w(C)) * chi(C) for a negative cycle C.
ArcVector vertex_of_cycle(const WeightedDigraph& g, const Cycle& c);
/// (1 / |C|) * chi(C) for a zero-weight cycle C.
ArcVector direction_of_zero_cycle(const WeightedDigraph& g, const Cycle& c);
/// mu * chi(C1) + mu' * chi(C2).
ArcVector direction_of_two_cycle(const WeightedDigraph& g, const TwoCycle& tc);

/// Vertices of the negative-flow polyhedron, one per negative cycle.
VertexSet vertices_from_negative_cycles(const WeightedDigraph& g, std::size_t cycle_cap = kDefaultMaxCycles);
VertexSet vertices_from_cycles(const WeightedDigraph& g, const std::vector<Cycle>& cycles);

/// Normalized extreme directions: one per zero-weight cycle and one per
/// 2-cycle.
VertexSet directions_from_cycles(const WeightedDigraph& g, std::size_t cycle_cap = kDefaultMaxCycles);
VertexSet directions_from_cycles(const WeightedDigraph& g, const std::vector<Cycle>& cycles,
                                 const std::vector<TwoCycle>& two_cycles);

struct CycleCounts {
    std::size_t negative = 0;
    std::size_t zero = 0;
    std::size_t positive = 0;
    std::size_t two_cycles = 0;
    std::size_t vertices = 0;
    std::size_t directions = 0;
};

CycleCounts count_by_sign(const std::vector<Cycle>& cycles);

struct CharacterizationReport {
    bool vertices_match = false;
    bool directions_match = false;
    std::vector<ArcVector> vertices_missing_from_formula;
    std::vector<ArcVector> vertices_extra_in_formula;
    std::vector<ArcVector> directions_missing_from_formula;
    std::vector<ArcVector> directions_extra_in_formula;
    CycleCounts counts;
    bool polyhedron_empty = false;

    bool ok() const { return vertices_match && directions_match; }
    /// key: value lines; mismatch witnesses follow in `e` format.
    std::string to_text() const;
};

/// Compares the cycle-based vertex and direction sets with the brute-force
/// oracle, exactly.
CharacterizationReport verify_characterization(const WeightedDigraph& g, std::size_t cycle_cap = kDefaultMaxCycles,
                                       std::size_t oracle_cap = kDefaultMaxOracle);

}  // namespace negflow
