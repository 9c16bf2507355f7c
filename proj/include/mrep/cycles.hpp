#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "mrep/graph.hpp"

namespace mrep {

// Simple cycle in canonical form: verts[0] is the smallest vertex and
// verts[1] < verts.back(), which fixes rotation and reflection.
struct Cycle {
    std::vector<int> verts;

    int length() const { return static_cast<int>(verts.size()); }
    std::vector<VertexPair> edges() const;
    bool contains_edge(const VertexPair& e) const;
};

// Every chordless cycle with at most `cap` edges (cap >= 3), canonical, in
// deterministic DFS order: paths are grown from their minimum vertex with
// ascending neighbor choice, pruning any extension that would chord the
// partial path.
std::vector<Cycle> enumerate_chordless_cycles(const WeightedGraph& g, int cap);

struct BrokenCycle {
    Cycle cycle;
    int heavy_index;  // position of the heavy edge within cycle.edges()
    Rat deficit;      // w(heavy) - sum of the other edge weights, > 0

    VertexPair heavy_edge() const { return cycle.edges()[heavy_index]; }
};

// Desk-scale diagnostics gathered while enumerating all broken cycles.
struct InstanceStats {
    Rat deficit_max;           // delta(G); zero iff metric
    int distinct_deficits = 0; // kappa
    int max_light_edges = 0;   // L
    std::int64_t broken_cycle_count = 0;
};

struct CycleBudgetExceeded : std::runtime_error {
    explicit CycleBudgetExceeded(std::int64_t budget)
        : std::runtime_error("graph too large for exact cycle enumeration (budget " +
                             std::to_string(budget) + " exceeded)") {}
};

struct BrokenCycleReport {
    std::vector<BrokenCycle> cycles;
    InstanceStats stats;
};

// Exhaustive enumeration of all broken simple cycles. The budget bounds total
// enumeration work (DFS path extensions), not just emitted cycles; throws
// CycleBudgetExceeded beyond it.
BrokenCycleReport enumerate_broken_cycles(const WeightedGraph& g, std::int64_t budget);

// Checks a broken cycle's defining inequality directly from g's weights.
bool broken_cycle_valid(const WeightedGraph& g, const BrokenCycle& bc);

// s intersects every broken cycle.
bool is_regular_cover(const std::vector<BrokenCycle>& broken, const EdgeSet& s);
// s contains a non-heavy edge of every broken cycle.
bool is_light_cover(const std::vector<BrokenCycle>& broken, const EdgeSet& s);

}  // namespace mrep
