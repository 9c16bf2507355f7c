#pragma once

#include <stdexcept>
#include <vector>

#include "mrep/graph.hpp"

namespace mrep {

struct SubsetCapExceeded : std::runtime_error {
    explicit SubsetCapExceeded(int edges, int cap)
        : std::runtime_error("instance has " + std::to_string(edges) +
                             " edges, above the exact-search cap of " + std::to_string(cap)) {}
};

// Reference optimum by subset search: supports of size k = 0, 1, ... are tried
// in lexicographic order and the first feasible one wins, so the result is
// deterministic and |support| = OPT. Decrease mode reduces to the heavy-edge
// set. Throws SubsetCapExceeded when the graph has more than `edge_cap` edges.
RepairPlan brute_force_repair(const WeightedGraph& g, RepairMode mode, int edge_cap = 16);

// Minimum-cardinality edge set disconnecting every demand pair. Weights of g
// are ignored; only the topology matters.
EdgeSet brute_multicut(const WeightedGraph& g, const std::vector<VertexPair>& pairs,
                       int edge_cap = 16);

// Minimum-cardinality edge set after whose removal no s-t path of at most
// max_len edges remains. Weights ignored.
EdgeSet brute_lbcut(const WeightedGraph& g, int s, int t, int max_len, int edge_cap = 16);

}  // namespace mrep
