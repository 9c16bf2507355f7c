#pragma once

#include <map>
#include <string>
#include <vector>

#include "mrep/graph.hpp"

namespace mrep {

// Output of a constructive instance transformation, with enough provenance to
// invert the construction and to state how optima correspond.
struct ReductionArtifact {
    std::string kind;  // "inc2gen" | "multicut" | "lbcut"
    WeightedGraph output;
    std::string opt_relation;

    // inc2gen: heavy edges in lexicographic order; each gets edge_count()+1
    // gadget vertices appended after the original ones in (i, j) row-major
    // order. gadget_vertex maps a new vertex to (heavy index, replica index).
    std::vector<VertexPair> heavy_edges;
    std::map<int, std::pair<int, int>> gadget_vertex;
    Rat gadget_weight;  // Z = 1 + max original edge weight

    // multicut / lbcut
    std::vector<VertexPair> demand_pairs;
    int source = -1;
    int sink = -1;
    int length_bound = -1;

    // Demand edges deleted up front by the caller (CLI --force); each is a
    // forced cut edge and shifts the source optimum by one.
    std::vector<VertexPair> committed_edges;
};

// Increase-only to general: every heavy edge (s_i, t_i) grows |E|+1 pendant
// gadget vertices v_ij with w(s_i, v_ij) = Z and w(t_i, v_ij) = Z - w(s_i, t_i).
// The general optimum of the output equals the increase-only optimum of g.
ReductionArtifact increase_to_general(const WeightedGraph& g);

// MULTICUT instance (topology of g; weights ignored) to increase-only metric
// repair: original edges get weight 1, each demand pair becomes an edge of
// weight n. Demand pairs that are already edges are rejected; delete them
// first and count them as committed cut edges.
ReductionArtifact multicut_to_mr(const WeightedGraph& g, const std::vector<VertexPair>& pairs);

// L-bounded cut to increase-only metric repair: unit weights plus one (s, t)
// edge of weight L+1. Requires (s, t) not an edge of g.
ReductionArtifact lbcut_to_mr(const WeightedGraph& g, int s, int t, int length_bound);

}  // namespace mrep
