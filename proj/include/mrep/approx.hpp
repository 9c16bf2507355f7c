#pragma once

#include "mrep/apsp.hpp"
#include "mrep/graph.hpp"

namespace mrep {

// Short Path Cover: repeatedly find an edge heavier than the shortest path
// between its endpoints and discard that path plus the edge (General) or the
// path alone (Increase) from the working graph; the discarded edges form the
// support. (L+1)- respectively L-approximation, L+1 = max broken cycle length.
RepairPlan spc(const WeightedGraph& g, RepairMode mode);

// Number of maximum-deficit broken cycles whose heavy edge is e = (s, t):
// #sp(s, t) when w(e) = d(s, t) + deficit, else zero. counts_t must target t.
BigInt count_heavy(const WeightedGraph& g, const DistanceOracle& oracle,
                   const PathCounts& counts_t, VertexPair e, const Rat& deficit);

// Number of maximum-deficit broken cycles containing e = (s, t) as a non-heavy
// edge: for each candidate heavy edge f = (a, b), the two traversal
// orientations contribute #sp(a,s) * #sp(t,b) and #sp(b,s) * #sp(t,a) when the
// corresponding shortest-path decomposition of w(f) matches exactly.
BigInt count_light(const WeightedGraph& g, const DistanceOracle& oracle,
                   const PathCounts& counts_s, const PathCounts& counts_t, VertexPair e,
                   const Rat& deficit);

// Greedy by deficit: while the working graph has a positive deficit, remove
// the edge on the most maximum-deficit cycles (heavy+light occurrences in
// General mode, light only in Increase mode; ties to the lexicographically
// smallest edge) and finish through the verifier. O(kappa log n)-approximate.
RepairPlan deficit_greedy(const WeightedGraph& g, RepairMode mode);

}  // namespace mrep
