#pragma once

#include "mrep/graph.hpp"

namespace mrep {

// Exact O(n^3) solver for the decrease-only problem: every edge weight is
// reset to the shortest-path distance between its endpoints. The support is
// exactly the set of heavy edges; this is the unique minimum support and the
// plan is simultaneously minimal in every l_p norm, p in [1, inf).
RepairPlan decrease_repair(const WeightedGraph& g);

}  // namespace mrep
