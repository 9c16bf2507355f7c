#pragma once

#include <optional>

#include "mrep/graph.hpp"

namespace mrep {

// Decides in O(n^3) whether some valid solution has its changes confined to
// `support`, returning one if so. Builds the auxiliary graph with every
// support edge raised to M = max edge weight of g, then resets each edge to
// the shortest-path distance between its endpoints there. Succeeds iff only
// support edges changed (General), or changed and strictly increased
// (Increase). The returned plan records only the edges that actually changed.
//
// Empty result means the support is not a regular cover (General) / not a
// light cover (Increase). Throws std::invalid_argument when support contains
// a non-edge, or for Decrease mode.
std::optional<RepairPlan> verify_support(const WeightedGraph& g, const EdgeSet& support,
                                         RepairMode mode);

}  // namespace mrep
