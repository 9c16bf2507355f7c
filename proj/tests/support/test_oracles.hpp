#pragma once

// Independent brute-force reference implementations for tests. Everything here
// enumerates exhaustively and stays deliberately separate from the library's
// algorithmic code paths.

#include <vector>

#include "mrep/cycles.hpp"
#include "mrep/graph.hpp"
#include "mrep/rational.hpp"

namespace mrep::testing {

struct PathSearch {
    ExtRat dist;    // +inf when unreachable
    BigInt count;   // number of distinct minimum-weight simple paths
};

// DFS over all simple u-v paths.
PathSearch brute_shortest(const WeightedGraph& g, int u, int v);

// Every simple cycle, canonicalized and deduplicated through a set; unlike the
// library this walks from every start vertex and relies on canonicalization
// for uniqueness.
std::vector<Cycle> brute_all_cycles(const WeightedGraph& g);

// Chordless cycles with at most cap edges via the subset test: a vertex subset
// spans a chordless cycle iff its induced subgraph is exactly a cycle.
std::vector<Cycle> brute_chordless_cycles(const WeightedGraph& g, int cap);

// Broken cycles (heavy edge + deficit recomputed from raw weights) among the
// given cycles.
std::vector<BrokenCycle> broken_among(const WeightedGraph& g, const std::vector<Cycle>& cycles);

// Chain of k unit-weight diamonds joined corner to corner; the two endpoints
// have 2^k shortest paths between them.
struct DiamondChain {
    WeightedGraph graph;
    int source;
    int sink;
};
DiamondChain diamond_chain(int k);

}  // namespace mrep::testing
