#pragma once

#include <optional>
#include <vector>

#include "mrep/graph.hpp"

namespace mrep {

// Exact all-pairs shortest distances with one reconstructable shortest path
// per reachable pair. Built by Floyd-Warshall with updates on strict
// improvement only and intermediate vertices in increasing index, so the
// chosen path is deterministic.
class DistanceOracle {
public:
    int size() const { return n_; }
    const ExtRat& dist(int u, int v) const { return dist_[idx(u, v)]; }
    bool reachable(int u, int v) const { return !dist(u, v).is_infinite(); }

    // Edges of the stored shortest u-v path; empty when u == v or when the
    // pair is unreachable.
    std::vector<VertexPair> path_edges(int u, int v) const;

private:
    friend DistanceOracle apsp(const WeightedGraph& g);
    size_t idx(int u, int v) const { return static_cast<size_t>(u) * n_ + v; }

    int n_ = 0;
    std::vector<ExtRat> dist_;
    std::vector<int> next_;  // next vertex after u on the path u->v, -1 if none
};

DistanceOracle apsp(const WeightedGraph& g);

// Exact shortest-path multiplicities toward a fixed target vertex. Counts can
// be exponential in n, hence arbitrary precision.
struct PathCounts {
    int target = -1;
    std::vector<BigInt> count;  // count[v] = #sp(v, target); 0 iff unreachable
};

// Single pass over vertices in increasing d(., target) order; O(m + n) given
// the oracle.
PathCounts count_shortest_paths(const WeightedGraph& g, const DistanceOracle& oracle,
                                int target);

struct BrokenWitness {
    VertexPair edge;                 // w(edge) > d(endpoints)
    std::vector<VertexPair> path;    // shortest path between the endpoints
};

// First edge in lexicographic order whose weight exceeds the shortest-path
// distance between its endpoints, together with that path (the two form a
// broken cycle). Empty iff g satisfies a metric.
std::optional<BrokenWitness> find_broken_witness(const WeightedGraph& g,
                                                 const DistanceOracle& oracle);

bool is_metric(const WeightedGraph& g);

// delta(G) = max over edges of w(e) - d(endpoints); zero iff metric.
Rat graph_deficit(const WeightedGraph& g, const DistanceOracle& oracle);

}  // namespace mrep
