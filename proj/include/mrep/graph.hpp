#pragma once

#include <map>
#include <set>
#include <utility>
#include <vector>

#include "mrep/rational.hpp"

namespace mrep {

// Unordered vertex pair, stored with first < second.
using VertexPair = std::pair<int, int>;
using EdgeSet = std::set<VertexPair>;

inline VertexPair make_pair_sorted(int u, int v) {
    return u < v ? VertexPair{u, v} : VertexPair{v, u};
}

struct GraphEdge {
    int u;  // u < v
    int v;
    Rat w;

    VertexPair pair() const { return {u, v}; }
};

// Undirected graph on vertices 0..n-1 with strictly positive exact rational
// edge weights, keyed by unordered pair. No self-loops, no parallel edges.
class WeightedGraph {
public:
    explicit WeightedGraph(int n);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    // Throws std::invalid_argument on self-loop, duplicate, out-of-range
    // vertex, or nonpositive weight.
    void add_edge(int u, int v, Rat w);

    bool has_edge(int u, int v) const { return edge_index(u, v) >= 0; }
    // Index into edges(), or -1 when absent. Edges are sorted by (u, v).
    int edge_index(int u, int v) const;
    const Rat& weight(int u, int v) const;

    const std::vector<GraphEdge>& edges() const { return edges_; }
    const GraphEdge& edge(int index) const { return edges_[index]; }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }

    // Largest edge weight; zero for an edgeless graph.
    Rat max_weight() const;

    EdgeSet edge_set() const;

private:
    int n_;
    std::vector<GraphEdge> edges_;        // sorted by (u, v)
    std::vector<std::vector<int>> adj_;   // sorted neighbor lists
    std::vector<int> index_;              // n*n lookup, -1 when absent
};

// Copy of g without the given edges. Pairs not present in g are ignored.
WeightedGraph remove_edges(const WeightedGraph& g, const EdgeSet& drop);

// Copy of g with the weights of the given edges replaced.
WeightedGraph replace_weights(const WeightedGraph& g,
                              const std::map<VertexPair, Rat>& new_weights);

enum class RepairMode { Decrease, Increase, General };

const char* repair_mode_name(RepairMode mode);

// Output of every solver: per-edge weight deltas (the support is exactly the
// set of keys, all deltas nonzero) plus the fully repaired graph w + W.
struct RepairPlan {
    RepairMode mode;
    std::map<VertexPair, Rat> delta;
    WeightedGraph repaired;

    EdgeSet support() const;
    int support_size() const { return static_cast<int>(delta.size()); }
};

}  // namespace mrep
