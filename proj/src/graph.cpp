#include "mrep/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace mrep {

WeightedGraph::WeightedGraph(int n) : n_(n), adj_(std::max(n, 0)) {
    if (n < 0) throw std::invalid_argument("vertex count must be nonnegative");
    index_.assign(static_cast<size_t>(n_) * n_, -1);
}

void WeightedGraph::add_edge(int u, int v, Rat w) {
    if (u < 0 || u >= n_ || v < 0 || v >= n_) {
        throw std::invalid_argument("vertex out of range: (" + std::to_string(u) + "," +
                                    std::to_string(v) + ")");
    }
    if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    if (w <= 0) throw std::invalid_argument("nonpositive edge weight");
    auto [a, b] = make_pair_sorted(u, v);
    if (has_edge(a, b)) {
        throw std::invalid_argument("duplicate edge (" + std::to_string(a) + "," +
                                    std::to_string(b) + ")");
    }

    GraphEdge e{a, b, std::move(w)};
    auto pos = std::lower_bound(edges_.begin(), edges_.end(), e,
                                [](const GraphEdge& x, const GraphEdge& y) {
                                    return x.pair() < y.pair();
                                });
    edges_.insert(pos, std::move(e));

    // Edge indices are positional; rebuild the lookup after insertion.
    for (int i = 0; i < edge_count(); ++i) {
        index_[static_cast<size_t>(edges_[i].u) * n_ + edges_[i].v] = i;
        index_[static_cast<size_t>(edges_[i].v) * n_ + edges_[i].u] = i;
    }
    adj_[a].insert(std::lower_bound(adj_[a].begin(), adj_[a].end(), b), b);
    adj_[b].insert(std::lower_bound(adj_[b].begin(), adj_[b].end(), a), a);
}

int WeightedGraph::edge_index(int u, int v) const {
    if (u < 0 || u >= n_ || v < 0 || v >= n_ || u == v) return -1;
    return index_[static_cast<size_t>(u) * n_ + v];
}

const Rat& WeightedGraph::weight(int u, int v) const {
    int i = edge_index(u, v);
    if (i < 0) {
        throw std::out_of_range("no edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
    }
    return edges_[i].w;
}

Rat WeightedGraph::max_weight() const {
    Rat m = 0;
    for (const auto& e : edges_) m = std::max(m, e.w);
    return m;
}

EdgeSet WeightedGraph::edge_set() const {
    EdgeSet s;
    for (const auto& e : edges_) s.insert(e.pair());
    return s;
}

WeightedGraph remove_edges(const WeightedGraph& g, const EdgeSet& drop) {
    WeightedGraph out(g.vertex_count());
    for (const auto& e : g.edges()) {
        if (!drop.count(e.pair())) out.add_edge(e.u, e.v, e.w);
    }
    return out;
}

WeightedGraph replace_weights(const WeightedGraph& g,
                              const std::map<VertexPair, Rat>& new_weights) {
    WeightedGraph out(g.vertex_count());
    for (const auto& e : g.edges()) {
        auto it = new_weights.find(e.pair());
        out.add_edge(e.u, e.v, it == new_weights.end() ? e.w : it->second);
    }
    return out;
}

const char* repair_mode_name(RepairMode mode) {
    switch (mode) {
        case RepairMode::Decrease: return "decrease";
        case RepairMode::Increase: return "increase";
        case RepairMode::General: return "general";
    }
    return "?";
}

EdgeSet RepairPlan::support() const {
    EdgeSet s;
    for (const auto& [e, d] : delta) s.insert(e);
    return s;
}

}  // namespace mrep
