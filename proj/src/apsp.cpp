#include "mrep/apsp.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

namespace mrep {

std::vector<VertexPair> DistanceOracle::path_edges(int u, int v) const {
    std::vector<VertexPair> edges;
    if (u == v || dist(u, v).is_infinite()) return edges;
    int cur = u;
    while (cur != v) {
        int nxt = next_[idx(cur, v)];
        assert(nxt >= 0);
        edges.push_back(make_pair_sorted(cur, nxt));
        cur = nxt;
    }
    return edges;
}

DistanceOracle apsp(const WeightedGraph& g) {
    const int n = g.vertex_count();
    DistanceOracle o;
    o.n_ = n;
    o.dist_.assign(static_cast<size_t>(n) * n, ExtRat::infinity());
    o.next_.assign(static_cast<size_t>(n) * n, -1);

    for (int v = 0; v < n; ++v) o.dist_[o.idx(v, v)] = ExtRat(Rat(0));
    for (const auto& e : g.edges()) {
        o.dist_[o.idx(e.u, e.v)] = ExtRat(e.w);
        o.dist_[o.idx(e.v, e.u)] = ExtRat(e.w);
        o.next_[o.idx(e.u, e.v)] = e.v;
        o.next_[o.idx(e.v, e.u)] = e.u;
    }

    for (int k = 0; k < n; ++k) {
        for (int i = 0; i < n; ++i) {
            const ExtRat& ik = o.dist_[o.idx(i, k)];
            if (ik.is_infinite()) continue;
            for (int j = 0; j < n; ++j) {
                ExtRat via = ik + o.dist_[o.idx(k, j)];
                if (via < o.dist_[o.idx(i, j)]) {
                    o.dist_[o.idx(i, j)] = std::move(via);
                    o.next_[o.idx(i, j)] = o.next_[o.idx(i, k)];
                }
            }
        }
    }
    return o;
}

PathCounts count_shortest_paths(const WeightedGraph& g, const DistanceOracle& oracle,
                                int target) {
    const int n = g.vertex_count();
    PathCounts pc;
    pc.target = target;
    pc.count.assign(n, BigInt(0));

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        const ExtRat& da = oracle.dist(a, target);
        const ExtRat& db = oracle.dist(b, target);
        if (da != db) return da < db;
        return a < b;
    });

    pc.count[target] = 1;
    for (int v : order) {
        if (v == target || oracle.dist(v, target).is_infinite()) continue;
        BigInt total = 0;
        // Neighbors strictly closer to the target that lie on a shortest path.
        for (int u : g.neighbors(v)) {
            if (ExtRat(g.weight(v, u)) + oracle.dist(u, target) == oracle.dist(v, target)) {
                total += pc.count[u];
            }
        }
        pc.count[v] = std::move(total);
    }
    return pc;
}

std::optional<BrokenWitness> find_broken_witness(const WeightedGraph& g,
                                                 const DistanceOracle& oracle) {
    for (const auto& e : g.edges()) {
        if (oracle.dist(e.u, e.v) < e.w) {
            return BrokenWitness{e.pair(), oracle.path_edges(e.u, e.v)};
        }
    }
    return std::nullopt;
}

bool is_metric(const WeightedGraph& g) {
    return !find_broken_witness(g, apsp(g)).has_value();
}

Rat graph_deficit(const WeightedGraph& g, const DistanceOracle& oracle) {
    Rat deficit = 0;
    for (const auto& e : g.edges()) {
        const ExtRat& d = oracle.dist(e.u, e.v);
        assert(!d.is_infinite());
        deficit = std::max(deficit, Rat(e.w - d.value()));
    }
    return deficit;
}

}  // namespace mrep
