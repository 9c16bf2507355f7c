#include "mrep/exact.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <optional>

#include "mrep/apsp.hpp"
#include "mrep/dmr.hpp"
#include "mrep/verifier.hpp"

namespace mrep {

namespace {

// Calls visit(subset) for every k-subset of {0..m-1} in lexicographic order
// until visit returns true; returns whether any call did.
bool for_each_subset(int m, int k, const std::function<bool(const std::vector<int>&)>& visit) {
    std::vector<int> pick(k);
    std::function<bool(int, int)> rec = [&](int start, int depth) {
        if (depth == k) return visit(pick);
        for (int i = start; i <= m - (k - depth); ++i) {
            pick[depth] = i;
            if (rec(i + 1, depth + 1)) return true;
        }
        return false;
    };
    return rec(0, 0);
}

// Hop distance by BFS with the edges in `removed` masked out; -1 if unreachable.
int bfs_hops(const WeightedGraph& g, const std::vector<bool>& removed, int from, int to) {
    std::vector<int> dist(g.vertex_count(), -1);
    std::deque<int> queue{from};
    dist[from] = 0;
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        if (v == to) return dist[v];
        for (int u : g.neighbors(v)) {
            if (removed[g.edge_index(v, u)] || dist[u] >= 0) continue;
            dist[u] = dist[v] + 1;
            queue.push_back(u);
        }
    }
    return -1;
}

EdgeSet minimum_cut(const WeightedGraph& g, int edge_cap,
                    const std::function<bool(const std::vector<bool>&)>& feasible) {
    const int m = g.edge_count();
    if (m > edge_cap) throw SubsetCapExceeded(m, edge_cap);
    for (int k = 0; k <= m; ++k) {
        std::optional<EdgeSet> found;
        for_each_subset(m, k, [&](const std::vector<int>& pick) {
            std::vector<bool> removed(m, false);
            for (int i : pick) removed[i] = true;
            if (!feasible(removed)) return false;
            EdgeSet cut;
            for (int i : pick) cut.insert(g.edge(i).pair());
            found = std::move(cut);
            return true;
        });
        if (found) return *found;
    }
    return {};  // unreachable: removing everything is always feasible
}

}  // namespace

RepairPlan brute_force_repair(const WeightedGraph& g, RepairMode mode, int edge_cap) {
    const int m = g.edge_count();
    if (m > edge_cap) throw SubsetCapExceeded(m, edge_cap);

    if (mode == RepairMode::Decrease) {
        // The decrease-only support is forced: exactly the heavy edges. The
        // subset search would stop at that set, so defer to the direct solver.
        return decrease_repair(g);
    }

    for (int k = 0; k <= m; ++k) {
        std::optional<RepairPlan> found;
        for_each_subset(m, k, [&](const std::vector<int>& pick) {
            EdgeSet support;
            for (int i : pick) support.insert(g.edge(i).pair());
            auto plan = verify_support(g, support, mode);
            if (!plan) return false;
            found = std::move(plan);
            return true;
        });
        if (found) return *found;
    }
    throw std::logic_error("no feasible support found, which cannot happen");
}

EdgeSet brute_multicut(const WeightedGraph& g, const std::vector<VertexPair>& pairs,
                       int edge_cap) {
    for (const auto& [s, t] : pairs) {
        if (s < 0 || s >= g.vertex_count() || t < 0 || t >= g.vertex_count() || s == t) {
            throw std::invalid_argument("invalid demand pair (" + std::to_string(s) + "," +
                                        std::to_string(t) + ")");
        }
    }
    return minimum_cut(g, edge_cap, [&](const std::vector<bool>& removed) {
        for (const auto& [s, t] : pairs) {
            if (bfs_hops(g, removed, s, t) >= 0) return false;
        }
        return true;
    });
}

EdgeSet brute_lbcut(const WeightedGraph& g, int s, int t, int max_len, int edge_cap) {
    if (s < 0 || s >= g.vertex_count() || t < 0 || t >= g.vertex_count() || s == t) {
        throw std::invalid_argument("invalid source/sink");
    }
    if (max_len < 0) throw std::invalid_argument("length bound must be nonnegative");
    return minimum_cut(g, edge_cap, [&](const std::vector<bool>& removed) {
        int hops = bfs_hops(g, removed, s, t);
        return hops < 0 || hops > max_len;
    });
}

}  // namespace mrep
