#include "mrep/approx.hpp"

#include <optional>
#include <stdexcept>

#include "mrep/verifier.hpp"

namespace mrep {

namespace {

void require_cover_mode(RepairMode mode, const char* who) {
    if (mode == RepairMode::Decrease) {
        throw std::invalid_argument(std::string(who) + " handles General and Increase modes only");
    }
}

}  // namespace

RepairPlan spc(const WeightedGraph& g, RepairMode mode) {
    require_cover_mode(mode, "spc");

    WeightedGraph working = g;
    EdgeSet removed;
    while (true) {
        DistanceOracle oracle = apsp(working);
        auto witness = find_broken_witness(working, oracle);
        if (!witness) break;
        EdgeSet drop(witness->path.begin(), witness->path.end());
        if (mode == RepairMode::General) drop.insert(witness->edge);
        removed.insert(drop.begin(), drop.end());
        working = remove_edges(working, drop);
    }

    auto plan = verify_support(g, removed, mode);
    if (!plan) throw std::logic_error("spc produced an invalid cover");
    return std::move(*plan);
}

BigInt count_heavy(const WeightedGraph& g, const DistanceOracle& oracle,
                   const PathCounts& counts_t, VertexPair e, const Rat& deficit) {
    auto [s, t] = e;
    if (oracle.dist(s, t) + ExtRat(deficit) == Rat(g.weight(s, t))) {
        return counts_t.count[s];
    }
    return 0;
}

BigInt count_light(const WeightedGraph& g, const DistanceOracle& oracle,
                   const PathCounts& counts_s, const PathCounts& counts_t, VertexPair e,
                   const Rat& deficit) {
    auto [s, t] = e;
    const ExtRat we_plus_deficit = ExtRat(g.weight(s, t) + deficit);
    BigInt total = 0;
    for (const auto& f : g.edges()) {
        int a = f.u, b = f.v;
        // Orientation a .. s, e, t .. b.
        if (oracle.dist(a, s) + we_plus_deficit + oracle.dist(t, b) == Rat(f.w)) {
            total += counts_s.count[a] * counts_t.count[b];
        }
        // Orientation b .. s, e, t .. a.
        if (oracle.dist(b, s) + we_plus_deficit + oracle.dist(t, a) == Rat(f.w)) {
            total += counts_s.count[b] * counts_t.count[a];
        }
    }
    return total;
}

RepairPlan deficit_greedy(const WeightedGraph& g, RepairMode mode) {
    require_cover_mode(mode, "deficit_greedy");

    WeightedGraph working = g;
    EdgeSet support;
    std::optional<Rat> previous_deficit;
    for (int round = 0; round <= g.edge_count(); ++round) {
        DistanceOracle oracle = apsp(working);
        Rat deficit = graph_deficit(working, oracle);
        if (previous_deficit && deficit > *previous_deficit) {
            throw std::logic_error("graph deficit increased across iterations");
        }
        previous_deficit = deficit;

        if (deficit == 0) {
            auto plan = verify_support(g, support, mode);
            if (!plan) throw std::logic_error("deficit_greedy produced an invalid cover");
            return std::move(*plan);
        }

        std::vector<PathCounts> counts;
        counts.reserve(working.vertex_count());
        for (int v = 0; v < working.vertex_count(); ++v) {
            counts.push_back(count_shortest_paths(working, oracle, v));
        }

        std::optional<VertexPair> pick;
        BigInt pick_count = 0;
        for (const auto& f : working.edges()) {
            BigInt c = count_light(working, oracle, counts[f.u], counts[f.v], f.pair(), deficit);
            if (mode == RepairMode::General) {
                c += count_heavy(working, oracle, counts[f.v], f.pair(), deficit);
            }
            if (!pick || c > pick_count) {  // ties keep the lexicographically first edge
                pick = f.pair();
                pick_count = std::move(c);
            }
        }
        if (!pick || pick_count == 0) {
            throw std::logic_error("positive deficit but no countable edge");
        }
        support.insert(*pick);
        working = remove_edges(working, {*pick});
    }
    throw std::logic_error("deficit_greedy failed to terminate within m rounds");
}

}  // namespace mrep
