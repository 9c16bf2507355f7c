#include "mrep/verifier.hpp"

#include <cassert>

#include "mrep/apsp.hpp"

namespace mrep {

std::optional<RepairPlan> verify_support(const WeightedGraph& g, const EdgeSet& support,
                                         RepairMode mode) {
    if (mode == RepairMode::Decrease) {
        throw std::invalid_argument("verify_support handles General and Increase modes only");
    }
    for (const auto& [u, v] : support) {
        if (!g.has_edge(u, v)) {
            throw std::invalid_argument("support edge (" + std::to_string(u) + "," +
                                        std::to_string(v) + ") is not an edge of the graph");
        }
    }

    const Rat m = g.max_weight();
    WeightedGraph hat(g.vertex_count());
    for (const auto& e : g.edges()) {
        hat.add_edge(e.u, e.v, support.count(e.pair()) ? m : e.w);
    }
    DistanceOracle oracle = apsp(hat);

    RepairPlan plan{mode, {}, WeightedGraph(g.vertex_count())};
    for (const auto& e : g.edges()) {
        const ExtRat& d = oracle.dist(e.u, e.v);
        assert(!d.is_infinite());       // hat keeps every edge, so never +inf
        assert(!(d.value() > m));       // capped by the weight-M edge itself
        const Rat& repaired = d.value();
        if (repaired != e.w) {
            if (!support.count(e.pair())) return std::nullopt;
            if (mode == RepairMode::Increase && repaired < e.w) return std::nullopt;
            plan.delta[e.pair()] = repaired - e.w;
        }
        plan.repaired.add_edge(e.u, e.v, repaired);
    }
    return plan;
}

}  // namespace mrep
