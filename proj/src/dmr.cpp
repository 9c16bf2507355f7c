#include "mrep/dmr.hpp"

#include "mrep/apsp.hpp"

namespace mrep {

RepairPlan decrease_repair(const WeightedGraph& g) {
    DistanceOracle oracle = apsp(g);
    RepairPlan plan{RepairMode::Decrease, {}, WeightedGraph(g.vertex_count())};
    for (const auto& e : g.edges()) {
        const Rat& d = oracle.dist(e.u, e.v).value();
        if (d < e.w) plan.delta[e.pair()] = d - e.w;
        plan.repaired.add_edge(e.u, e.v, d);
    }
    return plan;
}

}  // namespace mrep
