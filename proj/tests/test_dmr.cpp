#include <algorithm>
#include <map>

#include "doctest.h"
#include "mrep/apsp.hpp"
#include "mrep/dmr.hpp"
#include "mrep/generators.hpp"
#include "support/fixtures.hpp"

using namespace mrep;
using namespace mrep::testing;

TEST_CASE("decrease_repair on the fixtures") {
    auto plan = decrease_repair(broken_triangle());
    CHECK(plan.mode == RepairMode::Decrease);
    CHECK(plan.support() == EdgeSet{{0, 2}});
    CHECK(plan.delta.at({0, 2}) == Rat(-1));
    CHECK(is_metric(plan.repaired));

    CHECK(decrease_repair(metric_triangle()).support().empty());
}

TEST_CASE("decrease_repair on the single-heavy-edge K_n") {
    for (int n : {4, 6, 8}) {
        auto g = gen_footnote_kn(n);
        auto plan = decrease_repair(g);
        CHECK(plan.support() == EdgeSet{{0, 1}});
        CHECK(plan.delta.at({0, 1}) == Rat(-(n - 1)));  // n+1 down to d(0,1)=2
        CHECK(plan.repaired.weight(0, 1) == Rat(2));
        CHECK(is_metric(plan.repaired));
    }
}

TEST_CASE("every feasible decrease-only support contains the heavy edges") {
    // Independent characterization: setting the edges of s to their original
    // shortest-path distances is a decrease-only solution with support within
    // s iff one exists at all. Exhausting all subsets shows the minimum
    // support is unique and equals decrease_repair's.
    for (std::uint64_t seed : {55u, 56u, 57u}) {
        auto g = gen_random(6, 9, 9, seed);
        auto oracle = apsp(g);
        EdgeSet heavy = decrease_repair(g).support();
        const int m = g.edge_count();
        for (int mask = 0; mask < (1 << m); ++mask) {
            EdgeSet s;
            std::map<VertexPair, Rat> candidate;
            for (int i = 0; i < m; ++i) {
                if (!(mask & (1 << i))) continue;
                const auto& e = g.edge(i);
                s.insert(e.pair());
                candidate[e.pair()] = oracle.dist(e.u, e.v).value();
            }
            bool feasible = is_metric(replace_weights(g, candidate));
            bool covers_heavy = std::includes(s.begin(), s.end(), heavy.begin(), heavy.end());
            CHECK(feasible == covers_heavy);
            if (feasible && s.size() == heavy.size()) CHECK(s == heavy);
        }
    }
}

TEST_CASE("decrease_repair support is exactly the heavy edges, deltas exact") {
    for (std::uint64_t seed = 60; seed < 70; ++seed) {
        auto g = gen_random(7, 13, 9, seed);
        auto oracle = apsp(g);
        auto plan = decrease_repair(g);
        EdgeSet heavy;
        for (const auto& e : g.edges()) {
            if (oracle.dist(e.u, e.v) < e.w) heavy.insert(e.pair());
        }
        CHECK(plan.support() == heavy);
        for (const auto& [e, d] : plan.delta) {
            CHECK(d < 0);
            CHECK(Rat(g.weight(e.first, e.second) + d) == oracle.dist(e.first, e.second).value());
        }
        CHECK(is_metric(plan.repaired));
    }
}
