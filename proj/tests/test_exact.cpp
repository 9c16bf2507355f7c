#include "doctest.h"
#include "mrep/apsp.hpp"
#include "mrep/complete.hpp"
#include "mrep/dmr.hpp"
#include "mrep/exact.hpp"
#include "mrep/generators.hpp"
#include "support/fixtures.hpp"

using namespace mrep;
using namespace mrep::testing;

TEST_CASE("brute_force_repair on the broken triangle") {
    auto g = broken_triangle();

    auto general = brute_force_repair(g, RepairMode::General);
    CHECK(general.support_size() == 1);
    CHECK(is_metric(general.repaired));

    auto increase = brute_force_repair(g, RepairMode::Increase);
    CHECK(increase.support_size() == 1);
    bool light = increase.support() == EdgeSet{{0, 1}} || increase.support() == EdgeSet{{1, 2}};
    CHECK(light);  // the heavy edge alone is not a light cover

    auto decrease = brute_force_repair(g, RepairMode::Decrease);
    CHECK(decrease.support() == decrease_repair(g).support());
}

TEST_CASE("brute_force_repair is deterministic and minimal") {
    for (std::uint64_t seed : {70u, 71u, 72u}) {
        auto g = gen_random(6, 9, 9, seed);
        auto a = brute_force_repair(g, RepairMode::General);
        auto b = brute_force_repair(g, RepairMode::General);
        CHECK(a.support() == b.support());
        CHECK(a.support_size() <= brute_force_repair(g, RepairMode::Increase).support_size());
    }
}

TEST_CASE("brute_force_repair honors the edge cap") {
    auto g = gen_random(8, 14, 5, 99);
    CHECK_THROWS_AS(brute_force_repair(g, RepairMode::General, 10), SubsetCapExceeded);
}

TEST_CASE("adversarial n=4 instance has a small increase-only optimum") {
    auto g = matrix_to_graph(iomr_adversarial(4), Rat(1, 1024));
    auto plan = brute_force_repair(g, RepairMode::Increase);
    CHECK(plan.support_size() <= 2);  // n - 2
    CHECK(is_metric(plan.repaired));
}

TEST_CASE("brute_multicut on the fixtures") {
    auto path = make_graph(3, {{0, 1, 1}, {1, 2, 1}});
    auto cut = brute_multicut(path, {{0, 2}});
    CHECK(cut.size() == 1);

    // Two vertex-disjoint s-t paths of length 2 need two cuts.
    auto twin = make_graph(4, {{0, 1, 1}, {1, 3, 1}, {0, 2, 1}, {2, 3, 1}});
    CHECK(brute_multicut(twin, {{0, 3}}).size() == 2);

    // Already disconnected pairs cost nothing.
    WeightedGraph split(4);
    split.add_edge(0, 1, Rat(1));
    split.add_edge(2, 3, Rat(1));
    CHECK(brute_multicut(split, {{0, 2}, {1, 3}}).empty());

    CHECK_THROWS_AS(brute_multicut(path, {{1, 1}}), std::invalid_argument);
}

TEST_CASE("brute_lbcut on the fixtures") {
    auto twin = make_graph(4, {{0, 1, 1}, {1, 3, 1}, {0, 2, 1}, {2, 3, 1}});
    CHECK(brute_lbcut(twin, 0, 3, 2).size() == 2);
    CHECK(brute_lbcut(twin, 0, 3, 1).empty());  // no 1-edge path exists anyway
}

TEST_CASE("cut oracles validate by rechecking connectivity") {
    for (std::uint64_t seed : {80u, 81u, 82u, 83u}) {
        auto g = gen_random(7, 9, 1, seed);
        std::vector<VertexPair> pairs;
        if (!g.has_edge(0, 5)) pairs.push_back({0, 5});
        if (!g.has_edge(1, 6)) pairs.push_back({1, 6});
        if (pairs.empty()) continue;
        auto cut = brute_multicut(g, pairs);
        auto pruned = remove_edges(g, cut);
        auto oracle = apsp(pruned);
        for (auto [s, t] : pairs) CHECK(!oracle.reachable(s, t));
        // Minimality: every single-edge-smaller subset of the cut fails.
        for (const auto& e : cut) {
            EdgeSet smaller = cut;
            smaller.erase(e);
            auto o2 = apsp(remove_edges(g, smaller));
            bool all_cut = true;
            for (auto [s, t] : pairs) all_cut = all_cut && !o2.reachable(s, t);
            CHECK(!all_cut);
        }
    }
}
