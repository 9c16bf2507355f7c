#include <algorithm>

#include "doctest.h"
#include "mrep/apsp.hpp"
#include "mrep/cycles.hpp"
#include "mrep/exact.hpp"
#include "mrep/generators.hpp"
#include "mrep/io.hpp"
#include "mrep/reductions.hpp"
#include "support/fixtures.hpp"

using namespace mrep;
using namespace mrep::testing;

TEST_CASE("increase_to_general gadget arithmetic on the broken triangle") {
    auto g = broken_triangle();
    auto art = increase_to_general(g);
    CHECK(art.heavy_edges == std::vector<VertexPair>{{0, 2}});
    CHECK(art.gadget_weight == Rat(4));  // Z = 1 + max weight
    CHECK(art.output.vertex_count() == 3 + 4);  // |E|+1 replicas
    for (int vid = 3; vid < 7; ++vid) {
        CHECK(art.output.weight(0, vid) == Rat(4));
        CHECK(art.output.weight(2, vid) == Rat(1));  // Z - w(0,2)
        CHECK(art.gadget_vertex.at(vid).first == 0);
    }
}

TEST_CASE("increase_to_general is the identity on metric graphs") {
    auto g = metric_triangle();
    auto art = increase_to_general(g);
    CHECK(art.heavy_edges.empty());
    CHECK(emit_graph(art.output) == emit_graph(g));
}

TEST_CASE("increase_to_general preserves the optimum") {
    int used = 0;
    for (std::uint64_t seed = 700; used < 5 && seed < 750; ++seed) {
        auto g = gen_random(5, 6, 7, seed);
        int opt_inc = brute_force_repair(g, RepairMode::Increase).support_size();
        if (opt_inc > 2) continue;  // keep the reduced search tractable
        ++used;
        auto art = increase_to_general(g);
        auto plan = brute_force_repair(art.output, RepairMode::General, 200);
        CHECK(plan.support_size() == opt_inc);
    }
    CHECK(used == 5);
}

TEST_CASE("broken cycles of the reduced graph correspond to source cycles") {
    for (std::uint64_t seed : {802u, 815u, 821u}) {  // 2, 3 and 1 heavy edges
        auto g = gen_random(5, 7, 7, seed);
        auto art = increase_to_general(g);
        REQUIRE(!art.heavy_edges.empty());
        auto source = enumerate_broken_cycles(g, 100000);
        auto reduced = enumerate_broken_cycles(art.output, 2000000);

        auto source_keys = [&] {
            std::vector<std::vector<int>> keys;
            for (const auto& bc : source.cycles) keys.push_back(bc.cycle.verts);
            std::sort(keys.begin(), keys.end());
            return keys;
        }();

        for (const auto& bc : reduced.cycles) {
            std::vector<int> gadgets;
            for (int v : bc.cycle.verts) {
                if (v >= g.vertex_count()) gadgets.push_back(v);
            }
            if (gadgets.empty()) {
                CHECK(std::binary_search(source_keys.begin(), source_keys.end(),
                                         bc.cycle.verts));
                continue;
            }
            // Exactly one gadget vertex, heavy on its Z-edge, and substituting
            // the pair back yields a broken source cycle.
            REQUIRE(gadgets.size() == 1);
            auto [i, j] = art.gadget_vertex.at(gadgets[0]);
            auto [s, t] = art.heavy_edges[i];
            CHECK(bc.heavy_edge() == make_pair_sorted(s, gadgets[0]));
            std::vector<int> substituted;
            for (int v : bc.cycle.verts) {
                if (v != gadgets[0]) substituted.push_back(v);
            }
            CHECK(std::count(substituted.begin(), substituted.end(), s) == 1);
            CHECK(std::count(substituted.begin(), substituted.end(), t) == 1);
        }
        // Each source broken cycle appears |E|+2 times in the reduced graph.
        CHECK(reduced.cycles.size() ==
              source.cycles.size() * (g.edge_count() + 2));
    }
}

TEST_CASE("multicut reduction on the fixtures") {
    auto path = make_graph(3, {{0, 1, 1}, {1, 2, 1}});
    auto art = multicut_to_mr(path, {{0, 2}});
    CHECK(art.output.weight(0, 2) == Rat(3));  // n = |V|
    CHECK(art.output.weight(0, 1) == Rat(1));
    CHECK(brute_force_repair(art.output, RepairMode::Increase).support_size() == 1);

    WeightedGraph split(4);
    split.add_edge(0, 1, Rat(1));
    split.add_edge(2, 3, Rat(1));
    auto disconnected = multicut_to_mr(split, {{0, 2}});
    CHECK(is_metric(disconnected.output));
    CHECK(brute_force_repair(disconnected.output, RepairMode::Increase).support_size() == 0);

    CHECK_THROWS_AS(multicut_to_mr(path, {{0, 1}}), std::invalid_argument);
}

TEST_CASE("lbcut reduction on the fixtures") {
    auto path = make_graph(4, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}});

    auto art3 = lbcut_to_mr(path, 0, 3, 3);
    CHECK(art3.output.weight(0, 3) == Rat(4));
    CHECK(!is_metric(art3.output));  // the 3-edge path undercuts weight 4
    CHECK(brute_force_repair(art3.output, RepairMode::Increase).support_size() == 1);

    // Strictness: a path of length exactly L+1... here weight 3 = path length,
    // the cycle is tight, not broken.
    auto art2 = lbcut_to_mr(path, 0, 3, 2);
    CHECK(is_metric(art2.output));
    CHECK(brute_force_repair(art2.output, RepairMode::Increase).support_size() == 0);

    auto edge = make_graph(2, {{0, 1, 1}});
    CHECK_THROWS_AS(lbcut_to_mr(edge, 0, 1, 2), std::invalid_argument);
}

TEST_CASE("witnesses on multicut-reduced instances are the weight-n demand edges") {
    for (std::uint64_t seed = 920; seed < 926; ++seed) {
        auto g = gen_random(6, 8, 1, seed);
        std::vector<VertexPair> pairs;
        if (!g.has_edge(0, 5)) pairs.push_back({0, 5});
        if (!g.has_edge(1, 4)) pairs.push_back({1, 4});
        if (pairs.empty()) continue;
        auto art = multicut_to_mr(g, pairs);
        auto witness = find_broken_witness(art.output, apsp(art.output));
        if (!witness) continue;  // all pairs already disconnected
        CHECK(art.output.weight(witness->edge.first, witness->edge.second) ==
              Rat(g.vertex_count()));
    }
}

TEST_CASE("multicut round-trips against the exact cut oracle") {
    for (std::uint64_t seed = 900; seed < 910; ++seed) {
        auto g = gen_random(7, 9, 1, seed);
        std::vector<VertexPair> pairs;
        for (VertexPair cand : {VertexPair{0, 6}, VertexPair{1, 5}}) {
            if (!g.has_edge(cand.first, cand.second)) pairs.push_back(cand);
        }
        if (pairs.empty()) continue;
        auto art = multicut_to_mr(g, pairs);
        CHECK(brute_force_repair(art.output, RepairMode::Increase, 20).support_size() ==
              static_cast<int>(brute_multicut(g, pairs).size()));
    }
}

TEST_CASE("lbcut round-trips against the exact cut oracle") {
    for (std::uint64_t seed = 950; seed < 960; ++seed) {
        auto g = gen_random(7, 10, 1, seed);
        if (g.has_edge(0, 6)) continue;
        for (int bound : {2, 3, 4}) {
            auto art = lbcut_to_mr(g, 0, 6, bound);
            CHECK(brute_force_repair(art.output, RepairMode::Increase, 20).support_size() ==
                  static_cast<int>(brute_lbcut(g, 0, 6, bound).size()));
        }
    }
}

TEST_CASE("reductions are deterministic") {
    auto g = gen_random(6, 8, 5, 77);
    CHECK(emit_graph(increase_to_general(g).output) == emit_graph(increase_to_general(g).output));
}
