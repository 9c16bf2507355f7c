#include <algorithm>
#include <cmath>

#include "doctest.h"
#include "mrep/apsp.hpp"
#include "mrep/cycles.hpp"
#include "mrep/exact.hpp"
#include "mrep/fpt.hpp"
#include "mrep/generators.hpp"
#include "mrep/verifier.hpp"
#include "support/fixtures.hpp"

using namespace mrep;
using namespace mrep::testing;

namespace {

// Every optimal support, by exhausting all subsets of the optimal size.
std::vector<EdgeSet> all_optimal_supports(const WeightedGraph& g) {
    int opt = brute_force_repair(g, RepairMode::General).support_size();
    std::vector<EdgeSet> out;
    const int m = g.edge_count();
    for (int mask = 0; mask < (1 << m); ++mask) {
        if (__builtin_popcount(mask) != opt) continue;
        EdgeSet s;
        for (int i = 0; i < m; ++i) {
            if (mask & (1 << i)) s.insert(g.edge(i).pair());
        }
        auto plan = verify_support(g, s, RepairMode::General);
        if (plan && plan->support_size() == opt) out.push_back(s);
    }
    return out;
}

}  // namespace

TEST_CASE("fpt_solve on the broken triangle") {
    auto sol = fpt_solve(broken_triangle(), 3);
    REQUIRE(sol.has_value());
    CHECK(sol->chordality_checked);
    CHECK(sol->plan.support_size() == 1);
    CHECK(is_metric(sol->plan.repaired));
}

TEST_CASE("fpt_solve on the single-heavy-edge K_n") {
    for (int n : {4, 5, 6}) {
        auto g = gen_footnote_kn(n);
        auto sol = fpt_solve(g, 3);  // complete graphs are 3-chordal
        REQUIRE(sol.has_value());
        CHECK(sol->plan.support() == EdgeSet{{0, 1}});
    }
}

TEST_CASE("fpt_solve handles metric graphs and trees at k = 0") {
    auto sol = fpt_solve(metric_triangle(), 3);
    REQUIRE(sol.has_value());
    CHECK(sol->plan.support_size() == 0);

    auto tree = make_graph(4, {{0, 1, 5}, {1, 2, 1}, {1, 3, 7}});
    auto tsol = fpt_solve(tree, 3);
    REQUIRE(tsol.has_value());
    CHECK(tsol->plan.support_size() == 0);
}

TEST_CASE("fpt_solve rejects graphs that are not sigma-chordal") {
    auto c5 = make_graph(5, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {3, 4, 1}, {0, 4, 1}});
    CHECK_THROWS_AS((void)fpt_solve(c5, 4), NotSigmaChordal);
    CHECK(fpt_solve(c5, 5).has_value());
}

TEST_CASE("fpt_solve matches the brute-force optimum on chordal families") {
    int instances = 0;
    for (std::uint64_t seed = 100; instances < 30 && seed < 300; ++seed) {
        int sigma = 3 + static_cast<int>(seed % 2);
        auto g = gen_chordal(7, sigma, 9, seed);
        if (g.edge_count() > 14) continue;
        ++instances;
        auto sol = fpt_solve(g, sigma);
        REQUIRE(sol.has_value());
        auto exact = brute_force_repair(g, RepairMode::General);
        CHECK(sol->plan.support_size() == exact.support_size());
        CHECK(is_metric(sol->plan.repaired));
        CHECK(verify_support(g, sol->plan.support(), RepairMode::General).has_value());
    }
}

TEST_CASE("fpt wrapper returns nothing below the optimum") {
    for (std::uint64_t seed : {200u, 201u, 202u, 203u}) {
        auto g = gen_chordal(6, 3, 9, seed);
        int opt = brute_force_repair(g, RepairMode::General).support_size();
        if (opt == 0) continue;
        FptOptions opts;
        opts.k_max = opt - 1;
        CHECK(!fpt_solve(g, 3, opts).has_value());
        opts.k_max = opt;
        auto sol = fpt_solve(g, 3, opts);
        REQUIRE(sol.has_value());
        CHECK(sol->plan.support_size() == opt);
    }
}

TEST_CASE("collect_candidates on the triangle is the whole cycle") {
    auto p = collect_candidates(broken_triangle(), 3, {});
    CHECK(p == EdgeSet{{0, 1}, {0, 2}, {1, 2}});
}

TEST_CASE("collect_candidates with empty support stays within one chordless cycle") {
    for (std::uint64_t seed : {210u, 211u, 212u}) {
        auto g = gen_random(7, 12, 9, seed);
        if (is_metric(g)) continue;
        int sigma = g.vertex_count();
        auto p = collect_candidates(g, sigma, {});
        CHECK(!p.empty());
        CHECK(static_cast<int>(p.size()) <= sigma);
    }
}

TEST_CASE("collect_candidates always intersects every extendable optimal support") {
    int tried = 0;
    for (std::uint64_t seed = 300; tried < 8 && seed < 340; ++seed) {
        auto g = gen_chordal(6, 4, 9, seed);
        if (is_metric(g)) continue;
        ++tried;
        auto optima = all_optimal_supports(g);
        REQUIRE(!optima.empty());
        // Recursion-tree bound on the number of distinct optimal supports.
        double opt = static_cast<double>(optima.front().size());
        CHECK(static_cast<double>(optima.size()) <=
              std::pow(2.0 * 4 * std::pow(std::max(opt, 1.0), 4), std::max(opt, 1.0)));
        if (optima.size() > 12) optima.resize(12);
        for (const auto& full : optima) {
            std::vector<VertexPair> edges(full.begin(), full.end());
            const int k = static_cast<int>(edges.size());
            for (int mask = 0; mask < (1 << k) - 1; ++mask) {  // proper subsets
                EdgeSet partial;
                for (int i = 0; i < k; ++i) {
                    if (mask & (1 << i)) partial.insert(edges[i]);
                }
                auto pool = collect_candidates(g, 4, partial);
                bool hits = false;
                for (const auto& e : pool) {
                    if (full.count(e) && !partial.count(e)) hits = true;
                }
                CHECK(hits);
                // Branch-factor bound.
                double cap = 2.0 * 4 *
                             std::pow(std::max<size_t>(1, partial.size()), 4);
                CHECK(static_cast<double>(pool.size()) <= cap);
            }
        }
    }
    CHECK(tried == 8);
}
