#include "doctest.h"
#include "mrep/cycles.hpp"
#include "mrep/generators.hpp"
#include "mrep/io.hpp"

using namespace mrep;

TEST_CASE("gen_random is reproducible and validates parameters") {
    auto a = gen_random(8, 14, 10, 42);
    auto b = gen_random(8, 14, 10, 42);
    CHECK(emit_graph(a) == emit_graph(b));
    CHECK(a.edge_count() == 14);
    for (const auto& e : a.edges()) {
        CHECK(e.w >= 1);
        CHECK(e.w <= 10);
    }
    CHECK(emit_graph(gen_random(8, 14, 10, 43)) != emit_graph(a));

    CHECK_THROWS_AS(gen_random(4, 7, 10, 1), std::invalid_argument);
    CHECK_THROWS_AS(gen_random(4, -1, 10, 1), std::invalid_argument);
    CHECK_THROWS_AS(gen_random(4, 3, 0, 1), std::invalid_argument);
}

TEST_CASE("gen_chordal outputs are sigma-chordal") {
    for (int sigma : {3, 4, 5}) {
        for (std::uint64_t seed : {1u, 2u, 3u}) {
            auto g = gen_chordal(8, sigma, 9, seed);
            for (const auto& c : enumerate_chordless_cycles(g, 8)) {
                CHECK(c.length() <= sigma);
            }
            CHECK(emit_graph(g) == emit_graph(gen_chordal(8, sigma, 9, seed)));
        }
    }
    CHECK_THROWS_AS(gen_chordal(13, 3, 9, 1), std::invalid_argument);
}

TEST_CASE("gen_footnote_kn shape") {
    auto g = gen_footnote_kn(5);
    CHECK(g.edge_count() == 10);
    CHECK(g.weight(0, 1) == Rat(6));
    CHECK(g.weight(2, 4) == Rat(1));
    CHECK_THROWS_AS(gen_footnote_kn(2), std::invalid_argument);
}
