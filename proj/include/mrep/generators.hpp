#pragma once

#include <cstdint>

#include "mrep/graph.hpp"

namespace mrep {

// splitmix64. Instance generation must be reproducible across platforms, so
// no std distributions anywhere near it.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        state_ += 0x9e3779b97f4a7c15ull;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // Uniform-ish in [0, bound); modulo bias is irrelevant here, determinism
    // is what matters.
    std::uint64_t below(std::uint64_t bound) { return next() % bound; }

private:
    std::uint64_t state_;
};

// Random graph: m distinct edges chosen by a seeded partial shuffle of all
// vertex pairs, integer weights in 1..wmax.
WeightedGraph gen_random(int n, int m, int wmax, std::uint64_t seed);

// Random sigma-chordal graph: a random graph thinned by repeatedly deleting
// the smallest edge of the first too-long chordless cycle until none remain.
// Exponential check, so n is capped at 12.
WeightedGraph gen_chordal(int n, int sigma, int wmax, std::uint64_t seed);

// K_n with unit weights except w(0,1) = n+1; the single-heavy-edge instance
// whose optimal support has size 1.
WeightedGraph gen_footnote_kn(int n);

}  // namespace mrep
