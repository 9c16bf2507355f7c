#pragma once

#include <optional>
#include <stdexcept>

#include "mrep/graph.hpp"

namespace mrep {

struct NotSigmaChordal : std::invalid_argument {
    NotSigmaChordal(int sigma, int cycle_len)
        : std::invalid_argument("graph has a chordless " + std::to_string(cycle_len) +
                                "-cycle, so it is not " + std::to_string(sigma) + "-chordal") {}
};

struct FptOptions {
    std::optional<int> k_max;
    // The chordality precondition is verified by full chordless-cycle
    // enumeration when n is at most this; larger graphs are trusted and
    // flagged. A wrong sigma can cost optimality, never metric validity.
    int chordality_check_max_n = 12;
};

struct FptSolution {
    RepairPlan plan;
    bool chordality_checked;
};

// Exact general-mode solver for sigma-chordal graphs, parameterized by the
// optimum support size: iterates k = 0, 1, ... and branches on candidate
// edges until the verifier accepts. Deterministic: candidate edges are tried
// in lexicographic order and visited supports are memoized per k. Empty only
// when k_max is given and OPT exceeds it.
std::optional<FptSolution> fpt_solve(const WeightedGraph& g, int sigma,
                                     const FptOptions& opts = {});

// One branching step: the candidate pool P for a partial support. Either the
// edges of the first broken chordless cycle disjoint from `current`, or the
// union over subsets s of `current` (|s| <= sigma-1) of the extremal cycle
// pair meeting `current` exactly at s. Exposed for testing.
EdgeSet collect_candidates(const WeightedGraph& g, int sigma, const EdgeSet& current);

}  // namespace mrep
