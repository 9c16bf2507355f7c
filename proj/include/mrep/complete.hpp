#pragma once

#include <vector>

#include "mrep/graph.hpp"

namespace mrep {

// Symmetric rational matrix with zero diagonal, the distance-matrix view used
// by the complete-graph algorithms. Entries may be zero, unlike WeightedGraph
// weights.
class SymMatrix {
public:
    explicit SymMatrix(int n) : n_(n), a_(static_cast<size_t>(n) * n, Rat(0)) {}

    int size() const { return n_; }
    const Rat& at(int i, int j) const { return a_[static_cast<size_t>(i) * n_ + j]; }
    void set(int i, int j, Rat v) {
        a_[static_cast<size_t>(i) * n_ + j] = v;
        a_[static_cast<size_t>(j) * n_ + i] = std::move(v);
    }

private:
    int n_;
    std::vector<Rat> a_;
};

struct IomrResult {
    SymMatrix repaired;
    int modified_entries;  // unordered pairs with a nonzero delta
};

// The fixed-iteration-order increase-only heuristic for complete graphs:
// sweeps k, then i, raising D[i][k] to max over j < i of D[i][j] - D[j][k],
// keeping the matrix symmetric. Never decreases an entry. Throws
// std::invalid_argument on a negative entry or nonzero diagonal.
IomrResult iomr_fixed(const SymMatrix& d);

// The adversarial family on which the heuristic repairs binom(n-1, 2) entries
// while the optimum uses at most n-2: row/column 0 holds 2^(s+1) at vertex s,
// every other off-diagonal entry is zero.
SymMatrix iomr_adversarial(int n);  // n >= 3

// Matrix -> complete graph; zero entries become epsilon (> 0). Used to hand
// adversarial matrices to solvers that require strictly positive weights.
WeightedGraph matrix_to_graph(const SymMatrix& d, const Rat& epsilon);

// Complete graph -> matrix. Throws when any vertex pair lacks an edge.
SymMatrix graph_to_matrix(const WeightedGraph& g);

// 5-cycle-cover approximation for complete graphs, General mode: greedily
// takes every edge of each uncovered broken cycle with at most 5 edges, then
// guarantees a chord of every 4-cycle lying fully inside that cover, and
// finishes through the verifier.
RepairPlan five_cycle_cover(const WeightedGraph& g);

}  // namespace mrep
