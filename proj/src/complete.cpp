#include "mrep/complete.hpp"

#include <algorithm>
#include <stdexcept>

#include "mrep/verifier.hpp"

namespace mrep {

namespace {

void validate_matrix(const SymMatrix& d) {
    for (int i = 0; i < d.size(); ++i) {
        if (d.at(i, i) != 0) throw std::invalid_argument("matrix diagonal must be zero");
        for (int j = 0; j < d.size(); ++j) {
            if (d.at(i, j) < 0) throw std::invalid_argument("matrix entries must be nonnegative");
        }
    }
}

void require_complete(const WeightedGraph& g) {
    for (int u = 0; u < g.vertex_count(); ++u) {
        for (int v = u + 1; v < g.vertex_count(); ++v) {
            if (!g.has_edge(u, v)) {
                throw std::invalid_argument("graph is not complete: missing edge (" +
                                            std::to_string(u) + "," + std::to_string(v) + ")");
            }
        }
    }
}

// Canonical cycles of a given length over vertex combinations, in increasing
// combination order then lexicographic vertex-sequence order. Complete-graph
// setting: every sequence is a cycle.
template <typename Fn>
void for_each_cycle(int n, int len, Fn&& fn) {
    std::vector<int> combo(len);
    auto combos = [&](auto&& self, int start, int depth) -> void {
        if (depth == len) {
            std::vector<int> rest(combo.begin() + 1, combo.end());
            do {
                if (rest.front() < rest.back()) {
                    std::vector<int> cycle{combo[0]};
                    cycle.insert(cycle.end(), rest.begin(), rest.end());
                    fn(cycle);
                }
            } while (std::next_permutation(rest.begin(), rest.end()));
            return;
        }
        for (int v = start; v < n; ++v) {
            combo[depth] = v;
            self(self, v + 1, depth + 1);
        }
    };
    combos(combos, 0, 0);
}

std::vector<VertexPair> cycle_edges(const std::vector<int>& verts) {
    std::vector<VertexPair> edges;
    edges.reserve(verts.size());
    for (size_t i = 0; i < verts.size(); ++i) {
        edges.push_back(make_pair_sorted(verts[i], verts[(i + 1) % verts.size()]));
    }
    return edges;
}

bool cycle_broken(const WeightedGraph& g, const std::vector<VertexPair>& edges) {
    Rat total = 0, heaviest = 0;
    for (const auto& [u, v] : edges) {
        const Rat& w = g.weight(u, v);
        total += w;
        heaviest = std::max(heaviest, w);
    }
    return heaviest > total - heaviest;
}

}  // namespace

IomrResult iomr_fixed(const SymMatrix& d) {
    validate_matrix(d);
    const int n = d.size();
    SymMatrix out = d;
    for (int k = 0; k < n; ++k) {
        for (int i = 0; i < n; ++i) {
            Rat best = out.at(i, k);
            for (int j = 0; j < i; ++j) {
                best = std::max(best, Rat(out.at(i, j) - out.at(j, k)));
            }
            if (best > out.at(i, k)) out.set(i, k, best);
        }
    }
    int modified = 0;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (out.at(i, j) != d.at(i, j)) ++modified;
        }
    }
    return IomrResult{std::move(out), modified};
}

SymMatrix iomr_adversarial(int n) {
    if (n < 3) throw std::invalid_argument("adversarial family needs n >= 3");
    SymMatrix d(n);
    for (int s = 1; s < n; ++s) {
        d.set(0, s, Rat(BigInt(1) << (s + 1)));
    }
    return d;
}

WeightedGraph matrix_to_graph(const SymMatrix& d, const Rat& epsilon) {
    validate_matrix(d);
    if (epsilon <= 0) throw std::invalid_argument("epsilon must be positive");
    WeightedGraph g(d.size());
    for (int i = 0; i < d.size(); ++i) {
        for (int j = i + 1; j < d.size(); ++j) {
            g.add_edge(i, j, d.at(i, j) == 0 ? epsilon : d.at(i, j));
        }
    }
    return g;
}

SymMatrix graph_to_matrix(const WeightedGraph& g) {
    require_complete(g);
    SymMatrix d(g.vertex_count());
    for (const auto& e : g.edges()) d.set(e.u, e.v, e.w);
    return d;
}

RepairPlan five_cycle_cover(const WeightedGraph& g) {
    require_complete(g);
    const int n = g.vertex_count();

    // Step 1: greedy cover of every broken cycle with <= 5 edges, taking all
    // edges of each cycle found uncovered.
    EdgeSet cover;
    for (int len = 3; len <= std::min(5, n); ++len) {
        for_each_cycle(n, len, [&](const std::vector<int>& verts) {
            auto edges = cycle_edges(verts);
            if (!cycle_broken(g, edges)) return;
            for (const auto& e : edges) {
                if (cover.count(e)) return;
            }
            cover.insert(edges.begin(), edges.end());
        });
    }

    // Step 2: chord4 - every 4-cycle lying fully inside the cover must have a
    // chord selected; take the lexicographically smaller one when neither is.
    EdgeSet chords;
    if (n >= 4) {
        for_each_cycle(n, 4, [&](const std::vector<int>& verts) {
            for (const auto& e : cycle_edges(verts)) {
                if (!cover.count(e)) return;
            }
            VertexPair c1 = make_pair_sorted(verts[0], verts[2]);
            VertexPair c2 = make_pair_sorted(verts[1], verts[3]);
            if (c2 < c1) std::swap(c1, c2);
            if (!cover.count(c1) && !cover.count(c2) && !chords.count(c1) && !chords.count(c2)) {
                chords.insert(c1);
            }
        });
    }

    EdgeSet support = cover;
    support.insert(chords.begin(), chords.end());
    auto plan = verify_support(g, support, RepairMode::General);
    if (!plan) throw std::logic_error("five_cycle_cover produced an invalid cover");
    return std::move(*plan);
}

}  // namespace mrep
