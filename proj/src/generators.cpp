#include "mrep/generators.hpp"

#include <algorithm>
#include <stdexcept>

#include "mrep/cycles.hpp"

namespace mrep {

WeightedGraph gen_random(int n, int m, int wmax, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("need at least one vertex");
    const long long max_pairs = static_cast<long long>(n) * (n - 1) / 2;
    if (m < 0 || m > max_pairs) {
        throw std::invalid_argument("edge count must be in 0.." + std::to_string(max_pairs));
    }
    if (wmax < 1) throw std::invalid_argument("wmax must be at least 1");

    std::vector<VertexPair> pairs;
    pairs.reserve(max_pairs);
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) pairs.push_back({u, v});
    }

    Rng rng(seed);
    WeightedGraph g(n);
    for (int i = 0; i < m; ++i) {
        size_t j = i + rng.below(pairs.size() - i);
        std::swap(pairs[i], pairs[j]);
        g.add_edge(pairs[i].first, pairs[i].second, Rat(1 + rng.below(wmax)));
    }
    return g;
}

WeightedGraph gen_chordal(int n, int sigma, int wmax, std::uint64_t seed) {
    if (sigma < 3) throw std::invalid_argument("sigma must be at least 3");
    if (n > 12) throw std::invalid_argument("chordal generation is capped at n = 12");

    const long long max_pairs = static_cast<long long>(n) * (n - 1) / 2;
    int m = static_cast<int>(std::min<long long>(max_pairs, 2L * n));
    WeightedGraph g = gen_random(n, m, wmax, seed);

    while (true) {
        auto cycles = enumerate_chordless_cycles(g, std::max(3, n));
        const Cycle* offender = nullptr;
        for (const auto& c : cycles) {
            if (c.length() > sigma) {
                offender = &c;
                break;
            }
        }
        if (!offender) return g;
        auto edges = offender->edges();
        g = remove_edges(g, {*std::min_element(edges.begin(), edges.end())});
    }
}

WeightedGraph gen_footnote_kn(int n) {
    if (n < 3) throw std::invalid_argument("footnote family needs n >= 3");
    WeightedGraph g(n);
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            g.add_edge(u, v, u == 0 && v == 1 ? Rat(n + 1) : Rat(1));
        }
    }
    return g;
}

}  // namespace mrep
