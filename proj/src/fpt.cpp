#include "mrep/fpt.hpp"

#include <algorithm>
#include <set>

#include "mrep/apsp.hpp"
#include "mrep/cycles.hpp"
#include "mrep/verifier.hpp"

namespace mrep {

namespace {

struct CycleInfo {
    std::vector<VertexPair> edges;  // sorted
    Rat total;                      // sum of edge weights
    Rat max_edge_weight;
    bool broken;
};

std::vector<CycleInfo> prepare_cycles(const WeightedGraph& g, const std::vector<Cycle>& cycles) {
    std::vector<CycleInfo> infos;
    infos.reserve(cycles.size());
    for (const auto& c : cycles) {
        CycleInfo info;
        info.edges = c.edges();
        std::sort(info.edges.begin(), info.edges.end());
        info.total = 0;
        info.max_edge_weight = 0;
        for (const auto& [u, v] : info.edges) {
            const Rat& w = g.weight(u, v);
            info.total += w;
            info.max_edge_weight = std::max(info.max_edge_weight, w);
        }
        // Broken iff the heaviest edge outweighs the rest of the cycle.
        info.broken = info.max_edge_weight > info.total - info.max_edge_weight;
        infos.push_back(std::move(info));
    }
    return infos;
}

std::vector<VertexPair> intersect_sorted(const std::vector<VertexPair>& a,
                                         const std::vector<VertexPair>& b) {
    std::vector<VertexPair> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

class CandidateCollector {
public:
    CandidateCollector(const WeightedGraph& g, int sigma, const std::vector<CycleInfo>& cycles)
        : g_(g), sigma_(sigma), cycles_(cycles) {}

    EdgeSet collect(const std::vector<VertexPair>& support) const {
        // Branch 1: a broken chordless cycle untouched by the support.
        for (const auto& c : cycles_) {
            if (c.broken && intersect_sorted(c.edges, support).empty()) {
                return EdgeSet(c.edges.begin(), c.edges.end());
            }
        }

        // Branch 2: for every small subset s of the support, the cheapest and
        // the most-overweight chordless cycles meeting the support exactly at s.
        EdgeSet pool;
        std::vector<VertexPair> subset;
        enumerate_subsets(support, 0, subset, pool);
        return pool;
    }

private:
    void enumerate_subsets(const std::vector<VertexPair>& support, size_t start,
                           std::vector<VertexPair>& subset, EdgeSet& pool) const {
        consider_subset(support, subset, pool);
        if (static_cast<int>(subset.size()) >= sigma_ - 1) return;
        for (size_t i = start; i < support.size(); ++i) {
            subset.push_back(support[i]);
            enumerate_subsets(support, i + 1, subset, pool);
            subset.pop_back();
        }
    }

    void consider_subset(const std::vector<VertexPair>& support,
                         const std::vector<VertexPair>& subset, EdgeSet& pool) const {
        Rat subset_weight = 0;
        for (const auto& [u, v] : subset) subset_weight += g_.weight(u, v);

        const CycleInfo* cheapest = nullptr;       // min sum of weights outside s
        Rat cheapest_rest;
        const CycleInfo* most_overweight = nullptr;  // max w(h) - rest, h in C \ s
        Rat best_margin;

        for (const auto& c : cycles_) {
            if (intersect_sorted(c.edges, support) != subset) continue;
            Rat rest = c.total - subset_weight;  // weight of C \ s
            if (!cheapest || rest < cheapest_rest) {
                cheapest = &c;
                cheapest_rest = rest;
            }
            // Heaviest edge outside s; skip cycles fully inside the support.
            Rat h = heaviest_outside(c, subset);
            if (h < 0) continue;
            Rat margin = h - (rest - h);
            if (!most_overweight || margin > best_margin) {
                most_overweight = &c;
                best_margin = margin;
            }
        }

        for (const CycleInfo* c : {cheapest, most_overweight}) {
            if (!c) continue;
            for (const auto& e : c->edges) {
                if (!std::binary_search(support.begin(), support.end(), e)) pool.insert(e);
            }
        }
    }

    // Max weight over C \ s, or -1 when the cycle lies inside the support.
    Rat heaviest_outside(const CycleInfo& c, const std::vector<VertexPair>& subset) const {
        Rat best = -1;
        for (const auto& e : c.edges) {
            if (std::binary_search(subset.begin(), subset.end(), e)) continue;
            best = std::max(best, g_.weight(e.first, e.second));
        }
        return best;
    }

    const WeightedGraph& g_;
    int sigma_;
    const std::vector<CycleInfo>& cycles_;
};

}  // namespace

EdgeSet collect_candidates(const WeightedGraph& g, int sigma, const EdgeSet& current) {
    if (verify_support(g, current, RepairMode::General)) {
        throw std::logic_error("collect_candidates called on a support that already works");
    }
    auto cycles = prepare_cycles(g, enumerate_chordless_cycles(g, sigma));
    std::vector<VertexPair> support(current.begin(), current.end());
    return CandidateCollector(g, sigma, cycles).collect(support);
}

std::optional<FptSolution> fpt_solve(const WeightedGraph& g, int sigma, const FptOptions& opts) {
    if (sigma < 3) throw std::invalid_argument("sigma must be at least 3");

    bool checked = false;
    std::vector<Cycle> chordless;
    if (g.vertex_count() <= opts.chordality_check_max_n) {
        chordless = enumerate_chordless_cycles(g, std::max(3, g.vertex_count()));
        for (const auto& c : chordless) {
            if (c.length() > sigma) throw NotSigmaChordal(sigma, c.length());
        }
        checked = true;
    } else {
        chordless = enumerate_chordless_cycles(g, sigma);
    }
    auto cycles = prepare_cycles(g, chordless);
    CandidateCollector collector(g, sigma, cycles);

    const int k_cap = opts.k_max ? *opts.k_max : g.edge_count();
    for (int k = 0; k <= k_cap; ++k) {
        std::set<std::vector<VertexPair>> visited;
        std::vector<VertexPair> support;

        std::optional<RepairPlan> plan;
        // Depth-first branching; first success in lexicographic order wins.
        auto search = [&](auto&& self) -> bool {
            if (!visited.insert(support).second) return false;
            if (static_cast<int>(support.size()) == k) {
                plan = verify_support(g, EdgeSet(support.begin(), support.end()),
                                      RepairMode::General);
                return plan.has_value();
            }
            EdgeSet pool = collector.collect(support);
            for (const auto& e : pool) {
                auto pos = std::lower_bound(support.begin(), support.end(), e);
                support.insert(pos, e);
                bool done = self(self);
                support.erase(std::find(support.begin(), support.end(), e));
                if (done) return true;
            }
            return false;
        };
        if (search(search)) return FptSolution{std::move(*plan), checked};
    }
    return std::nullopt;
}

}  // namespace mrep
