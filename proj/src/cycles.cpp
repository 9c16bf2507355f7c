#include "mrep/cycles.hpp"

#include <algorithm>
#include <set>

namespace mrep {

std::vector<VertexPair> Cycle::edges() const {
    std::vector<VertexPair> out;
    out.reserve(verts.size());
    for (size_t i = 0; i < verts.size(); ++i) {
        out.push_back(make_pair_sorted(verts[i], verts[(i + 1) % verts.size()]));
    }
    return out;
}

bool Cycle::contains_edge(const VertexPair& e) const {
    for (size_t i = 0; i < verts.size(); ++i) {
        if (make_pair_sorted(verts[i], verts[(i + 1) % verts.size()]) == e) return true;
    }
    return false;
}

namespace {

class ChordlessDfs {
public:
    ChordlessDfs(const WeightedGraph& g, int cap, std::vector<Cycle>& out)
        : g_(g), cap_(cap), out_(out), on_path_(g.vertex_count(), false) {}

    void run() {
        for (int v0 = 0; v0 < g_.vertex_count(); ++v0) {
            path_ = {v0};
            on_path_[v0] = true;
            for (int v1 : g_.neighbors(v0)) {
                if (v1 <= v0) continue;
                push(v1);
                extend();
                pop();
            }
            on_path_[v0] = false;
        }
    }

private:
    void push(int v) {
        path_.push_back(v);
        on_path_[v] = true;
    }
    void pop() {
        on_path_[path_.back()] = false;
        path_.pop_back();
    }

    void extend() {
        const int v0 = path_.front();
        const int last = path_.back();
        const bool closes = path_.size() >= 3 && g_.has_edge(last, v0);
        if (closes) {
            if (path_[1] < last) out_.push_back(Cycle{path_});
            // Any longer cycle through this path would have the chord (last, v0).
            return;
        }
        if (static_cast<int>(path_.size()) >= cap_) return;
        for (int u : g_.neighbors(last)) {
            if (u <= v0 || on_path_[u]) continue;
            // u may touch only the path endpoint; an edge to an interior
            // vertex would be a chord of every cycle through the new path.
            bool chorded = false;
            for (size_t i = 1; i + 1 < path_.size(); ++i) {
                if (g_.has_edge(u, path_[i])) {
                    chorded = true;
                    break;
                }
            }
            if (chorded) continue;
            push(u);
            extend();
            pop();
        }
    }

    const WeightedGraph& g_;
    int cap_;
    std::vector<Cycle>& out_;
    std::vector<int> path_;
    std::vector<bool> on_path_;
};

class SimpleCycleDfs {
public:
    SimpleCycleDfs(const WeightedGraph& g, std::int64_t budget, std::vector<Cycle>& out)
        : g_(g), budget_(budget), out_(out), on_path_(g.vertex_count(), false) {}

    void run() {
        for (int v0 = 0; v0 < g_.vertex_count(); ++v0) {
            path_ = {v0};
            on_path_[v0] = true;
            for (int v1 : g_.neighbors(v0)) {
                if (v1 <= v0) continue;
                push(v1);
                extend();
                pop();
            }
            on_path_[v0] = false;
        }
    }

private:
    void push(int v) {
        path_.push_back(v);
        on_path_[v] = true;
    }
    void pop() {
        on_path_[path_.back()] = false;
        path_.pop_back();
    }

    void spend() {
        if (--budget_ < 0) throw CycleBudgetExceeded(initial_budget_);
    }

    void extend() {
        spend();
        const int v0 = path_.front();
        const int last = path_.back();
        if (path_.size() >= 3 && path_[1] < last && g_.has_edge(last, v0)) {
            out_.push_back(Cycle{path_});
        }
        for (int u : g_.neighbors(last)) {
            if (u <= v0 || on_path_[u]) continue;
            push(u);
            extend();
            pop();
        }
    }

    const WeightedGraph& g_;
    std::int64_t budget_;
    const std::int64_t initial_budget_ = budget_;
    std::vector<Cycle>& out_;
    std::vector<int> path_;
    std::vector<bool> on_path_;
};

}  // namespace

std::vector<Cycle> enumerate_chordless_cycles(const WeightedGraph& g, int cap) {
    if (cap < 3) throw std::invalid_argument("chordless cycle cap must be >= 3");
    std::vector<Cycle> out;
    ChordlessDfs(g, cap, out).run();
    return out;
}

BrokenCycleReport enumerate_broken_cycles(const WeightedGraph& g, std::int64_t budget) {
    std::vector<Cycle> all;
    SimpleCycleDfs(g, budget, all).run();

    BrokenCycleReport report;
    report.stats.deficit_max = 0;
    std::set<Rat> deficits;
    for (auto& c : all) {
        auto edges = c.edges();
        Rat total = 0;
        int heavy = 0;
        for (size_t i = 0; i < edges.size(); ++i) {
            const Rat& w = g.weight(edges[i].first, edges[i].second);
            total += w;
            if (w > g.weight(edges[heavy].first, edges[heavy].second)) {
                heavy = static_cast<int>(i);
            }
        }
        const Rat& wh = g.weight(edges[heavy].first, edges[heavy].second);
        Rat deficit = wh - (total - wh);
        if (deficit > 0) {
            deficits.insert(deficit);
            report.stats.deficit_max = std::max(report.stats.deficit_max, deficit);
            report.stats.max_light_edges =
                std::max(report.stats.max_light_edges, static_cast<int>(edges.size()) - 1);
            report.cycles.push_back(BrokenCycle{std::move(c), heavy, std::move(deficit)});
        }
    }
    report.stats.distinct_deficits = static_cast<int>(deficits.size());
    report.stats.broken_cycle_count = static_cast<std::int64_t>(report.cycles.size());
    return report;
}

bool broken_cycle_valid(const WeightedGraph& g, const BrokenCycle& bc) {
    auto edges = bc.cycle.edges();
    if (bc.heavy_index < 0 || bc.heavy_index >= static_cast<int>(edges.size())) return false;
    Rat rest = 0;
    for (size_t i = 0; i < edges.size(); ++i) {
        if (static_cast<int>(i) == bc.heavy_index) continue;
        if (!g.has_edge(edges[i].first, edges[i].second)) return false;
        rest += g.weight(edges[i].first, edges[i].second);
    }
    auto h = edges[bc.heavy_index];
    if (!g.has_edge(h.first, h.second)) return false;
    return g.weight(h.first, h.second) - rest == bc.deficit && bc.deficit > 0;
}

bool is_regular_cover(const std::vector<BrokenCycle>& broken, const EdgeSet& s) {
    for (const auto& bc : broken) {
        bool hit = false;
        for (const auto& e : bc.cycle.edges()) {
            if (s.count(e)) {
                hit = true;
                break;
            }
        }
        if (!hit) return false;
    }
    return true;
}

bool is_light_cover(const std::vector<BrokenCycle>& broken, const EdgeSet& s) {
    for (const auto& bc : broken) {
        auto edges = bc.cycle.edges();
        bool hit = false;
        for (size_t i = 0; i < edges.size(); ++i) {
            if (static_cast<int>(i) == bc.heavy_index) continue;
            if (s.count(edges[i])) {
                hit = true;
                break;
            }
        }
        if (!hit) return false;
    }
    return true;
}

}  // namespace mrep
