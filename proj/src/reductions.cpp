#include "mrep/reductions.hpp"

#include <stdexcept>

#include "mrep/apsp.hpp"

namespace mrep {

ReductionArtifact increase_to_general(const WeightedGraph& g) {
    DistanceOracle oracle = apsp(g);
    std::vector<VertexPair> heavy;
    for (const auto& e : g.edges()) {
        if (oracle.dist(e.u, e.v) < e.w) heavy.push_back(e.pair());
    }

    const int replicas = g.edge_count() + 1;
    const Rat z = g.max_weight() + 1;

    ReductionArtifact art{"inc2gen",
                          WeightedGraph(g.vertex_count() +
                                        static_cast<int>(heavy.size()) * replicas),
                          "OPT_general(output) = OPT_increase(input)"};
    art.heavy_edges = heavy;
    art.gadget_weight = z;

    for (const auto& e : g.edges()) art.output.add_edge(e.u, e.v, e.w);
    for (size_t i = 0; i < heavy.size(); ++i) {
        auto [s, t] = heavy[i];
        for (int j = 0; j < replicas; ++j) {
            int vid = g.vertex_count() + static_cast<int>(i) * replicas + j;
            art.output.add_edge(s, vid, z);
            art.output.add_edge(t, vid, z - g.weight(s, t));
            art.gadget_vertex[vid] = {static_cast<int>(i), j};
        }
    }
    return art;
}

namespace {

void check_vertex(const WeightedGraph& g, int v, const char* what) {
    if (v < 0 || v >= g.vertex_count()) {
        throw std::invalid_argument(std::string(what) + " vertex " + std::to_string(v) +
                                    " out of range");
    }
}

}  // namespace

ReductionArtifact multicut_to_mr(const WeightedGraph& g, const std::vector<VertexPair>& pairs) {
    ReductionArtifact art{"multicut", WeightedGraph(g.vertex_count()),
                          "OPT_increase(output) = OPT_multicut(input)"};
    for (auto [s, t] : pairs) {
        check_vertex(g, s, "demand");
        check_vertex(g, t, "demand");
        if (s == t) throw std::invalid_argument("demand pair with equal endpoints");
        if (g.has_edge(s, t)) {
            throw std::invalid_argument(
                "demand pair (" + std::to_string(s) + "," + std::to_string(t) +
                ") is an edge; such edges belong in every cut - delete them first "
                "and count them toward the optimum");
        }
        art.demand_pairs.push_back(make_pair_sorted(s, t));
    }

    const Rat pair_weight = g.vertex_count();
    for (const auto& e : g.edges()) art.output.add_edge(e.u, e.v, 1);
    for (auto [s, t] : art.demand_pairs) art.output.add_edge(s, t, pair_weight);
    return art;
}

ReductionArtifact lbcut_to_mr(const WeightedGraph& g, int s, int t, int length_bound) {
    check_vertex(g, s, "source");
    check_vertex(g, t, "sink");
    if (s == t) throw std::invalid_argument("source equals sink");
    if (length_bound < 1) throw std::invalid_argument("length bound must be positive");
    if (g.has_edge(s, t)) {
        throw std::invalid_argument(
            "(source, sink) is an edge; it belongs in every cut - delete it first "
            "and count it toward the optimum");
    }

    ReductionArtifact art{"lbcut", WeightedGraph(g.vertex_count()),
                          "OPT_increase(output) = OPT_lbcut(input)"};
    art.source = s;
    art.sink = t;
    art.length_bound = length_bound;
    for (const auto& e : g.edges()) art.output.add_edge(e.u, e.v, 1);
    art.output.add_edge(s, t, Rat(length_bound + 1));
    return art;
}

}  // namespace mrep
