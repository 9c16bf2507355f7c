#pragma once

#include <initializer_list>
#include <tuple>

#include "mrep/graph.hpp"

namespace mrep::testing {

inline WeightedGraph make_graph(int n, std::initializer_list<std::tuple<int, int, int>> edges) {
    WeightedGraph g(n);
    for (auto [u, v, w] : edges) g.add_edge(u, v, Rat(w));
    return g;
}

// The recurring fixture: triangle with w(0,1)=1, w(1,2)=1, w(0,2)=3, whose
// single broken cycle has heavy edge (0,2) and deficit 1.
inline WeightedGraph broken_triangle() {
    return make_graph(3, {{0, 1, 1}, {1, 2, 1}, {0, 2, 3}});
}

inline WeightedGraph metric_triangle() {
    return make_graph(3, {{0, 1, 1}, {1, 2, 1}, {0, 2, 2}});
}

}  // namespace mrep::testing
