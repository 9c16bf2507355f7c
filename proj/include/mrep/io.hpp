#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "mrep/graph.hpp"

namespace mrep {

struct ParseError : std::runtime_error {
    ParseError(int line_no, const std::string& message)
        : std::runtime_error("line " + std::to_string(line_no) + ": " + message),
          line(line_no) {}
    int line;
};

// Text format: first significant line "n m", then m lines "u v w" with
// 0 <= u < v < n and w a positive integer, decimal or p/q rational.
// '#' starts a comment; blank lines are ignored.
WeightedGraph parse_graph(std::string_view text);

// Canonical emission: header, then edges sorted by (u, v) with weights in
// lowest terms. parse(emit(g)) reproduces g, and emit kept idempotent over
// canonical text.
std::string emit_graph(const WeightedGraph& g);

}  // namespace mrep
