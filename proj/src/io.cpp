#include "mrep/io.hpp"

#include <charconv>
#include <sstream>
#include <vector>

namespace mrep {

namespace {

struct Line {
    int number;
    std::vector<std::string> fields;
};

std::vector<Line> significant_lines(std::string_view text) {
    std::vector<Line> lines;
    int line_no = 0;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view raw = text.substr(pos, end - pos);
        ++line_no;
        pos = end + 1;
        if (auto hash = raw.find('#'); hash != std::string_view::npos) {
            raw = raw.substr(0, hash);
        }
        Line line{line_no, {}};
        std::istringstream split{std::string(raw)};
        std::string field;
        while (split >> field) line.fields.push_back(field);
        if (!line.fields.empty()) lines.push_back(std::move(line));
        if (end == text.size()) break;
    }
    return lines;
}

int parse_int(const Line& line, const std::string& field, const char* what) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc() || ptr != field.data() + field.size()) {
        throw ParseError(line.number, std::string("malformed ") + what + " '" + field + "'");
    }
    return value;
}

}  // namespace

WeightedGraph parse_graph(std::string_view text) {
    auto lines = significant_lines(text);
    if (lines.empty()) throw ParseError(1, "missing 'n m' header");

    const Line& header = lines[0];
    if (header.fields.size() != 2) {
        throw ParseError(header.number, "header must be 'n m'");
    }
    int n = parse_int(header, header.fields[0], "vertex count");
    int m = parse_int(header, header.fields[1], "edge count");
    if (n < 0 || m < 0) throw ParseError(header.number, "negative header value");

    if (static_cast<int>(lines.size()) - 1 != m) {
        throw ParseError(lines.back().number,
                         "expected " + std::to_string(m) + " edge lines, found " +
                             std::to_string(lines.size() - 1));
    }

    WeightedGraph g(n);
    for (int i = 1; i <= m; ++i) {
        const Line& line = lines[i];
        if (line.fields.size() != 3) {
            throw ParseError(line.number, "edge line must be 'u v w'");
        }
        int u = parse_int(line, line.fields[0], "vertex");
        int v = parse_int(line, line.fields[1], "vertex");
        auto w = parse_rational(line.fields[2]);
        if (!w) throw ParseError(line.number, "malformed weight '" + line.fields[2] + "'");
        if (u < 0 || u >= n || v < 0 || v >= n) {
            throw ParseError(line.number, "vertex out of range");
        }
        if (u == v) throw ParseError(line.number, "self-loop");
        if (g.has_edge(u, v)) throw ParseError(line.number, "duplicate edge");
        if (*w <= 0) throw ParseError(line.number, "nonpositive weight");
        g.add_edge(u, v, std::move(*w));
    }
    return g;
}

std::string emit_graph(const WeightedGraph& g) {
    std::string out = std::to_string(g.vertex_count()) + " " + std::to_string(g.edge_count()) + "\n";
    for (const auto& e : g.edges()) {
        out += std::to_string(e.u) + " " + std::to_string(e.v) + " " + format_rational(e.w) + "\n";
    }
    return out;
}

}  // namespace mrep
