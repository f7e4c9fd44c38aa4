#include "dwidth/edge_list.hpp"

#include <sstream>
#include <vector>

namespace dwidth {

namespace {

bool skippable(const std::string& line) {
    const auto first = line.find_first_not_of(" \t\r");
    return first == std::string::npos || line[first] == '#';
}

// Parses exactly two non-negative integers, rejecting trailing garbage.
bool read_pair(const std::string& line, long long& a, long long& b) {
    std::istringstream fields(line);
    if (!(fields >> a >> b)) {
        return false;
    }
    std::string rest;
    return !(fields >> rest) && a >= 0 && b >= 0;
}

}  // namespace

Graph parse_graph(std::istream& in) {
    std::string line;
    int line_no = 0;
    long long n = -1;
    long long m = -1;
    std::vector<Edge> edges;
    while (std::getline(in, line)) {
        ++line_no;
        if (skippable(line)) {
            continue;
        }
        long long a = 0;
        long long b = 0;
        if (!read_pair(line, a, b)) {
            throw ParseError(line_no, n < 0 ? "malformed header, expected \"n m\"" : "malformed edge line, expected \"u v\"");
        }
        if (n < 0) {
            if (a > 1'000'000'000) {
                throw ParseError(line_no, "vertex count too large");
            }
            n = a;
            m = b;
            continue;
        }
        if (static_cast<long long>(edges.size()) == m) {
            throw ParseError(line_no, "more edge lines than declared in the header");
        }
        if (a >= n || b >= n) {
            throw ParseError(line_no, "vertex id out of range (n = " + std::to_string(n) + ")");
        }
        if (a == b) {
            throw ParseError(line_no, "self-loop at vertex " + std::to_string(a));
        }
        edges.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b));
    }
    if (n < 0) {
        throw ParseError(line_no, "missing header");
    }
    if (static_cast<long long>(edges.size()) != m) {
        throw ParseError(line_no, "expected " + std::to_string(m) + " edge lines, found " + std::to_string(edges.size()));
    }
    return Graph(static_cast<int>(n), edges);
}

Graph parse_graph(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse_graph(in);
}

std::string serialize_graph(const Graph& g) {
    std::ostringstream out;
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const auto& [u, v] : g.edges()) {
        out << u << ' ' << v << '\n';
    }
    return out.str();
}

}  // namespace dwidth
