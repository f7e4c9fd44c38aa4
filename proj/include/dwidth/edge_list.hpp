#pragma once

#include <istream>
#include <stdexcept>
#include <string>
#include <string_view>

#include "dwidth/graph.hpp"

namespace dwidth {

class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& message)
        : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

    int line() const { return line_; }

private:
    int line_;
};

/// Reads the "n m" header followed by m "u v" lines. Lines starting with '#'
/// and blank lines are ignored. Repeated edges collapse to one.
Graph parse_graph(std::istream& in);
Graph parse_graph(std::string_view text);

/// Inverse of parse_graph with edges sorted lexicographically (u < v).
std::string serialize_graph(const Graph& g);

}  // namespace dwidth
