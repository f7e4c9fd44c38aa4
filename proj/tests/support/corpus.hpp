#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dwidth/graph.hpp"

namespace dwidth::testing {

struct NamedGraph {
    std::string name;
    Graph graph;
};

Graph graph_of(int n, const std::vector<Edge>& edges);

/// Cycles 3..12, paths 1..10, grids up to 4x4, K_1..K_6, triangular lattices
/// 1..6, Farey pyramids 1..4 and 50 seeded random connected graphs (n <= 10).
const std::vector<NamedGraph>& corpus();

/// Members of corpus() with at most `max_n` vertices.
std::vector<const NamedGraph*> corpus_up_to(int max_n);

/// Seeded random connected graph with 3..max_n vertices.
Graph random_graph(std::uint64_t seed, int max_n = 10);

/// Random tree on n vertices (every vertex attaches to an earlier one).
Graph random_tree(int n, std::uint64_t seed);

}  // namespace dwidth::testing
