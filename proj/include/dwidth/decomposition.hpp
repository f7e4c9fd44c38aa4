#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "dwidth/graph.hpp"

namespace dwidth {

using Node = int;

/// A tree on nodes 0..s-1 with one bag per node. Bags are kept sorted and
/// duplicate-free; empty bags are allowed.
struct TreeDecomposition {
    int node_count = 0;
    std::vector<Edge> tree_edges;
    std::vector<std::vector<Vertex>> bags;

    /// Sorts and deduplicates each bag.
    void normalize();
    std::vector<std::vector<Node>> tree_adjacency() const;

    bool operator==(const TreeDecomposition&) const = default;
};

/// Throws PreconditionError unless edges form a tree on 0..node_count-1.
void require_tree(int node_count, const std::vector<Edge>& tree_edges);
bool is_tree(int node_count, const std::vector<Edge>& tree_edges);

/// Nodes on the tree path from a to b, inclusive.
std::vector<Node> tree_path(const std::vector<std::vector<Node>>& adjacency, Node a, Node b);

struct Violation {
    enum class Axiom { malformed, vertex_cover, edge_cover, subtree };

    Axiom axiom = Axiom::malformed;
    std::string message;
    /// vertex_cover: {v}; edge_cover: {u, v}; subtree: {v, r, s, t} where s lies
    /// between r and t, v is in B_r and B_t but not B_s.
    std::vector<int> witness;
};

/// Empty optional when the three axioms hold for g.
std::optional<Violation> validate(const Graph& g, const TreeDecomposition& td);

/// Throws PreconditionError carrying the violation message.
void require_valid(const Graph& g, const TreeDecomposition& td);

/// max over bags of max_{u,v in bag} d_G(u, v); empty bags are ignored.
Distance outer_diameter(const Graph& g, const TreeDecomposition& td);
Distance outer_diameter(const DistanceMatrix& dist, const TreeDecomposition& td);

/// max over bags of diam(G[bag]); infinite if some G[bag] is disconnected.
Distance inner_diameter(const Graph& g, const TreeDecomposition& td);

/// Replaces each bag B by B+, the union of all paths of G of length at most d
/// with both ends in B. The tree is unchanged.
TreeDecomposition expand_bags(const Graph& g, const TreeDecomposition& td, int d);

}  // namespace dwidth
