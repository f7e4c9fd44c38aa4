#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace dwidth {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

/// Thrown when an operation's precondition does not hold (bad vertex id,
/// disconnected input where connectivity is required, invalid certificate).
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A guarantee that a construction proves always holds did not hold. This is
/// a bug in the library, never a property of the input.
class InvariantViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

inline void ensure(bool condition, const std::string& what) {
    if (!condition) {
        throw InvariantViolation(what);
    }
}

/// Hop distance with an explicit "unreachable" state. Infinite compares
/// greater than every finite value; reading hops() of an infinite distance
/// throws instead of producing a number.
class Distance {
public:
    constexpr Distance() = default;
    constexpr explicit Distance(int hops) : hops_(hops) {}

    static constexpr Distance infinite() { return Distance(); }

    constexpr bool is_finite() const { return hops_ >= 0; }
    int hops() const {
        if (!is_finite()) {
            throw PreconditionError("distance is infinite (vertices are disconnected)");
        }
        return hops_;
    }

    constexpr bool operator==(const Distance&) const = default;
    constexpr std::strong_ordering operator<=>(const Distance& other) const {
        if (is_finite() != other.is_finite()) {
            return is_finite() ? std::strong_ordering::less : std::strong_ordering::greater;
        }
        return hops_ <=> other.hops_;
    }

    std::string to_string() const { return is_finite() ? std::to_string(hops_) : "inf"; }

private:
    int hops_ = -1;
};

/// Finite simple undirected graph on vertices 0..n-1 with sorted adjacency.
/// Immutable after construction.
class Graph {
public:
    Graph() = default;
    /// Duplicate edges collapse; self-loops and out-of-range ids throw.
    Graph(int n, std::span<const Edge> edges);

    int vertex_count() const { return static_cast<int>(adjacency_.size()); }
    std::size_t edge_count() const { return edge_count_; }

    std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[static_cast<std::size_t>(v)]; }
    bool adjacent(Vertex u, Vertex v) const;
    int degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }

    /// Edges (u, v) with u < v in lexicographic order.
    std::vector<Edge> edges() const;

    bool contains(Vertex v) const { return v >= 0 && v < vertex_count(); }

    bool operator==(const Graph&) const = default;

private:
    std::vector<std::vector<Vertex>> adjacency_;
    std::size_t edge_count_ = 0;
};

/// Row-major n x n table of hop distances.
class DistanceMatrix {
public:
    DistanceMatrix() = default;
    explicit DistanceMatrix(int n) : n_(n), data_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n)) {}

    int size() const { return n_; }
    Distance at(Vertex u, Vertex v) const { return data_[index(u, v)]; }
    void set(Vertex u, Vertex v, Distance d) { data_[index(u, v)] = d; }
    /// Finite distance; throws PreconditionError when u and v are disconnected.
    int hops(Vertex u, Vertex v) const { return at(u, v).hops(); }

private:
    std::size_t index(Vertex u, Vertex v) const {
        return static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(v);
    }

    int n_ = 0;
    std::vector<Distance> data_;
};

std::vector<Distance> bfs_distances(const Graph& g, Vertex source);

/// BFS restricted to vertices with allowed[v] true. Vertices outside the mask
/// are unreachable; the source must be allowed.
std::vector<Distance> bfs_distances(const Graph& g, Vertex source, const std::vector<char>& allowed);

DistanceMatrix all_pairs_distances(const Graph& g);

/// Components of G[keep]. Each part is sorted; parts are ordered by their
/// smallest vertex.
std::vector<std::vector<Vertex>> components(const Graph& g, std::span<const Vertex> keep);

/// Component label per vertex of G[allowed]; -1 for vertices outside the mask.
/// Labels are assigned in order of smallest vertex.
std::vector<int> component_labels(const Graph& g, const std::vector<char>& allowed);

bool is_connected(const Graph& g);

/// Throws PreconditionError naming `what` when g is not connected.
void require_connected(const Graph& g, const char* what);

/// Shortest s-t path inside G[allowed] as a vertex sequence s..t. At each step
/// the smallest-id neighbour that is one hop closer to t is taken. Empty when
/// t is unreachable.
std::vector<Vertex> shortest_path(const Graph& g, Vertex s, Vertex t, const std::vector<char>& allowed);
std::vector<Vertex> shortest_path(const Graph& g, Vertex s, Vertex t);

/// Subgraph induced on `vertices`, relabelled to 0..k-1 in the given order.
Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);

/// Maximum finite distance over all pairs, or infinite if g is disconnected.
Distance diameter(const Graph& g);

}  // namespace dwidth
