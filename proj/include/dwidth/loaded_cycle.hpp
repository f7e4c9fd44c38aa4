#pragma once

#include <optional>
#include <vector>

#include "dwidth/graph.hpp"

namespace dwidth {

/// A cycle (cyclic vertex sequence, at least 3 distinct vertices) with a
/// distinguished subset F of its edges. Edge i joins position i and i+1
/// (mod length).
class LoadedCycle {
public:
    LoadedCycle() = default;
    /// Throws PreconditionError when the sequence repeats a vertex, is shorter
    /// than 3, or some loaded edge is not a cycle edge.
    LoadedCycle(std::vector<Vertex> cycle, const std::vector<Edge>& loaded_edges);
    /// flags[i] marks edge i.
    static LoadedCycle from_flags(std::vector<Vertex> cycle, std::vector<char> flags);
    /// Every edge loaded.
    static LoadedCycle fully_loaded(std::vector<Vertex> cycle);

    const std::vector<Vertex>& vertices() const { return cycle_; }
    std::size_t length() const { return cycle_.size(); }
    bool loaded(std::size_t edge_index) const { return prefix_[edge_index + 1] != prefix_[edge_index]; }
    int load() const { return prefix_.back(); }
    /// Loaded edges as (min, max) pairs in cycle order.
    std::vector<Edge> loaded_edges() const;

    std::optional<std::size_t> position_of(Vertex v) const;
    bool contains(Vertex v) const { return position_of(v).has_value(); }

    /// d_{C,F} between the vertices at two positions.
    int distance_at(std::size_t i, std::size_t j) const;

private:
    void index();

    std::vector<Vertex> cycle_;
    std::vector<int> prefix_{0};  // prefix_[i] = loaded edges among 0..i-1
    std::vector<std::pair<Vertex, std::size_t>> lookup_;  // sorted by vertex
};

/// d_{C,F}(u, v): the smaller number of F-edges on the two arcs between u, v.
/// Throws PreconditionError if either vertex is not on the cycle.
int cf_distance(const LoadedCycle& lc, Vertex u, Vertex v);

/// Throws PreconditionError unless every cycle vertex is in g and consecutive
/// vertices (including last-first) are adjacent in g.
void require_cycle_in(const Graph& g, const LoadedCycle& lc);

struct GeodesicViolation {
    Vertex u = -1;
    Vertex v = -1;
    Distance graph_distance;
    int cycle_distance = 0;
};

/// Empty when d_G(u, v) >= d_{C,F}(u, v) for all cycle vertices u, v;
/// otherwise the first violating pair by cycle position.
std::optional<GeodesicViolation> is_geodesic_loaded(const Graph& g, const LoadedCycle& lc);
std::optional<GeodesicViolation> is_geodesic_loaded(const Graph& g, const DistanceMatrix& dist,
                                                     const LoadedCycle& lc);

}  // namespace dwidth
