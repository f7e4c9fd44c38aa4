#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "dwidth/decomposition.hpp"
#include "dwidth/loaded_cycle.hpp"

namespace dwidth {

/// A triple with d(u, w) = d(w, v) = d(u, v) / 2 attaining the bottleneck
/// constant, and a u-v path avoiding the ball B(w, delta - 1).
struct BottleneckWitness {
    Vertex u = -1;
    Vertex v = -1;
    Vertex w = -1;
    std::vector<Vertex> avoiding_path;
};

struct Bottleneck {
    int delta = 0;
    std::optional<BottleneckWitness> witness;  // present iff delta >= 1
};

/// Least delta such that for every even-length geodesic u..v with middle
/// vertex w, every u-v path meets B(w, delta). Per triple this is the least t
/// for which G - B(w, t) separates u from v or swallows one of them.
Bottleneck bottleneck_constant(const Graph& g);

/// Loaded cycle P + Q + R with F = E(P) + E(Q) and load 2 delta: P, Q are the
/// length-delta ends at w of geodesics u..w and v..w, R a shortest p-q path in
/// G - B(w, delta - 1).
LoadedCycle bottleneck_witness_to_cycle(const Graph& g, int delta, const BottleneckWitness& witness);

struct McCartyWidth {
    int width = 0;
    /// A triple needing the full width; empty when the graph has < 3 vertices.
    std::optional<std::array<Vertex, 3>> worst_triple;
    /// A centre whose radius-`width` ball separates worst_triple pairwise.
    Vertex center = -1;
};

/// Least k such that every triple of distinct vertices has a centre x (any
/// vertex, including the triple itself) with no component of G - B(x, k)
/// containing two of them.
McCartyWidth mccarty_width(const Graph& g);

/// max over edges uv of G of d_T(u, v), for a spanning tree T given by edges.
/// Throws PreconditionError when the edges are not a spanning tree of g.
int spanning_tree_cycle_distortion(const Graph& g, const std::vector<Edge>& tree_edges);

struct CycleDistortionSearch {
    /// Exact minimum when `complete`; otherwise the best found before the cap.
    int value = 0;
    std::vector<Edge> best_tree;
    bool complete = true;
    std::uint64_t trees_examined = 0;
};

/// Minimum cycle-distortion over all spanning trees, by deletion/contraction
/// enumeration in edge order.
CycleDistortionSearch min_cycle_distortion(const Graph& g, std::uint64_t max_trees = 10'000'000);

/// Bags are the radius-`radius` balls of the spanning tree around each vertex;
/// the decomposition tree is the spanning tree itself.
TreeDecomposition tree_ball_decomposition(const Graph& g, const std::vector<Edge>& tree_edges, int radius);

}  // namespace dwidth
