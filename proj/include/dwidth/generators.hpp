#pragma once

#include <array>
#include <cstdint>
#include <string_view>
#include <vector>

#include "dwidth/graph.hpp"

namespace dwidth {

/// Vertex numbering:
///   cycle   0-1-...-(l-1)-0
///   path    0-1-...-(l-1)
///   grid    (x, y) -> y * width + x
Graph make_cycle(int length);
Graph make_path(int length);
Graph make_complete(int n);
Graph make_grid(int width, int height);

/// Builds one of the named families ("cycle", "path", "complete", "grid").
/// `height` is only read by "grid".
Graph make_family(std::string_view family, int size, int height = 0);

/// Triangular piece of the triangular lattice: all (a, b, c) >= 0 with
/// a + b + c = side, adjacent when the coordinates differ by 2 in l1-norm.
/// Vertices are numbered in lexicographic order of (a, b, c).
struct TriangularLattice {
    Graph graph;
    std::vector<std::array<int, 3>> coordinates;
    /// (0, n, 0), (1, n-1, 0), ..., (n, 0, 0): the side with c = 0.
    std::vector<Vertex> base_path;
    /// Perimeter cycle of length 3n starting with base_path.
    std::vector<Vertex> perimeter;

    Vertex vertex_of(int a, int b, int c) const;
};

TriangularLattice make_triangular_lattice(int side);

/// D_1 is the triangle 0-1-2. D_i adds, for each edge uv of the outer cycle
/// C_{i-1} (in cycle order), a vertex z_uv adjacent to u and v. New vertices
/// are numbered in insertion order; C_i is u, z_uv, v, ...
struct FareyPyramid {
    Graph graph;
    std::vector<Vertex> outer_cycle;
};

FareyPyramid make_farey(int depth);

/// Random connected graph: vertex i > 0 attaches to a uniform earlier vertex,
/// then each remaining pair is added with probability `extra_edge_probability`.
Graph make_random_connected(int n, double extra_edge_probability, std::uint64_t seed);

}  // namespace dwidth
