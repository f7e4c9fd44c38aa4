#include "dwidth/generators.hpp"

#include <algorithm>
#include <cassert>
#include <cstdlib>
#include <random>
#include <string>

namespace dwidth {

namespace {

void require_size(bool ok, std::string_view family, int size) {
    if (!ok) {
        throw PreconditionError("size " + std::to_string(size) + " out of range for family " + std::string(family));
    }
}

}  // namespace

Graph make_cycle(int length) {
    require_size(length >= 3, "cycle", length);
    std::vector<Edge> edges;
    for (int i = 0; i < length; ++i) {
        edges.emplace_back(i, (i + 1) % length);
    }
    return Graph(length, edges);
}

Graph make_path(int length) {
    require_size(length >= 1, "path", length);
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < length; ++i) {
        edges.emplace_back(i, i + 1);
    }
    return Graph(length, edges);
}

Graph make_complete(int n) {
    require_size(n >= 1, "complete", n);
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            edges.emplace_back(u, v);
        }
    }
    return Graph(n, edges);
}

Graph make_grid(int width, int height) {
    require_size(width >= 1, "grid", width);
    require_size(height >= 1, "grid", height);
    std::vector<Edge> edges;
    for (int y = 0; y < height; ++y) {
        for (int x = 0; x < width; ++x) {
            const int v = y * width + x;
            if (x + 1 < width) {
                edges.emplace_back(v, v + 1);
            }
            if (y + 1 < height) {
                edges.emplace_back(v, v + width);
            }
        }
    }
    return Graph(width * height, edges);
}

Graph make_family(std::string_view family, int size, int height) {
    if (family == "cycle") {
        return make_cycle(size);
    }
    if (family == "path") {
        return make_path(size);
    }
    if (family == "complete") {
        return make_complete(size);
    }
    if (family == "grid") {
        return make_grid(size, height > 0 ? height : size);
    }
    throw PreconditionError("unknown graph family: " + std::string(family));
}

Vertex TriangularLattice::vertex_of(int a, int b, int c) const {
    const auto it = std::ranges::lower_bound(coordinates, std::array<int, 3>{a, b, c});
    if (it == coordinates.end() || *it != std::array<int, 3>{a, b, c}) {
        throw PreconditionError("not a lattice coordinate");
    }
    return static_cast<Vertex>(it - coordinates.begin());
}

TriangularLattice make_triangular_lattice(int side) {
    require_size(side >= 1, "triangular lattice", side);
    TriangularLattice lat;
    for (int a = 0; a <= side; ++a) {
        for (int b = 0; a + b <= side; ++b) {
            lat.coordinates.push_back({a, b, side - a - b});
        }
    }
    std::vector<Edge> edges;
    const auto count = lat.coordinates.size();
    for (std::size_t i = 0; i < count; ++i) {
        for (std::size_t j = i + 1; j < count; ++j) {
            const auto& p = lat.coordinates[i];
            const auto& q = lat.coordinates[j];
            if (std::abs(p[0] - q[0]) + std::abs(p[1] - q[1]) + std::abs(p[2] - q[2]) == 2) {
                edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
            }
        }
    }
    lat.graph = Graph(static_cast<int>(count), edges);

    // c = 0 side from (0,n,0) to (n,0,0), then b = 0 side to (0,0,n), then a = 0 back.
    for (int a = 0; a <= side; ++a) {
        lat.base_path.push_back(lat.vertex_of(a, side - a, 0));
    }
    lat.perimeter = lat.base_path;
    for (int c = 1; c <= side; ++c) {
        lat.perimeter.push_back(lat.vertex_of(side - c, 0, c));
    }
    for (int b = 1; b < side; ++b) {
        lat.perimeter.push_back(lat.vertex_of(0, b, side - b));
    }
    assert(static_cast<int>(lat.perimeter.size()) == 3 * side);
    return lat;
}

FareyPyramid make_farey(int depth) {
    require_size(depth >= 1, "farey", depth);
    std::vector<Edge> edges{{0, 1}, {1, 2}, {0, 2}};
    std::vector<Vertex> outer{0, 1, 2};
    int n = 3;
    for (int level = 2; level <= depth; ++level) {
        std::vector<Vertex> next;
        next.reserve(outer.size() * 2);
        for (std::size_t i = 0; i < outer.size(); ++i) {
            const Vertex u = outer[i];
            const Vertex v = outer[(i + 1) % outer.size()];
            const Vertex z = n++;
            edges.emplace_back(u, z);
            edges.emplace_back(z, v);
            next.push_back(u);
            next.push_back(z);
        }
        outer = std::move(next);
    }
    FareyPyramid result{Graph(n, edges), std::move(outer)};
    assert(static_cast<int>(result.outer_cycle.size()) == n);
    return result;
}

Graph make_random_connected(int n, double extra_edge_probability, std::uint64_t seed) {
    require_size(n >= 1, "random", n);
    std::mt19937_64 rng(seed);
    std::vector<Edge> edges;
    for (int v = 1; v < n; ++v) {
        std::uniform_int_distribution<int> pick(0, v - 1);
        edges.emplace_back(pick(rng), v);
    }
    std::bernoulli_distribution coin(extra_edge_probability);
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (coin(rng)) {
                edges.emplace_back(u, v);
            }
        }
    }
    return Graph(n, edges);
}

}  // namespace dwidth
