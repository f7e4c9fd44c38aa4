#include "dwidth/exact_odw.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <string>

#include "dwidth/chordal.hpp"

namespace dwidth {

namespace {

using Mask = std::uint32_t;

bool has(Mask m, Vertex v) { return ((m >> v) & 1U) != 0; }

// Vertices outside `eliminated` and other than v that v reaches through
// paths whose interior lies in `eliminated`.
Mask higher_neighbourhood(const Graph& g, Mask eliminated, Vertex v) {
    Mask seen = Mask{1} << v;
    Mask result = 0;
    std::vector<Vertex> stack{v};
    while (!stack.empty()) {
        const Vertex u = stack.back();
        stack.pop_back();
        for (Vertex w : g.neighbors(u)) {
            if (has(seen, w)) {
                continue;
            }
            seen |= Mask{1} << w;
            if (has(eliminated, w)) {
                stack.push_back(w);
            } else {
                result |= Mask{1} << w;
            }
        }
    }
    return result;
}

int spread(const DistanceMatrix& dist, Mask members, int n) {
    int best = 0;
    for (Vertex a = 0; a < n; ++a) {
        if (!has(members, a)) {
            continue;
        }
        for (Vertex b = a + 1; b < n; ++b) {
            if (has(members, b)) {
                best = std::max(best, dist.hops(a, b));
            }
        }
    }
    return best;
}

}  // namespace

ExactOdw exact_odw(const Graph& g, int limit) {
    const int n = g.vertex_count();
    limit = std::min(limit, kMaxExactOdwLimit);
    if (n > limit) {
        throw PreconditionError("exact_odw: " + std::to_string(n) + " vertices exceeds the limit of " +
                                std::to_string(limit));
    }
    require_connected(g, "exact_odw");
    if (n == 0) {
        return {0, chordal_clique_tree(g)};
    }
    const DistanceMatrix dist = all_pairs_distances(g);
    const Mask full = (Mask{1} << n) - 1;
    constexpr int kUnset = std::numeric_limits<int>::max();
    std::vector<int> best(static_cast<std::size_t>(full) + 1, kUnset);
    std::vector<signed char> last(static_cast<std::size_t>(full) + 1, -1);
    best[0] = 0;
    for (Mask s = 1; s <= full; ++s) {
        for (Vertex v = 0; v < n; ++v) {
            if (!has(s, v)) {
                continue;
            }
            const Mask before = s & ~(Mask{1} << v);
            if (best[before] >= best[s]) {
                continue;
            }
            const Mask bag = higher_neighbourhood(g, before, v) | (Mask{1} << v);
            const int value = std::max(best[before], spread(dist, bag, n));
            if (value < best[s]) {
                best[s] = value;
                last[s] = static_cast<signed char>(v);
            }
        }
    }

    // Replay the optimal elimination order, adding fill edges.
    std::vector<Vertex> order;
    for (Mask s = full; s != 0; s &= ~(Mask{1} << last[s])) {
        order.push_back(last[s]);
    }
    std::ranges::reverse(order);
    std::vector<Edge> filled = g.edges();
    Mask eliminated = 0;
    for (Vertex v : order) {
        const Mask higher = higher_neighbourhood(g, eliminated, v);
        for (Vertex w = 0; w < n; ++w) {
            if (has(higher, w)) {
                filled.emplace_back(std::min(v, w), std::max(v, w));
            }
        }
        eliminated |= Mask{1} << v;
    }
    const Graph triangulation(n, filled);
    ExactOdw result{best[full], chordal_clique_tree(triangulation)};
    ensure(!validate(g, result.decomposition).has_value(), "optimal clique tree is not a decomposition of g");
    ensure(outer_diameter(dist, result.decomposition) == Distance(result.width),
           "optimal clique tree does not attain the computed width");
    return result;
}

}  // namespace dwidth
