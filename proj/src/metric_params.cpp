#include "dwidth/metric_params.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>

namespace dwidth {

namespace {

// labels[t][v]: component of v in G - B(center, t), or -1 if v is in the ball.
// Rows run until the ball swallows every vertex.
std::vector<std::vector<int>> ball_complement_labels(const Graph& g, const DistanceMatrix& dist, Vertex center) {
    int ecc = 0;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        ecc = std::max(ecc, dist.hops(center, v));
    }
    std::vector<std::vector<int>> labels;
    std::vector<char> outside(static_cast<std::size_t>(g.vertex_count()));
    for (int t = 0; t <= ecc; ++t) {
        for (Vertex v = 0; v < g.vertex_count(); ++v) {
            outside[static_cast<std::size_t>(v)] = dist.hops(center, v) > t;
        }
        labels.push_back(component_labels(g, outside));
    }
    return labels;
}

// Least t at which a and b are not in one component of G - B(center, t).
int separation_radius(const std::vector<std::vector<int>>& labels, Vertex a, Vertex b) {
    for (std::size_t t = 0; t < labels.size(); ++t) {
        const int la = labels[t][static_cast<std::size_t>(a)];
        const int lb = labels[t][static_cast<std::size_t>(b)];
        if (la < 0 || lb < 0 || la != lb) {
            return static_cast<int>(t);
        }
    }
    throw InvariantViolation("ball of full radius left two vertices outside");
}

std::vector<char> outside_ball(const DistanceMatrix& dist, Vertex center, int radius) {
    std::vector<char> mask(static_cast<std::size_t>(dist.size()));
    for (Vertex v = 0; v < dist.size(); ++v) {
        mask[static_cast<std::size_t>(v)] = dist.hops(center, v) > radius;
    }
    return mask;
}

}  // namespace

Bottleneck bottleneck_constant(const Graph& g) {
    require_connected(g, "bottleneck_constant");
    const int n = g.vertex_count();
    const DistanceMatrix dist = all_pairs_distances(g);
    std::vector<std::vector<std::vector<int>>> labels;
    labels.reserve(static_cast<std::size_t>(n));
    for (Vertex w = 0; w < n; ++w) {
        labels.push_back(ball_complement_labels(g, dist, w));
    }
    Bottleneck result;
    std::array<Vertex, 3> best{-1, -1, -1};
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
            const int span = dist.hops(u, v);
            if (span % 2 != 0) {
                continue;
            }
            const int half = span / 2;
            for (Vertex w = 0; w < n; ++w) {
                if (dist.hops(u, w) != half || dist.hops(v, w) != half) {
                    continue;
                }
                const int t = separation_radius(labels[static_cast<std::size_t>(w)], u, v);
                if (t > result.delta) {
                    result.delta = t;
                    best = {u, v, w};
                }
            }
        }
    }
    if (result.delta >= 1) {
        const auto [u, v, w] = best;
        auto path = shortest_path(g, u, v, outside_ball(dist, w, result.delta - 1));
        ensure(!path.empty(), "bottleneck triple has no path avoiding the smaller ball");
        result.witness = BottleneckWitness{u, v, w, std::move(path)};
    }
    return result;
}

LoadedCycle bottleneck_witness_to_cycle(const Graph& g, int delta, const BottleneckWitness& witness) {
    if (delta < 1) {
        throw PreconditionError("bottleneck witness needs delta >= 1");
    }
    const DistanceMatrix dist = all_pairs_distances(g);
    const auto [u, v, w] = std::array{witness.u, witness.v, witness.w};
    const int half = dist.hops(u, w);
    if (dist.hops(v, w) != half || dist.hops(u, v) != 2 * half || half < delta) {
        throw PreconditionError("not a bottleneck triple for this delta");
    }
    // Geodesics w..u and w..v; P, Q are their first delta edges from w.
    const auto to_u = shortest_path(g, w, u);
    const auto to_v = shortest_path(g, w, v);
    const std::vector<Vertex> p_side(to_u.begin(), to_u.begin() + delta + 1);  // w .. p
    const std::vector<Vertex> q_side(to_v.begin(), to_v.begin() + delta + 1);  // w .. q
    const Vertex p = p_side.back();
    const Vertex q = q_side.back();
    const auto r_path = shortest_path(g, q, p, outside_ball(dist, w, delta - 1));  // q .. p
    ensure(!r_path.empty(), "no p-q path avoiding B(w, delta - 1)");

    // p -P-> w -Q-> q -R-> (back to p)
    std::vector<Vertex> cycle(p_side.rbegin(), p_side.rend());
    cycle.insert(cycle.end(), q_side.begin() + 1, q_side.end());
    cycle.insert(cycle.end(), r_path.begin() + 1, r_path.end() - 1);
    std::vector<Edge> loaded;
    for (std::size_t i = 0; i + 1 < p_side.size(); ++i) {
        loaded.emplace_back(p_side[i], p_side[i + 1]);
        loaded.emplace_back(q_side[i], q_side[i + 1]);
    }
    std::optional<LoadedCycle> lc;
    try {
        lc.emplace(std::move(cycle), loaded);
    } catch (const PreconditionError& e) {
        throw InvariantViolation(std::string("bottleneck witness is not a cycle: ") + e.what());
    }
    ensure(lc->load() == 2 * delta, "bottleneck cycle load differs from 2 delta");
    ensure(!is_geodesic_loaded(g, dist, *lc).has_value(), "bottleneck cycle is not geodesic");
    return std::move(*lc);
}

McCartyWidth mccarty_width(const Graph& g) {
    require_connected(g, "mccarty_width");
    const int n = g.vertex_count();
    McCartyWidth result;
    if (n < 3) {
        return result;
    }
    const DistanceMatrix dist = all_pairs_distances(g);
    const auto un = static_cast<std::size_t>(n);
    // sep[(x * n + a) * n + b]: least radius at which B(x, .) separates a and b
    std::vector<int> sep(un * un * un, 0);
    for (Vertex x = 0; x < n; ++x) {
        const auto labels = ball_complement_labels(g, dist, x);
        for (Vertex a = 0; a < n; ++a) {
            for (Vertex b = a + 1; b < n; ++b) {
                const int t = separation_radius(labels, a, b);
                sep[(static_cast<std::size_t>(x) * un + static_cast<std::size_t>(a)) * un + static_cast<std::size_t>(b)] = t;
            }
        }
    }
    auto at = [&](Vertex x, Vertex a, Vertex b) {
        return sep[(static_cast<std::size_t>(x) * un + static_cast<std::size_t>(a)) * un + static_cast<std::size_t>(b)];
    };
    result.width = -1;
    for (Vertex a = 0; a < n; ++a) {
        for (Vertex b = a + 1; b < n; ++b) {
            for (Vertex c = b + 1; c < n; ++c) {
                int need = std::numeric_limits<int>::max();
                Vertex center = -1;
                for (Vertex x = 0; x < n; ++x) {
                    const int r = std::max({at(x, a, b), at(x, a, c), at(x, b, c)});
                    if (r < need) {
                        need = r;
                        center = x;
                    }
                }
                if (need > result.width) {
                    result.width = need;
                    result.worst_triple = std::array{a, b, c};
                    result.center = center;
                }
            }
        }
    }
    return result;
}

namespace {

struct SpanningTreeView {
    std::vector<std::vector<Vertex>> adjacency;
};

SpanningTreeView require_spanning_tree(const Graph& g, const std::vector<Edge>& tree_edges) {
    const int n = g.vertex_count();
    if (static_cast<int>(tree_edges.size()) != std::max(n - 1, 0)) {
        throw PreconditionError("a spanning tree of " + std::to_string(n) + " vertices has " +
                                std::to_string(std::max(n - 1, 0)) + " edges, got " +
                                std::to_string(tree_edges.size()));
    }
    std::vector<int> parent(static_cast<std::size_t>(n));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
        }
        return x;
    };
    SpanningTreeView view{std::vector<std::vector<Vertex>>(static_cast<std::size_t>(n))};
    for (const auto& [a, b] : tree_edges) {
        if (!g.contains(a) || !g.contains(b) || !g.adjacent(a, b)) {
            throw PreconditionError("tree edge " + std::to_string(a) + "-" + std::to_string(b) + " is not a graph edge");
        }
        const int ra = find(a);
        const int rb = find(b);
        if (ra == rb) {
            throw PreconditionError("tree edges contain a cycle");
        }
        parent[static_cast<std::size_t>(ra)] = rb;
        view.adjacency[static_cast<std::size_t>(a)].push_back(b);
        view.adjacency[static_cast<std::size_t>(b)].push_back(a);
    }
    return view;
}

std::vector<int> tree_bfs(const std::vector<std::vector<Vertex>>& adjacency, Vertex source) {
    std::vector<int> dist(adjacency.size(), -1);
    std::vector<Vertex> queue{source};
    dist[static_cast<std::size_t>(source)] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const Vertex x = queue[head];
        for (Vertex y : adjacency[static_cast<std::size_t>(x)]) {
            if (dist[static_cast<std::size_t>(y)] < 0) {
                dist[static_cast<std::size_t>(y)] = dist[static_cast<std::size_t>(x)] + 1;
                queue.push_back(y);
            }
        }
    }
    return dist;
}

int distortion_of(const Graph& g, const std::vector<std::vector<Vertex>>& adjacency) {
    int worst = 0;
    for (Vertex u = 0; u < g.vertex_count(); ++u) {
        bool has_later = std::ranges::any_of(g.neighbors(u), [u](Vertex v) { return v > u; });
        if (!has_later) {
            continue;
        }
        const auto from_u = tree_bfs(adjacency, u);
        for (Vertex v : g.neighbors(u)) {
            if (v > u) {
                worst = std::max(worst, from_u[static_cast<std::size_t>(v)]);
            }
        }
    }
    return worst;
}

class SpanningTreeEnumerator {
public:
    SpanningTreeEnumerator(const Graph& g, std::uint64_t cap, CycleDistortionSearch& out)
        : g_(g), edges_(g.edges()), cap_(cap), out_(out), excluded_(edges_.size(), 0) {}

    void run() {
        std::vector<int> parent(static_cast<std::size_t>(g_.vertex_count()));
        std::iota(parent.begin(), parent.end(), 0);
        out_.value = std::numeric_limits<int>::max();
        descend(0, parent);
    }

private:
    static int find(std::vector<int>& parent, int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    }

    bool connected_without_excluded() const {
        std::vector<std::vector<Vertex>> adj(static_cast<std::size_t>(g_.vertex_count()));
        for (std::size_t i = 0; i < edges_.size(); ++i) {
            if (!excluded_[i]) {
                adj[static_cast<std::size_t>(edges_[i].first)].push_back(edges_[i].second);
                adj[static_cast<std::size_t>(edges_[i].second)].push_back(edges_[i].first);
            }
        }
        const auto dist = tree_bfs(adj, 0);
        return std::ranges::all_of(dist, [](int d) { return d >= 0; });
    }

    void leaf() {
        if (out_.trees_examined == cap_) {
            out_.complete = false;
            return;
        }
        ++out_.trees_examined;
        std::vector<std::vector<Vertex>> adj(static_cast<std::size_t>(g_.vertex_count()));
        for (const auto& [a, b] : chosen_) {
            adj[static_cast<std::size_t>(a)].push_back(b);
            adj[static_cast<std::size_t>(b)].push_back(a);
        }
        const int d = distortion_of(g_, adj);
        if (d < out_.value) {
            out_.value = d;
            out_.best_tree = chosen_;
        }
    }

    void descend(std::size_t index, std::vector<int>& parent) {
        if (!out_.complete) {
            return;
        }
        if (static_cast<int>(chosen_.size()) == g_.vertex_count() - 1) {
            leaf();
            return;
        }
        if (index == edges_.size()) {
            return;
        }
        const auto [a, b] = edges_[index];
        const int ra = find(parent, a);
        const int rb = find(parent, b);
        if (ra != rb) {
            std::vector<int> merged = parent;
            merged[static_cast<std::size_t>(ra)] = rb;
            chosen_.push_back(edges_[index]);
            descend(index + 1, merged);
            chosen_.pop_back();
        }
        // Dropping the edge is only allowed while the rest still spans.
        excluded_[index] = 1;
        if (ra == rb || connected_without_excluded()) {
            descend(index + 1, parent);
        }
        excluded_[index] = 0;
    }

    const Graph& g_;
    std::vector<Edge> edges_;
    std::uint64_t cap_;
    CycleDistortionSearch& out_;
    std::vector<char> excluded_;
    std::vector<Edge> chosen_;
};

}  // namespace

int spanning_tree_cycle_distortion(const Graph& g, const std::vector<Edge>& tree_edges) {
    const auto view = require_spanning_tree(g, tree_edges);
    return distortion_of(g, view.adjacency);
}

CycleDistortionSearch min_cycle_distortion(const Graph& g, std::uint64_t max_trees) {
    require_connected(g, "min_cycle_distortion");
    CycleDistortionSearch result;
    if (g.vertex_count() <= 1) {
        return result;
    }
    SpanningTreeEnumerator(g, max_trees, result).run();
    return result;
}

TreeDecomposition tree_ball_decomposition(const Graph& g, const std::vector<Edge>& tree_edges, int radius) {
    const auto view = require_spanning_tree(g, tree_edges);
    TreeDecomposition td;
    td.node_count = std::max(g.vertex_count(), 1);
    td.tree_edges = tree_edges;
    td.bags.resize(static_cast<std::size_t>(td.node_count));
    for (Vertex t = 0; t < g.vertex_count(); ++t) {
        const auto dist = tree_bfs(view.adjacency, t);
        for (Vertex v = 0; v < g.vertex_count(); ++v) {
            if (dist[static_cast<std::size_t>(v)] <= radius) {
                td.bags[static_cast<std::size_t>(t)].push_back(v);
            }
        }
    }
    return td;
}

}  // namespace dwidth
