#include "dwidth/graph.hpp"

#include <algorithm>
#include <deque>
#include <string>

namespace dwidth {

Graph::Graph(int n, std::span<const Edge> edges) {
    if (n < 0) {
        throw PreconditionError("vertex count must be non-negative");
    }
    adjacency_.resize(static_cast<std::size_t>(n));
    for (const auto& [u, v] : edges) {
        if (!contains(u) || !contains(v)) {
            throw PreconditionError("edge " + std::to_string(u) + "-" + std::to_string(v) +
                                    " has a vertex id out of range");
        }
        if (u == v) {
            throw PreconditionError("self-loop at vertex " + std::to_string(u));
        }
        adjacency_[static_cast<std::size_t>(u)].push_back(v);
        adjacency_[static_cast<std::size_t>(v)].push_back(u);
    }
    std::size_t degree_sum = 0;
    for (auto& list : adjacency_) {
        std::ranges::sort(list);
        list.erase(std::unique(list.begin(), list.end()), list.end());
        degree_sum += list.size();
    }
    edge_count_ = degree_sum / 2;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
    return std::ranges::binary_search(neighbors(u), v);
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (Vertex u = 0; u < vertex_count(); ++u) {
        for (Vertex v : neighbors(u)) {
            if (u < v) {
                out.emplace_back(u, v);
            }
        }
    }
    return out;
}

std::vector<Distance> bfs_distances(const Graph& g, Vertex source, const std::vector<char>& allowed) {
    if (!g.contains(source)) {
        throw PreconditionError("BFS source " + std::to_string(source) + " out of range");
    }
    std::vector<Distance> dist(static_cast<std::size_t>(g.vertex_count()));
    if (!allowed[static_cast<std::size_t>(source)]) {
        throw PreconditionError("BFS source is outside the allowed vertex set");
    }
    std::deque<Vertex> queue{source};
    dist[static_cast<std::size_t>(source)] = Distance(0);
    while (!queue.empty()) {
        const Vertex u = queue.front();
        queue.pop_front();
        const int du = dist[static_cast<std::size_t>(u)].hops();
        for (Vertex w : g.neighbors(u)) {
            auto& dw = dist[static_cast<std::size_t>(w)];
            if (allowed[static_cast<std::size_t>(w)] && !dw.is_finite()) {
                dw = Distance(du + 1);
                queue.push_back(w);
            }
        }
    }
    return dist;
}

std::vector<Distance> bfs_distances(const Graph& g, Vertex source) {
    return bfs_distances(g, source, std::vector<char>(static_cast<std::size_t>(g.vertex_count()), 1));
}

DistanceMatrix all_pairs_distances(const Graph& g) {
    DistanceMatrix matrix(g.vertex_count());
    for (Vertex s = 0; s < g.vertex_count(); ++s) {
        const auto row = bfs_distances(g, s);
        for (Vertex t = 0; t < g.vertex_count(); ++t) {
            matrix.set(s, t, row[static_cast<std::size_t>(t)]);
        }
    }
    return matrix;
}

std::vector<int> component_labels(const Graph& g, const std::vector<char>& allowed) {
    const auto n = static_cast<std::size_t>(g.vertex_count());
    std::vector<int> label(n, -1);
    int next = 0;
    std::vector<Vertex> stack;
    for (Vertex s = 0; s < g.vertex_count(); ++s) {
        if (!allowed[static_cast<std::size_t>(s)] || label[static_cast<std::size_t>(s)] >= 0) {
            continue;
        }
        label[static_cast<std::size_t>(s)] = next;
        stack.push_back(s);
        while (!stack.empty()) {
            const Vertex u = stack.back();
            stack.pop_back();
            for (Vertex w : g.neighbors(u)) {
                if (allowed[static_cast<std::size_t>(w)] && label[static_cast<std::size_t>(w)] < 0) {
                    label[static_cast<std::size_t>(w)] = next;
                    stack.push_back(w);
                }
            }
        }
        ++next;
    }
    return label;
}

std::vector<std::vector<Vertex>> components(const Graph& g, std::span<const Vertex> keep) {
    std::vector<char> allowed(static_cast<std::size_t>(g.vertex_count()), 0);
    for (Vertex v : keep) {
        if (!g.contains(v)) {
            throw PreconditionError("vertex " + std::to_string(v) + " out of range");
        }
        allowed[static_cast<std::size_t>(v)] = 1;
    }
    const auto label = component_labels(g, allowed);
    std::vector<std::vector<Vertex>> parts;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        const int l = label[static_cast<std::size_t>(v)];
        if (l < 0) {
            continue;
        }
        if (static_cast<std::size_t>(l) >= parts.size()) {
            parts.resize(static_cast<std::size_t>(l) + 1);
        }
        parts[static_cast<std::size_t>(l)].push_back(v);
    }
    return parts;
}

bool is_connected(const Graph& g) {
    if (g.vertex_count() == 0) {
        return true;
    }
    const auto dist = bfs_distances(g, 0);
    return std::ranges::all_of(dist, [](Distance d) { return d.is_finite(); });
}

void require_connected(const Graph& g, const char* what) {
    if (!is_connected(g)) {
        throw PreconditionError(std::string(what) + " requires a connected graph");
    }
}

std::vector<Vertex> shortest_path(const Graph& g, Vertex s, Vertex t, const std::vector<char>& allowed) {
    if (!g.contains(s) || !allowed[static_cast<std::size_t>(s)]) {
        return {};
    }
    const auto from_t = bfs_distances(g, t, allowed);
    if (!from_t[static_cast<std::size_t>(s)].is_finite()) {
        return {};
    }
    std::vector<Vertex> path{s};
    Vertex cur = s;
    while (cur != t) {
        const int want = from_t[static_cast<std::size_t>(cur)].hops() - 1;
        for (Vertex w : g.neighbors(cur)) {
            if (from_t[static_cast<std::size_t>(w)] == Distance(want)) {
                cur = w;
                break;
            }
        }
        path.push_back(cur);
    }
    return path;
}

std::vector<Vertex> shortest_path(const Graph& g, Vertex s, Vertex t) {
    return shortest_path(g, s, t, std::vector<char>(static_cast<std::size_t>(g.vertex_count()), 1));
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
    std::vector<int> position(static_cast<std::size_t>(g.vertex_count()), -1);
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        position[static_cast<std::size_t>(vertices[i])] = static_cast<int>(i);
    }
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        for (Vertex w : g.neighbors(vertices[i])) {
            const int j = position[static_cast<std::size_t>(w)];
            if (j > static_cast<int>(i)) {
                edges.emplace_back(static_cast<int>(i), j);
            }
        }
    }
    return Graph(static_cast<int>(vertices.size()), edges);
}

Distance diameter(const Graph& g) {
    Distance best(0);
    for (Vertex s = 0; s < g.vertex_count(); ++s) {
        for (Distance d : bfs_distances(g, s)) {
            best = std::max(best, d);
        }
    }
    return best;
}

}  // namespace dwidth
