#include "dwidth/chordal.hpp"

#include <algorithm>
#include <string>

namespace dwidth {

namespace {

std::string describe(const std::vector<Vertex>& cycle) {
    std::string out;
    for (std::size_t i = 0; i < cycle.size(); ++i) {
        out += (i ? "-" : "") + std::to_string(cycle[i]);
    }
    return out;
}

}  // namespace

NotChordalError::NotChordalError(std::vector<Vertex> cycle)
    : PreconditionError("graph is not chordal; chordless cycle " + describe(cycle)), cycle_(std::move(cycle)) {}

std::vector<Vertex> maximum_cardinality_search(const Graph& g) {
    const auto n = static_cast<std::size_t>(g.vertex_count());
    std::vector<int> weight(n, 0);
    std::vector<char> visited(n, 0);
    std::vector<Vertex> order;
    order.reserve(n);
    for (std::size_t step = 0; step < n; ++step) {
        Vertex best = -1;
        for (Vertex v = 0; v < g.vertex_count(); ++v) {
            if (!visited[static_cast<std::size_t>(v)] &&
                (best < 0 || weight[static_cast<std::size_t>(v)] > weight[static_cast<std::size_t>(best)])) {
                best = v;
            }
        }
        visited[static_cast<std::size_t>(best)] = 1;
        order.push_back(best);
        for (Vertex w : g.neighbors(best)) {
            ++weight[static_cast<std::size_t>(w)];
        }
    }
    return order;
}

bool is_perfect_elimination_ordering(const Graph& g, const std::vector<Vertex>& order) {
    std::vector<int> position(static_cast<std::size_t>(g.vertex_count()));
    for (std::size_t i = 0; i < order.size(); ++i) {
        position[static_cast<std::size_t>(order[i])] = static_cast<int>(i);
    }
    for (Vertex v : order) {
        std::vector<Vertex> later;
        for (Vertex w : g.neighbors(v)) {
            if (position[static_cast<std::size_t>(w)] > position[static_cast<std::size_t>(v)]) {
                later.push_back(w);
            }
        }
        for (std::size_t i = 0; i < later.size(); ++i) {
            for (std::size_t j = i + 1; j < later.size(); ++j) {
                if (!g.adjacent(later[i], later[j])) {
                    return false;
                }
            }
        }
    }
    return true;
}

std::optional<std::vector<Vertex>> perfect_elimination_ordering(const Graph& g) {
    auto order = maximum_cardinality_search(g);
    std::ranges::reverse(order);
    if (is_perfect_elimination_ordering(g, order)) {
        return order;
    }
    return std::nullopt;
}

bool is_chordal(const Graph& g) {
    return perfect_elimination_ordering(g).has_value();
}

std::optional<std::vector<Vertex>> chordless_cycle(const Graph& g) {
    // A chordless cycle through v uses two non-adjacent neighbours a, b of v and
    // an induced a-b path avoiding the rest of N[v]; a shortest such path is induced.
    const auto n = static_cast<std::size_t>(g.vertex_count());
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        const auto nbrs = g.neighbors(v);
        for (std::size_t i = 0; i < nbrs.size(); ++i) {
            for (std::size_t j = i + 1; j < nbrs.size(); ++j) {
                const Vertex a = nbrs[i];
                const Vertex b = nbrs[j];
                if (g.adjacent(a, b)) {
                    continue;
                }
                std::vector<char> allowed(n, 1);
                allowed[static_cast<std::size_t>(v)] = 0;
                for (Vertex w : nbrs) {
                    if (w != a && w != b) {
                        allowed[static_cast<std::size_t>(w)] = 0;
                    }
                }
                auto path = shortest_path(g, a, b, allowed);
                if (!path.empty()) {
                    path.insert(path.begin(), v);
                    return path;
                }
            }
        }
    }
    return std::nullopt;
}

TreeDecomposition chordal_clique_tree(const Graph& g) {
    const auto order = perfect_elimination_ordering(g);
    if (!order) {
        auto cycle = chordless_cycle(g);
        ensure(cycle.has_value(), "MCS rejected a graph without a chordless cycle");
        throw NotChordalError(std::move(*cycle));
    }
    TreeDecomposition td;
    if (g.vertex_count() == 0) {
        td.node_count = 1;
        td.bags.emplace_back();
        return td;
    }
    std::vector<int> position(static_cast<std::size_t>(g.vertex_count()));
    for (std::size_t i = 0; i < order->size(); ++i) {
        position[static_cast<std::size_t>((*order)[i])] = static_cast<int>(i);
    }
    std::vector<std::vector<Vertex>> cliques;
    for (Vertex v : *order) {
        std::vector<Vertex> clique{v};
        for (Vertex w : g.neighbors(v)) {
            if (position[static_cast<std::size_t>(w)] > position[static_cast<std::size_t>(v)]) {
                clique.push_back(w);
            }
        }
        std::ranges::sort(clique);
        cliques.push_back(std::move(clique));
    }
    std::vector<std::vector<Vertex>> maximal;
    for (std::size_t i = 0; i < cliques.size(); ++i) {
        bool dominated = false;
        for (std::size_t j = 0; j < cliques.size() && !dominated; ++j) {
            if (i == j || cliques[j].size() < cliques[i].size()) {
                continue;
            }
            // Equal cliques: keep only the first copy.
            if (cliques[j] == cliques[i]) {
                dominated = j < i;
            } else {
                dominated = std::ranges::includes(cliques[j], cliques[i]);
            }
        }
        if (!dominated) {
            maximal.push_back(cliques[i]);
        }
    }
    std::ranges::sort(maximal);

    // Maximum-weight spanning tree of the clique intersection graph (Prim).
    const std::size_t c = maximal.size();
    auto overlap = [&](std::size_t a, std::size_t b) {
        std::vector<Vertex> common;
        std::ranges::set_intersection(maximal[a], maximal[b], std::back_inserter(common));
        return static_cast<int>(common.size());
    };
    std::vector<char> in_tree(c, 0);
    std::vector<int> best(c, -1);
    std::vector<int> link(c, -1);
    in_tree[0] = 1;
    for (std::size_t j = 1; j < c; ++j) {
        best[j] = overlap(0, j);
        link[j] = 0;
    }
    td.node_count = static_cast<int>(c);
    for (std::size_t added = 1; added < c; ++added) {
        std::size_t pick = c;
        for (std::size_t j = 0; j < c; ++j) {
            if (!in_tree[j] && (pick == c || best[j] > best[pick])) {
                pick = j;
            }
        }
        in_tree[pick] = 1;
        td.tree_edges.emplace_back(link[pick], static_cast<int>(pick));
        for (std::size_t j = 0; j < c; ++j) {
            if (!in_tree[j]) {
                const int w = overlap(pick, j);
                if (w > best[j]) {
                    best[j] = w;
                    link[j] = static_cast<int>(pick);
                }
            }
        }
    }
    td.bags = std::move(maximal);
    ensure(!validate(g, td).has_value(), "clique tree is not a tree-decomposition");
    return td;
}

}  // namespace dwidth
