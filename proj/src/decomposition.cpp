#include "dwidth/decomposition.hpp"

#include <algorithm>
#include <numeric>

namespace dwidth {

void TreeDecomposition::normalize() {
    for (auto& bag : bags) {
        std::ranges::sort(bag);
        bag.erase(std::unique(bag.begin(), bag.end()), bag.end());
    }
}

std::vector<std::vector<Node>> TreeDecomposition::tree_adjacency() const {
    std::vector<std::vector<Node>> adj(static_cast<std::size_t>(node_count));
    for (const auto& [a, b] : tree_edges) {
        adj[static_cast<std::size_t>(a)].push_back(b);
        adj[static_cast<std::size_t>(b)].push_back(a);
    }
    for (auto& list : adj) {
        std::ranges::sort(list);
    }
    return adj;
}

namespace {

std::optional<std::string> tree_problem(int node_count, const std::vector<Edge>& tree_edges) {
    if (node_count < 1) {
        return "a tree needs at least one node";
    }
    if (static_cast<int>(tree_edges.size()) != node_count - 1) {
        return "a tree on " + std::to_string(node_count) + " nodes needs " + std::to_string(node_count - 1) +
               " edges, got " + std::to_string(tree_edges.size());
    }
    std::vector<int> parent(static_cast<std::size_t>(node_count));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
        }
        return x;
    };
    for (const auto& [a, b] : tree_edges) {
        if (a < 0 || b < 0 || a >= node_count || b >= node_count) {
            return "tree edge " + std::to_string(a) + "-" + std::to_string(b) + " has a node id out of range";
        }
        const int ra = find(a);
        const int rb = find(b);
        if (ra == rb) {
            return "tree edges contain a cycle through " + std::to_string(a) + "-" + std::to_string(b);
        }
        parent[static_cast<std::size_t>(ra)] = rb;
    }
    return std::nullopt;
}

}  // namespace

bool is_tree(int node_count, const std::vector<Edge>& tree_edges) {
    return !tree_problem(node_count, tree_edges).has_value();
}

void require_tree(int node_count, const std::vector<Edge>& tree_edges) {
    if (auto problem = tree_problem(node_count, tree_edges)) {
        throw PreconditionError(*problem);
    }
}

std::vector<Node> tree_path(const std::vector<std::vector<Node>>& adjacency, Node a, Node b) {
    std::vector<Node> parent(adjacency.size(), -1);
    std::vector<Node> stack{a};
    parent[static_cast<std::size_t>(a)] = a;
    while (!stack.empty()) {
        const Node x = stack.back();
        stack.pop_back();
        if (x == b) {
            break;
        }
        for (Node y : adjacency[static_cast<std::size_t>(x)]) {
            if (parent[static_cast<std::size_t>(y)] < 0) {
                parent[static_cast<std::size_t>(y)] = x;
                stack.push_back(y);
            }
        }
    }
    std::vector<Node> path{b};
    while (path.back() != a) {
        path.push_back(parent[static_cast<std::size_t>(path.back())]);
    }
    std::ranges::reverse(path);
    return path;
}

std::optional<Violation> validate(const Graph& g, const TreeDecomposition& td) {
    using Axiom = Violation::Axiom;
    if (auto problem = tree_problem(td.node_count, td.tree_edges)) {
        return Violation{Axiom::malformed, *problem, {}};
    }
    if (static_cast<int>(td.bags.size()) != td.node_count) {
        return Violation{Axiom::malformed, "number of bags differs from number of tree nodes", {}};
    }
    const auto n = static_cast<std::size_t>(g.vertex_count());
    // nodes_of[v] = tree nodes whose bag contains v
    std::vector<std::vector<Node>> nodes_of(n);
    std::vector<std::vector<char>> in_bag(td.bags.size(), std::vector<char>(n, 0));
    for (std::size_t t = 0; t < td.bags.size(); ++t) {
        for (Vertex v : td.bags[t]) {
            if (!g.contains(v)) {
                return Violation{Axiom::malformed, "bag " + std::to_string(t) + " holds vertex id out of range", {v}};
            }
            if (!in_bag[t][static_cast<std::size_t>(v)]) {
                in_bag[t][static_cast<std::size_t>(v)] = 1;
                nodes_of[static_cast<std::size_t>(v)].push_back(static_cast<Node>(t));
            }
        }
    }
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        if (nodes_of[static_cast<std::size_t>(v)].empty()) {
            return Violation{Axiom::vertex_cover, "vertex " + std::to_string(v) + " is in no bag", {v}};
        }
    }
    for (const auto& [u, v] : g.edges()) {
        const bool covered = std::ranges::any_of(nodes_of[static_cast<std::size_t>(u)], [&](Node t) {
            return in_bag[static_cast<std::size_t>(t)][static_cast<std::size_t>(v)] != 0;
        });
        if (!covered) {
            return Violation{Axiom::edge_cover,
                             "edge " + std::to_string(u) + "-" + std::to_string(v) + " is in no bag",
                             {u, v}};
        }
    }
    const auto adjacency = td.tree_adjacency();
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        const auto& nodes = nodes_of[static_cast<std::size_t>(v)];
        auto holds = [&](Node t) { return in_bag[static_cast<std::size_t>(t)][static_cast<std::size_t>(v)] != 0; };
        // The nodes holding v induce a forest; it is a subtree iff one search reaches them all.
        std::vector<char> seen(adjacency.size(), 0);
        std::vector<Node> stack{nodes.front()};
        seen[static_cast<std::size_t>(nodes.front())] = 1;
        std::size_t reached = 1;
        while (!stack.empty()) {
            const Node x = stack.back();
            stack.pop_back();
            for (Node y : adjacency[static_cast<std::size_t>(x)]) {
                if (!seen[static_cast<std::size_t>(y)] && holds(y)) {
                    seen[static_cast<std::size_t>(y)] = 1;
                    ++reached;
                    stack.push_back(y);
                }
            }
        }
        if (reached == nodes.size()) {
            continue;
        }
        const Node r = nodes.front();
        const Node t = *std::ranges::find_if(nodes, [&](Node x) { return !seen[static_cast<std::size_t>(x)]; });
        const auto path = tree_path(adjacency, r, t);
        const Node s = *std::ranges::find_if(path, [&](Node x) { return !holds(x); });
        return Violation{Axiom::subtree,
                         "vertex " + std::to_string(v) + " is in bags " + std::to_string(r) + " and " +
                             std::to_string(t) + " but not in bag " + std::to_string(s) + " between them",
                         {v, r, s, t}};
    }
    return std::nullopt;
}

void require_valid(const Graph& g, const TreeDecomposition& td) {
    if (auto violation = validate(g, td)) {
        throw PreconditionError("invalid tree-decomposition: " + violation->message);
    }
}

Distance outer_diameter(const DistanceMatrix& dist, const TreeDecomposition& td) {
    Distance best(0);
    for (const auto& bag : td.bags) {
        for (std::size_t i = 0; i < bag.size(); ++i) {
            for (std::size_t j = i + 1; j < bag.size(); ++j) {
                best = std::max(best, dist.at(bag[i], bag[j]));
            }
        }
    }
    return best;
}

Distance outer_diameter(const Graph& g, const TreeDecomposition& td) {
    require_valid(g, td);
    return outer_diameter(all_pairs_distances(g), td);
}

Distance inner_diameter(const Graph& g, const TreeDecomposition& td) {
    require_valid(g, td);
    Distance best(0);
    for (const auto& bag : td.bags) {
        if (!bag.empty()) {
            best = std::max(best, diameter(induced_subgraph(g, bag)));
        }
    }
    return best;
}

namespace {

// Marks every vertex lying on a simple path of length <= budget that starts in
// `bag` and ends in `bag`.
class PathExpander {
public:
    PathExpander(const Graph& g, const std::vector<Vertex>& bag, int budget)
        : g_(g),
          budget_(budget),
          in_bag_(static_cast<std::size_t>(g.vertex_count()), 0),
          on_path_(static_cast<std::size_t>(g.vertex_count()), 0),
          marked_(static_cast<std::size_t>(g.vertex_count()), 0),
          to_bag_(static_cast<std::size_t>(g.vertex_count()), -1) {
        std::vector<Vertex> frontier;
        for (Vertex v : bag) {
            in_bag_[static_cast<std::size_t>(v)] = 1;
            to_bag_[static_cast<std::size_t>(v)] = 0;
            frontier.push_back(v);
        }
        // multi-source BFS: hop distance to the nearest bag vertex
        for (std::size_t head = 0; head < frontier.size(); ++head) {
            const Vertex u = frontier[head];
            for (Vertex w : g.neighbors(u)) {
                if (to_bag_[static_cast<std::size_t>(w)] < 0) {
                    to_bag_[static_cast<std::size_t>(w)] = to_bag_[static_cast<std::size_t>(u)] + 1;
                    frontier.push_back(w);
                }
            }
        }
    }

    std::vector<Vertex> run(const std::vector<Vertex>& bag) {
        for (Vertex start : bag) {
            extend(start, 0);
        }
        std::vector<Vertex> out;
        for (Vertex v = 0; v < g_.vertex_count(); ++v) {
            if (marked_[static_cast<std::size_t>(v)]) {
                out.push_back(v);
            }
        }
        return out;
    }

private:
    void extend(Vertex v, int length) {
        on_path_[static_cast<std::size_t>(v)] = 1;
        path_.push_back(v);
        if (in_bag_[static_cast<std::size_t>(v)]) {
            for (Vertex x : path_) {
                marked_[static_cast<std::size_t>(x)] = 1;
            }
        }
        if (length < budget_) {
            for (Vertex w : g_.neighbors(v)) {
                const int reach = to_bag_[static_cast<std::size_t>(w)];
                if (!on_path_[static_cast<std::size_t>(w)] && reach >= 0 && length + 1 + reach <= budget_) {
                    extend(w, length + 1);
                }
            }
        }
        path_.pop_back();
        on_path_[static_cast<std::size_t>(v)] = 0;
    }

    const Graph& g_;
    int budget_;
    std::vector<char> in_bag_;
    std::vector<char> on_path_;
    std::vector<char> marked_;
    std::vector<int> to_bag_;
    std::vector<Vertex> path_;
};

}  // namespace

TreeDecomposition expand_bags(const Graph& g, const TreeDecomposition& td, int d) {
    require_valid(g, td);
    if (d < 0) {
        throw PreconditionError("expansion radius must be non-negative");
    }
    const Distance width = outer_diameter(all_pairs_distances(g), td);
    if (width > Distance(d)) {
        throw PreconditionError("decomposition has outer diameter " + width.to_string() + " > " + std::to_string(d));
    }
    TreeDecomposition out = td;
    for (auto& bag : out.bags) {
        if (!bag.empty()) {
            bag = PathExpander(g, bag, d).run(bag);
        }
    }
    ensure(!validate(g, out).has_value(), "expanded bags do not form a tree-decomposition");
    ensure(inner_diameter(g, out) <= Distance(2 * d), "expanded bags have inner diameter above 2d");
    return out;
}

}  // namespace dwidth
