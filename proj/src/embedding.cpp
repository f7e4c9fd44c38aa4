#include "dwidth/embedding.hpp"

#include <algorithm>
#include <numeric>

namespace dwidth {

namespace {

using Adjacency = std::vector<std::vector<Node>>;

Adjacency adjacency_of(int node_count, const std::vector<Edge>& edges) {
    Adjacency adj(static_cast<std::size_t>(node_count));
    for (const auto& [a, b] : edges) {
        adj[static_cast<std::size_t>(a)].push_back(b);
        adj[static_cast<std::size_t>(b)].push_back(a);
    }
    return adj;
}

// BFS from one or more sources; -1 for unreached nodes (only when `limit`
// stops the search).
std::vector<int> tree_distances(const Adjacency& adj, const std::vector<Node>& sources, int limit = -1) {
    std::vector<int> dist(adj.size(), -1);
    std::vector<Node> queue;
    for (Node s : sources) {
        if (dist[static_cast<std::size_t>(s)] < 0) {
            dist[static_cast<std::size_t>(s)] = 0;
            queue.push_back(s);
        }
    }
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const Node x = queue[head];
        if (limit >= 0 && dist[static_cast<std::size_t>(x)] >= limit) {
            continue;
        }
        for (Node y : adj[static_cast<std::size_t>(x)]) {
            if (dist[static_cast<std::size_t>(y)] < 0) {
                dist[static_cast<std::size_t>(y)] = dist[static_cast<std::size_t>(x)] + 1;
                queue.push_back(y);
            }
        }
    }
    return dist;
}

// d_T(phi(u), phi(v)) lookup: one BFS per distinct image node.
class ImageDistances {
public:
    ImageDistances(const Adjacency& adj, const std::vector<Node>& phi) : phi_(phi), row_(adj.size(), -1) {
        for (Node t : phi) {
            if (row_[static_cast<std::size_t>(t)] < 0) {
                row_[static_cast<std::size_t>(t)] = static_cast<int>(rows_.size());
                rows_.push_back(tree_distances(adj, {t}));
            }
        }
    }

    int between(Vertex u, Vertex v) const {
        const auto& row = rows_[static_cast<std::size_t>(row_[static_cast<std::size_t>(phi_[static_cast<std::size_t>(u)])])];
        return row[static_cast<std::size_t>(phi_[static_cast<std::size_t>(v)])];
    }

private:
    const std::vector<Node>& phi_;
    std::vector<int> row_;
    std::vector<std::vector<int>> rows_;
};

}  // namespace

void require_embedding(const Graph& g, const TreeEmbedding& emb) {
    require_tree(emb.tree_nodes, emb.tree_edges);
    if (static_cast<int>(emb.phi.size()) != g.vertex_count()) {
        throw PreconditionError("embedding maps " + std::to_string(emb.phi.size()) + " vertices, graph has " +
                                std::to_string(g.vertex_count()));
    }
    for (Node t : emb.phi) {
        if (t < 0 || t >= emb.tree_nodes) {
            throw PreconditionError("embedding maps a vertex to missing tree node " + std::to_string(t));
        }
    }
}

TreeEmbedding decomposition_to_embedding(const Graph& g, const TreeDecomposition& td) {
    require_connected(g, "decomposition_to_embedding");
    require_valid(g, td);
    if (g.vertex_count() == 0) {
        return {};
    }
    const DistanceMatrix dist = all_pairs_distances(g);
    const int k = outer_diameter(dist, td).hops();
    const auto s = static_cast<std::size_t>(td.node_count);
    const Adjacency full = td.tree_adjacency();

    EmbeddingProvenance prov;
    prov.width = k;
    prov.beta.assign(s, -1);
    prov.root_length.assign(s, -1);
    prov.edge_length.assign(td.tree_edges.size(), -1);
    prov.sigma.assign(s, -1);

    // Nodes with nonempty bags form a subtree because G is connected.
    std::vector<char> live(s, 0);
    for (std::size_t t = 0; t < s; ++t) {
        live[t] = !td.bags[t].empty();
    }
    prov.root = static_cast<Node>(std::ranges::find(live, 1) - live.begin());
    const Vertex beta_root = td.bags[static_cast<std::size_t>(prov.root)].front();

    std::vector<Node> parent(s, -1);
    std::vector<Node> order{prov.root};
    std::vector<char> seen(s, 0);
    seen[static_cast<std::size_t>(prov.root)] = 1;
    for (std::size_t head = 0; head < order.size(); ++head) {
        const Node x = order[head];
        for (Node y : full[static_cast<std::size_t>(x)]) {
            if (live[static_cast<std::size_t>(y)] && !seen[static_cast<std::size_t>(y)]) {
                seen[static_cast<std::size_t>(y)] = 1;
                parent[static_cast<std::size_t>(y)] = x;
                order.push_back(y);
            }
        }
    }
    ensure(static_cast<std::size_t>(std::ranges::count(live, 1)) == order.size(),
           "nonempty bags do not induce a subtree");

    for (Node t : order) {
        Vertex pick = -1;
        for (Vertex v : td.bags[static_cast<std::size_t>(t)]) {
            if (pick < 0 || dist.hops(v, beta_root) < dist.hops(pick, beta_root)) {
                pick = v;
            }
        }
        prov.beta[static_cast<std::size_t>(t)] = pick;
        prov.root_length[static_cast<std::size_t>(t)] = dist.hops(pick, beta_root);
    }
    for (Node t : order) {
        const Node up = parent[static_cast<std::size_t>(t)];
        if (up >= 0) {
            ensure(prov.root_length[static_cast<std::size_t>(up)] <= prov.root_length[static_cast<std::size_t>(t)],
                   "beta distances to the root are not monotone along the tree");
        }
    }
    for (std::size_t e = 0; e < td.tree_edges.size(); ++e) {
        const auto [a, b] = td.tree_edges[e];
        if (live[static_cast<std::size_t>(a)] && live[static_cast<std::size_t>(b)]) {
            prov.edge_length[e] = std::abs(prov.root_length[static_cast<std::size_t>(a)] -
                                           prov.root_length[static_cast<std::size_t>(b)]);
        }
    }

    prov.phi.assign(static_cast<std::size_t>(g.vertex_count()), -1);
    for (std::size_t t = 0; t < s; ++t) {
        for (Vertex v : td.bags[t]) {
            if (prov.phi[static_cast<std::size_t>(v)] < 0) {
                prov.phi[static_cast<std::size_t>(v)] = static_cast<Node>(t);
            }
        }
    }

    // Minimal subtree spanning the image: strip non-image leaves.
    std::vector<char> keep = live;
    std::vector<char> image(s, 0);
    for (Node t : prov.phi) {
        image[static_cast<std::size_t>(t)] = 1;
    }
    std::vector<int> degree(s, 0);
    for (const auto& [a, b] : td.tree_edges) {
        if (keep[static_cast<std::size_t>(a)] && keep[static_cast<std::size_t>(b)]) {
            ++degree[static_cast<std::size_t>(a)];
            ++degree[static_cast<std::size_t>(b)];
        }
    }
    std::vector<Node> leaves;
    for (std::size_t t = 0; t < s; ++t) {
        if (keep[t] && !image[t] && degree[t] <= 1) {
            leaves.push_back(static_cast<Node>(t));
        }
    }
    while (!leaves.empty()) {
        const Node x = leaves.back();
        leaves.pop_back();
        if (!keep[static_cast<std::size_t>(x)]) {
            continue;
        }
        keep[static_cast<std::size_t>(x)] = 0;
        for (Node y : full[static_cast<std::size_t>(x)]) {
            if (keep[static_cast<std::size_t>(y)] && --degree[static_cast<std::size_t>(y)] <= 1 &&
                !image[static_cast<std::size_t>(y)]) {
                leaves.push_back(y);
            }
        }
    }

    // Contract zero-length edges, then subdivide the rest.
    std::vector<Node> group(s);
    std::iota(group.begin(), group.end(), 0);
    auto find = [&](Node x) {
        while (group[static_cast<std::size_t>(x)] != x) {
            x = group[static_cast<std::size_t>(x)] = group[static_cast<std::size_t>(group[static_cast<std::size_t>(x)])];
        }
        return x;
    };
    for (std::size_t e = 0; e < td.tree_edges.size(); ++e) {
        const auto [a, b] = td.tree_edges[e];
        if (keep[static_cast<std::size_t>(a)] && keep[static_cast<std::size_t>(b)] && prov.edge_length[e] == 0) {
            const Node ra = find(a);
            const Node rb = find(b);
            group[static_cast<std::size_t>(std::max(ra, rb))] = std::min(ra, rb);
        }
    }
    TreeEmbedding emb;
    emb.tree_nodes = 0;
    std::vector<int> id_of_group(s, -1);
    for (std::size_t t = 0; t < s; ++t) {
        if (keep[t]) {
            const auto root = static_cast<std::size_t>(find(static_cast<Node>(t)));
            if (id_of_group[root] < 0) {
                id_of_group[root] = emb.tree_nodes++;
            }
            prov.sigma[t] = id_of_group[root];
        }
    }
    for (std::size_t e = 0; e < td.tree_edges.size(); ++e) {
        const auto [a, b] = td.tree_edges[e];
        const int len = prov.edge_length[e];
        if (!keep[static_cast<std::size_t>(a)] || !keep[static_cast<std::size_t>(b)] || len == 0) {
            continue;
        }
        Node prev = prov.sigma[static_cast<std::size_t>(a)];
        for (int step = 1; step < len; ++step) {
            const Node mid = emb.tree_nodes++;
            emb.tree_edges.emplace_back(prev, mid);
            prev = mid;
        }
        emb.tree_edges.emplace_back(prev, prov.sigma[static_cast<std::size_t>(b)]);
    }
    emb.phi.reserve(static_cast<std::size_t>(g.vertex_count()));
    for (Node t : prov.phi) {
        emb.phi.push_back(prov.sigma[static_cast<std::size_t>(t)]);
    }
    emb.provenance = std::move(prov);
    ensure(is_tree(emb.tree_nodes, emb.tree_edges), "contracted and subdivided tree is not a tree");
    ensure(additive_distortion(g, emb) <= 6 * k, "embedding distortion exceeds 6k");
    return emb;
}

int additive_distortion(const Graph& g, const TreeEmbedding& emb) {
    require_embedding(g, emb);
    const DistanceMatrix dist = all_pairs_distances(g);
    const Adjacency adj = adjacency_of(emb.tree_nodes, emb.tree_edges);
    const ImageDistances tree(adj, emb.phi);
    int worst = 0;
    for (Vertex u = 0; u < g.vertex_count(); ++u) {
        for (Vertex v = u + 1; v < g.vertex_count(); ++v) {
            worst = std::max(worst, std::abs(dist.hops(u, v) - tree.between(u, v)));
        }
    }
    return worst;
}

std::optional<QuasiIsometryViolation> check_quasi_isometry(const Graph& g, const TreeEmbedding& emb,
                                                           const Rational& L, const Rational& C) {
    using Kind = QuasiIsometryViolation::Kind;
    if (L < Rational(1) || C < Rational(0)) {
        throw PreconditionError("quasi-isometry constants need L >= 1 and C >= 0, got (" + L.to_string() + ", " +
                                C.to_string() + ")");
    }
    require_embedding(g, emb);
    const DistanceMatrix dist = all_pairs_distances(g);
    const Adjacency adj = adjacency_of(emb.tree_nodes, emb.tree_edges);
    const ImageDistances tree(adj, emb.phi);
    for (Vertex u = 0; u < g.vertex_count(); ++u) {
        for (Vertex v = u + 1; v < g.vertex_count(); ++v) {
            const Rational dt(tree.between(u, v));
            const Distance dg = dist.at(u, v);
            const std::string pair = std::to_string(u) + "," + std::to_string(v);
            if (!dg.is_finite()) {
                return QuasiIsometryViolation{Kind::contracts_too_much, u, v, -1,
                                              "pair (" + pair + ") is disconnected in the graph"};
            }
            const Rational dg_r(dg.hops());
            // (1/L) d_G - C <= d_T  <=>  d_G <= L (d_T + C)
            if (dg_r > L * (dt + C)) {
                return QuasiIsometryViolation{Kind::contracts_too_much, u, v, -1,
                                              "pair (" + pair + "): d_G = " + dg_r.to_string() +
                                                  " exceeds L (d_T + C) = " + (L * (dt + C)).to_string()};
            }
            if (dt > L * dg_r + C) {
                return QuasiIsometryViolation{Kind::stretches_too_much, u, v, -1,
                                              "pair (" + pair + "): d_T = " + dt.to_string() +
                                                  " exceeds L d_G + C = " + (L * dg_r + C).to_string()};
            }
        }
    }
    const auto cover = tree_distances(adj, emb.phi);
    for (Node y = 0; y < emb.tree_nodes; ++y) {
        if (Rational(cover[static_cast<std::size_t>(y)]) > C) {
            return QuasiIsometryViolation{Kind::not_dense, -1, -1, y,
                                          "tree node " + std::to_string(y) + " is at distance " +
                                              std::to_string(cover[static_cast<std::size_t>(y)]) +
                                              " from the image, above C = " + C.to_string()};
        }
    }
    return std::nullopt;
}

Rational least_quasi_isometry_constant(const Graph& g, const TreeEmbedding& emb, const Rational& L) {
    require_embedding(g, emb);
    require_connected(g, "least_quasi_isometry_constant");
    const DistanceMatrix dist = all_pairs_distances(g);
    const Adjacency adj = adjacency_of(emb.tree_nodes, emb.tree_edges);
    const ImageDistances tree(adj, emb.phi);
    Rational need(0);
    for (Vertex u = 0; u < g.vertex_count(); ++u) {
        for (Vertex v = u + 1; v < g.vertex_count(); ++v) {
            const Rational dt(tree.between(u, v));
            const Rational dg(dist.hops(u, v));
            need = std::max({need, dg / L - dt, dt - L * dg});
        }
    }
    for (int d : tree_distances(adj, emb.phi)) {
        need = std::max(need, Rational(d));
    }
    return need;
}

TreeDecomposition embedding_to_decomposition(const Graph& g, const TreeEmbedding& emb, const Rational& L,
                                             const Rational& C) {
    if (L < Rational(1) || C < Rational(0)) {
        throw PreconditionError("quasi-isometry constants need L >= 1 and C >= 0");
    }
    if (auto violation = check_quasi_isometry(g, emb, L, C)) {
        throw PreconditionError("not an (" + L.to_string() + ", " + C.to_string() +
                                ")-quasi-isometry: " + violation->message);
    }
    // d <= (L + C + 1) / 2  <=>  2 d den <= num
    const Rational reach = L + C + Rational(1);
    const auto radius = static_cast<int>(reach.num() / (2 * reach.den()));
    const Adjacency adj = adjacency_of(emb.tree_nodes, emb.tree_edges);
    TreeDecomposition td;
    td.node_count = emb.tree_nodes;
    td.tree_edges = emb.tree_edges;
    td.bags.resize(static_cast<std::size_t>(emb.tree_nodes));
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        const auto near = tree_distances(adj, {emb.phi[static_cast<std::size_t>(v)]}, radius);
        for (Node t = 0; t < emb.tree_nodes; ++t) {
            const int d = near[static_cast<std::size_t>(t)];
            if (d >= 0 && Rational(2 * d) <= reach) {
                td.bags[static_cast<std::size_t>(t)].push_back(v);
            }
        }
    }
    ensure(!validate(g, td).has_value(), "tree balls do not form a tree-decomposition");
    const Rational bound = L * reach + C;
    ensure(Rational(outer_diameter(all_pairs_distances(g), td).hops()) <= bound,
           "ball decomposition exceeds the L(L+C+1)+C bound");
    return td;
}

}  // namespace dwidth
