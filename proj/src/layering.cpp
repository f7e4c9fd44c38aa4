#include "dwidth/layering.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <string>

namespace dwidth {

Layering build_layering(const Graph& g, Vertex root) {
    if (!g.contains(root)) {
        throw PreconditionError("layering root " + std::to_string(root) + " out of range");
    }
    require_connected(g, "build_layering");
    const auto n = static_cast<std::size_t>(g.vertex_count());
    Layering lay;
    lay.root = root;
    lay.depth.resize(n);
    const auto dist = bfs_distances(g, root);
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        const int d = dist[static_cast<std::size_t>(v)].hops();
        lay.depth[static_cast<std::size_t>(v)] = d;
        if (static_cast<std::size_t>(d) >= lay.layers.size()) {
            lay.layers.resize(static_cast<std::size_t>(d) + 1);
        }
        lay.layers[static_cast<std::size_t>(d)].push_back(v);
    }

    // Union-find over G[L_{>=i}], growing i downwards.
    std::vector<Vertex> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](Vertex x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
        }
        return x;
    };
    std::vector<std::vector<std::vector<Vertex>>> per_layer(lay.layers.size());
    for (std::size_t i = lay.layers.size(); i-- > 0;) {
        for (Vertex v : lay.layers[i]) {
            for (Vertex w : g.neighbors(v)) {
                if (static_cast<std::size_t>(lay.depth[static_cast<std::size_t>(w)]) >= i) {
                    parent[static_cast<std::size_t>(find(v))] = find(w);
                }
            }
        }
        std::map<Vertex, std::vector<Vertex>> groups;
        for (Vertex v : lay.layers[i]) {
            groups[find(v)].push_back(v);
        }
        for (auto& [rep, members] : groups) {
            per_layer[i].push_back(std::move(members));
        }
        std::ranges::sort(per_layer[i], {}, [](const auto& members) { return members.front(); });
    }

    lay.class_of.assign(n, -1);
    for (std::size_t i = 0; i < per_layer.size(); ++i) {
        for (auto& members : per_layer[i]) {
            const int index = static_cast<int>(lay.classes.size());
            for (Vertex v : members) {
                lay.class_of[static_cast<std::size_t>(v)] = index;
            }
            lay.classes.push_back({static_cast<int>(i), std::move(members), -1});
        }
    }
    for (auto& cls : lay.classes) {
        if (cls.layer == 0) {
            continue;
        }
        for (Vertex v : cls.members) {
            for (Vertex w : g.neighbors(v)) {
                if (lay.depth[static_cast<std::size_t>(w)] == cls.layer - 1) {
                    const int c = lay.class_of[static_cast<std::size_t>(w)];
                    ensure(cls.parent < 0 || cls.parent == c, "layer class has two parent classes");
                    cls.parent = c;
                }
            }
        }
        ensure(cls.parent >= 0, "layer class has no parent class");
    }
    return lay;
}

TreeDecomposition layering_decomposition(const Layering& lay) {
    TreeDecomposition td;
    td.node_count = static_cast<int>(lay.classes.size());
    for (std::size_t a = 0; a < lay.classes.size(); ++a) {
        const auto& cls = lay.classes[a];
        std::vector<Vertex> bag = cls.members;
        if (cls.parent >= 0) {
            td.tree_edges.emplace_back(cls.parent, static_cast<int>(a));
            const auto& up = lay.classes[static_cast<std::size_t>(cls.parent)].members;
            bag.insert(bag.end(), up.begin(), up.end());
        }
        std::ranges::sort(bag);
        td.bags.push_back(std::move(bag));
    }
    return td;
}

ClassSpread widest_class_pair(const DistanceMatrix& dist, const Layering& lay) {
    ClassSpread best;
    for (std::size_t a = 0; a < lay.classes.size(); ++a) {
        const auto& members = lay.classes[a].members;
        for (std::size_t i = 0; i < members.size(); ++i) {
            for (std::size_t j = i + 1; j < members.size(); ++j) {
                const int d = dist.hops(members[i], members[j]);
                // Classes are visited in (layer, smallest member) order and pairs
                // lexicographically, so strict improvement keeps the smallest tie.
                if (d > best.distance) {
                    best = {d, static_cast<int>(a), members[i], members[j]};
                }
            }
        }
    }
    return best;
}

namespace {

constexpr std::size_t kClimbCap = 256;

// Shortest paths from `from` towards the root of exactly `steps` edges, in
// lexicographic order of vertex ids; at most kClimbCap of them.
std::vector<std::vector<Vertex>> climbs(const Graph& g, const Layering& lay, Vertex from, int steps) {
    std::vector<std::vector<Vertex>> out;
    std::vector<Vertex> path{from};
    auto go = [&](auto&& self) -> void {
        if (out.size() >= kClimbCap) {
            return;
        }
        if (static_cast<int>(path.size()) == steps + 1) {
            out.push_back(path);
            return;
        }
        const int want = lay.depth[static_cast<std::size_t>(path.back())] - 1;
        for (Vertex w : g.neighbors(path.back())) {
            if (lay.depth[static_cast<std::size_t>(w)] == want) {
                path.push_back(w);
                self(self);
                path.pop_back();
            }
        }
    };
    go(go);
    ensure(!out.empty(), "no neighbour one layer closer to the root");
    return out;
}

std::vector<char> layer_mask(const Layering& lay, int lo, int hi) {
    std::vector<char> mask(lay.depth.size(), 0);
    for (std::size_t v = 0; v < lay.depth.size(); ++v) {
        mask[v] = lay.depth[v] >= lo && lay.depth[v] <= hi;
    }
    return mask;
}

// Pairs a in P, b in Q away from u, v are the only ones that can break the
// cycle; everything else is bounded by layer differences.
bool climbs_compatible(const DistanceMatrix& dist, const std::vector<Vertex>& p_path,
                       const std::vector<Vertex>& q_path, int k) {
    for (int x = 1; x <= k; ++x) {
        for (int y = 1; y <= k; ++y) {
            const Vertex a = p_path[static_cast<std::size_t>(x)];
            const Vertex b = q_path[static_cast<std::size_t>(y)];
            if (x == k && y == k) {
                continue;
            }
            if (a == b) {
                return false;
            }
            const int near = x + y;
            if (dist.hops(a, b) < std::min(near, 2 * k - near)) {
                return false;
            }
        }
    }
    return true;
}

std::optional<LoadedCycle> assemble(const Graph& g, const DistanceMatrix& dist, const Layering& lay, int i, int k,
                                    const std::vector<Vertex>& p_path, const std::vector<Vertex>& q_path) {
    const Vertex u = p_path.front();
    const Vertex v = q_path.front();
    const Vertex p = p_path.back();
    const Vertex q = q_path.back();
    const auto r_path = shortest_path(g, u, v, layer_mask(lay, i, std::numeric_limits<int>::max()));  // u .. v
    ensure(!r_path.empty(), "class members are not joined inside G[L_{>=i}]");
    std::vector<Vertex> s_path{p};  // p .. q
    if (p != q) {
        s_path = shortest_path(g, p, q, layer_mask(lay, 0, i - k));
        ensure(!s_path.empty(), "no p-q path inside G[L_{<=i-k}]");
    }

    // u -P-> p -S-> q -Q^-1-> v -R^-1-> (back to u)
    std::vector<Vertex> cycle(p_path.begin(), p_path.end());
    cycle.insert(cycle.end(), s_path.begin() + 1, s_path.end());
    cycle.insert(cycle.end(), q_path.rbegin() + 1, q_path.rend());
    cycle.insert(cycle.end(), r_path.rbegin() + 1, r_path.rend() - 1);

    std::vector<Edge> loaded;
    for (std::size_t j = 0; j + 1 < p_path.size(); ++j) {
        loaded.emplace_back(p_path[j], p_path[j + 1]);
        loaded.emplace_back(q_path[j], q_path[j + 1]);
    }

    // The LoadedCycle constructor rejects repeated vertices, so a failure of the
    // disjointness argument surfaces here.
    std::optional<LoadedCycle> lc;
    try {
        lc.emplace(std::move(cycle), loaded);
    } catch (const PreconditionError& e) {
        throw InvariantViolation(std::string("layering witness is not a cycle: ") + e.what());
    }
    ensure(lc->load() == 2 * k, "layering witness load differs from 2k");
    if (is_geodesic_loaded(g, dist, *lc)) {
        return std::nullopt;
    }
    return lc;
}

}  // namespace

std::optional<LayeringWitness> extract_witness(const Graph& g, const Layering& lay) {
    require_connected(g, "extract_witness");
    return extract_witness(g, all_pairs_distances(g), lay);
}

std::optional<LayeringWitness> extract_witness(const Graph& g, const DistanceMatrix& dist, const Layering& lay) {
    const ClassSpread widest = widest_class_pair(dist, lay);
    if (widest.distance <= 0) {
        return std::nullopt;
    }
    const int m = widest.distance;

    // Every pair attaining m, in tie-break order.
    std::vector<ClassSpread> pairs;
    for (std::size_t a = 0; a < lay.classes.size(); ++a) {
        const auto& members = lay.classes[a].members;
        for (std::size_t x = 0; x < members.size(); ++x) {
            for (std::size_t y = x + 1; y < members.size(); ++y) {
                if (dist.hops(members[x], members[y]) == m) {
                    pairs.push_back({m, static_cast<int>(a), members[x], members[y]});
                }
            }
        }
    }

    auto attempt = [&](const ClassSpread& pair, int k, bool search) -> std::optional<LayeringWitness> {
        const int i = lay.classes[static_cast<std::size_t>(pair.class_index)].layer;
        ensure(i >= k, "widest class lies above layer k");
        auto p_paths = climbs(g, lay, pair.u, k);
        auto q_paths = climbs(g, lay, pair.v, k);
        if (!search) {
            p_paths.resize(1);
            q_paths.resize(1);
        }
        for (const auto& p_path : p_paths) {
            for (const auto& q_path : q_paths) {
                if (!climbs_compatible(dist, p_path, q_path, k)) {
                    continue;
                }
                if (auto lc = assemble(g, dist, lay, i, k, p_path, q_path)) {
                    return LayeringWitness{std::move(*lc), lay.root, i, pair.u, pair.v, m};
                }
            }
        }
        return std::nullopt;
    };

    for (const auto& pair : pairs) {
        if (auto w = attempt(pair, (m + 1) / 2, true)) {
            return w;
        }
    }
    // With 2k <= m the first climbs always work.
    auto w = attempt(widest, m / 2, false);
    ensure(w.has_value(), "layering witness is not a geodesic loaded cycle");
    return w;
}

LayeringRun run_layering(const Graph& g, const DistanceMatrix& dist, Vertex root) {
    const Layering lay = build_layering(g, root);
    LayeringRun run;
    run.root = root;
    run.decomposition = layering_decomposition(lay);
    run.outer_diameter = outer_diameter(dist, run.decomposition).hops();
    run.spread = widest_class_pair(dist, lay).distance;
    run.witness = extract_witness(g, dist, lay);
    return run;
}

RootSweep sweep_roots(const Graph& g, const DistanceMatrix& dist) {
    RootSweep sweep;
    for (Vertex r = 0; r < g.vertex_count(); ++r) {
        sweep.runs.push_back(run_layering(g, dist, r));
    }
    auto load = [](const LayeringRun& run) { return run.witness ? run.witness->cycle.load() : 0; };
    for (std::size_t i = 1; i < sweep.runs.size(); ++i) {
        if (sweep.runs[i].outer_diameter < sweep.runs[sweep.best_decomposition].outer_diameter) {
            sweep.best_decomposition = i;
        }
        if (load(sweep.runs[i]) > load(sweep.runs[sweep.best_witness])) {
            sweep.best_witness = i;
        }
    }
    return sweep;
}

}  // namespace dwidth
