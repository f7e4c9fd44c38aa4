#include "dwidth/loaded_cycle.hpp"

#include <algorithm>
#include <string>

namespace dwidth {

LoadedCycle::LoadedCycle(std::vector<Vertex> cycle, const std::vector<Edge>& loaded_edges) : cycle_(std::move(cycle)) {
    index();
    std::vector<char> flags(cycle_.size(), 0);
    for (const auto& [a, b] : loaded_edges) {
        const auto pa = position_of(a);
        const auto pb = position_of(b);
        const std::size_t len = cycle_.size();
        if (!pa || !pb) {
            throw PreconditionError("loaded edge " + std::to_string(a) + "-" + std::to_string(b) +
                                    " has an end off the cycle");
        }
        if ((*pa + 1) % len == *pb) {
            flags[*pa] = 1;
        } else if ((*pb + 1) % len == *pa) {
            flags[*pb] = 1;
        } else {
            throw PreconditionError("loaded edge " + std::to_string(a) + "-" + std::to_string(b) +
                                    " is not an edge of the cycle");
        }
    }
    for (std::size_t i = 0; i < flags.size(); ++i) {
        prefix_.push_back(prefix_.back() + flags[i]);
    }
}

LoadedCycle LoadedCycle::from_flags(std::vector<Vertex> cycle, std::vector<char> flags) {
    if (flags.size() != cycle.size()) {
        throw PreconditionError("one load flag per cycle edge is required");
    }
    LoadedCycle lc(std::move(cycle), {});
    lc.prefix_.assign(1, 0);
    for (char f : flags) {
        lc.prefix_.push_back(lc.prefix_.back() + (f ? 1 : 0));
    }
    return lc;
}

LoadedCycle LoadedCycle::fully_loaded(std::vector<Vertex> cycle) {
    std::vector<char> flags(cycle.size(), 1);
    return from_flags(std::move(cycle), std::move(flags));
}

void LoadedCycle::index() {
    if (cycle_.size() < 3) {
        throw PreconditionError("a cycle needs at least 3 vertices");
    }
    lookup_.clear();
    for (std::size_t i = 0; i < cycle_.size(); ++i) {
        lookup_.emplace_back(cycle_[i], i);
    }
    std::ranges::sort(lookup_);
    for (std::size_t i = 1; i < lookup_.size(); ++i) {
        if (lookup_[i].first == lookup_[i - 1].first) {
            throw PreconditionError("cycle repeats vertex " + std::to_string(lookup_[i].first));
        }
    }
}

std::vector<Edge> LoadedCycle::loaded_edges() const {
    std::vector<Edge> out;
    for (std::size_t i = 0; i < cycle_.size(); ++i) {
        if (loaded(i)) {
            const Vertex a = cycle_[i];
            const Vertex b = cycle_[(i + 1) % cycle_.size()];
            out.emplace_back(std::min(a, b), std::max(a, b));
        }
    }
    return out;
}

std::optional<std::size_t> LoadedCycle::position_of(Vertex v) const {
    const auto it = std::ranges::lower_bound(lookup_, v, {}, &std::pair<Vertex, std::size_t>::first);
    if (it == lookup_.end() || it->first != v) {
        return std::nullopt;
    }
    return it->second;
}

int LoadedCycle::distance_at(std::size_t i, std::size_t j) const {
    if (i > j) {
        std::swap(i, j);
    }
    const int one_arc = prefix_[j] - prefix_[i];
    return std::min(one_arc, load() - one_arc);
}

int cf_distance(const LoadedCycle& lc, Vertex u, Vertex v) {
    const auto pu = lc.position_of(u);
    const auto pv = lc.position_of(v);
    if (!pu || !pv) {
        throw PreconditionError("cf_distance: vertex not on the cycle");
    }
    return lc.distance_at(*pu, *pv);
}

void require_cycle_in(const Graph& g, const LoadedCycle& lc) {
    const auto& c = lc.vertices();
    for (std::size_t i = 0; i < c.size(); ++i) {
        const Vertex a = c[i];
        const Vertex b = c[(i + 1) % c.size()];
        if (!g.contains(a)) {
            throw PreconditionError("cycle vertex " + std::to_string(a) + " is not in the graph");
        }
        if (!g.contains(b) || !g.adjacent(a, b)) {
            throw PreconditionError("consecutive cycle vertices " + std::to_string(a) + " and " + std::to_string(b) +
                                    " are not adjacent");
        }
    }
}

std::optional<GeodesicViolation> is_geodesic_loaded(const Graph& g, const DistanceMatrix& dist,
                                                     const LoadedCycle& lc) {
    require_cycle_in(g, lc);
    const auto& c = lc.vertices();
    for (std::size_t i = 0; i < c.size(); ++i) {
        for (std::size_t j = i + 1; j < c.size(); ++j) {
            const int want = lc.distance_at(i, j);
            const Distance have = dist.at(c[i], c[j]);
            if (have < Distance(want)) {
                return GeodesicViolation{c[i], c[j], have, want};
            }
        }
    }
    return std::nullopt;
}

std::optional<GeodesicViolation> is_geodesic_loaded(const Graph& g, const LoadedCycle& lc) {
    return is_geodesic_loaded(g, all_pairs_distances(g), lc);
}

}  // namespace dwidth
