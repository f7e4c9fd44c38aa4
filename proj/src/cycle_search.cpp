#include "dwidth/cycle_search.hpp"

#include <algorithm>

namespace dwidth {

namespace {

class SimpleCycleWalker {
public:
    SimpleCycleWalker(const Graph& g, const CycleLimits& limits,
                      const std::function<Visit(const std::vector<Vertex>&)>& visit)
        : g_(g),
          limits_(limits),
          visit_(visit),
          on_path_(static_cast<std::size_t>(g.vertex_count()), 0) {}

    bool run() {
        for (Vertex s = 0; s < g_.vertex_count() && !stopped_; ++s) {
            start_ = s;
            descend(s);
        }
        return !capped_;
    }

private:
    void descend(Vertex v) {
        path_.push_back(v);
        on_path_[static_cast<std::size_t>(v)] = 1;
        const bool room = limits_.max_length <= 0 || static_cast<int>(path_.size()) < limits_.max_length;
        for (Vertex w : g_.neighbors(v)) {
            if (stopped_) {
                break;
            }
            if (w == start_ && path_.size() >= 3 && path_[1] < path_.back()) {
                report();
            } else if (w > start_ && !on_path_[static_cast<std::size_t>(w)] && room) {
                descend(w);
            }
        }
        on_path_[static_cast<std::size_t>(v)] = 0;
        path_.pop_back();
    }

    void report() {
        if (seen_ == limits_.max_cycles) {
            stopped_ = capped_ = true;
            return;
        }
        ++seen_;
        if (visit_(path_) == Visit::stop) {
            stopped_ = true;
        }
    }

    const Graph& g_;
    CycleLimits limits_;
    const std::function<Visit(const std::vector<Vertex>&)>& visit_;
    std::vector<char> on_path_;
    std::vector<Vertex> path_;
    Vertex start_ = 0;
    std::uint64_t seen_ = 0;
    bool stopped_ = false;
    bool capped_ = false;
};

class LoadSearch {
public:
    LoadSearch(const DistanceMatrix& dist, const std::vector<Vertex>& cycle, int must_beat)
        : dist_(dist), cycle_(cycle), flags_(cycle.size(), 0), best_load_(must_beat) {}

    LoadedCycle run() {
        branch(0, 0);
        if (best_.empty()) {
            best_.assign(cycle_.size(), 0);
        }
        return LoadedCycle::from_flags(cycle_, best_);
    }

private:
    bool feasible(int load) const {
        // prefix sums of the current flags
        std::vector<int> prefix(cycle_.size() + 1, 0);
        for (std::size_t i = 0; i < cycle_.size(); ++i) {
            prefix[i + 1] = prefix[i] + flags_[i];
        }
        for (std::size_t i = 0; i < cycle_.size(); ++i) {
            for (std::size_t j = i + 1; j < cycle_.size(); ++j) {
                const int arc = prefix[j] - prefix[i];
                if (dist_.at(cycle_[i], cycle_[j]) < Distance(std::min(arc, load - arc))) {
                    return false;
                }
            }
        }
        return true;
    }

    void branch(std::size_t edge, int load) {
        const int remaining = static_cast<int>(cycle_.size() - edge);
        if (load + remaining <= best_load_) {
            return;
        }
        if (edge == cycle_.size()) {
            best_load_ = load;
            best_ = flags_;
            return;
        }
        flags_[edge] = 1;
        if (feasible(load + 1)) {
            branch(edge + 1, load + 1);
        }
        flags_[edge] = 0;
        branch(edge + 1, load);
    }

    const DistanceMatrix& dist_;
    const std::vector<Vertex>& cycle_;
    std::vector<char> flags_;
    std::vector<char> best_;
    int best_load_;
};

}  // namespace

bool for_each_simple_cycle(const Graph& g, const CycleLimits& limits,
                           const std::function<Visit(const std::vector<Vertex>&)>& visit) {
    return SimpleCycleWalker(g, limits, visit).run();
}

LoadedCycle max_geodesic_load(const DistanceMatrix& dist, const std::vector<Vertex>& cycle, int must_beat) {
    return LoadSearch(dist, cycle, must_beat).run();
}

GlcResult brute_force_glc(const Graph& g, const CycleLimits& limits) {
    const DistanceMatrix dist = all_pairs_distances(g);
    GlcResult result;
    result.complete = for_each_simple_cycle(g, limits, [&](const std::vector<Vertex>& cycle) {
        ++result.cycles_examined;
        if (static_cast<int>(cycle.size()) <= result.value) {
            return Visit::keep_going;
        }
        LoadedCycle best = max_geodesic_load(dist, cycle, result.value);
        if (best.load() > result.value) {
            result.value = best.load();
            result.witness = std::move(best);
        }
        return Visit::keep_going;
    });
    return result;
}

namespace {

class GeodesicCycleSearch {
public:
    GeodesicCycleSearch(const Graph& g, const DistanceMatrix& dist, const CycleLimits& limits, GeodesicCycles& out)
        : g_(g), dist_(dist), limits_(limits), out_(out), used_(static_cast<std::size_t>(g.vertex_count()), 0) {}

    void run(int length) {
        length_ = length;
        for (Vertex s = 0; s < g_.vertex_count() && out_.complete; ++s) {
            start_ = s;
            path_.assign(1, s);
            used_[static_cast<std::size_t>(s)] = 1;
            extend();
            used_[static_cast<std::size_t>(s)] = 0;
        }
    }

private:
    bool fits(Vertex w) const {
        const int j = static_cast<int>(path_.size());
        for (int a = 0; a < j; ++a) {
            const int t = j - a;
            if (dist_.at(path_[static_cast<std::size_t>(a)], w) != Distance(std::min(t, length_ - t))) {
                return false;
            }
        }
        return true;
    }

    void extend() {
        if (static_cast<int>(path_.size()) == length_) {
            // fits() already forced adjacency of the last vertex to the start.
            if (path_[1] < path_.back()) {
                if (out_.cycles.size() == limits_.max_cycles) {
                    out_.complete = false;
                    return;
                }
                out_.cycles.push_back(path_);
                out_.max_length = std::max(out_.max_length, length_);
            }
            return;
        }
        for (Vertex w : g_.neighbors(path_.back())) {
            if (!out_.complete) {
                return;
            }
            if (w > start_ && !used_[static_cast<std::size_t>(w)] && fits(w)) {
                used_[static_cast<std::size_t>(w)] = 1;
                path_.push_back(w);
                extend();
                path_.pop_back();
                used_[static_cast<std::size_t>(w)] = 0;
            }
        }
    }

    const Graph& g_;
    const DistanceMatrix& dist_;
    const CycleLimits& limits_;
    GeodesicCycles& out_;
    std::vector<char> used_;
    std::vector<Vertex> path_;
    Vertex start_ = 0;
    int length_ = 0;
};

}  // namespace

GeodesicCycles enumerate_geodesic_cycles(const Graph& g, const CycleLimits& limits) {
    const DistanceMatrix dist = all_pairs_distances(g);
    GeodesicCycles out;
    // d_C reaches floor(L/2), which must be a finite G-distance, so L <= 2 diam + 1.
    int longest = g.vertex_count();
    int diam = 0;
    for (Vertex u = 0; u < g.vertex_count(); ++u) {
        for (Vertex v = u + 1; v < g.vertex_count(); ++v) {
            if (dist.at(u, v).is_finite()) {
                diam = std::max(diam, dist.hops(u, v));
            }
        }
    }
    longest = std::min(longest, 2 * diam + 1);
    if (limits.max_length > 0) {
        longest = std::min(longest, limits.max_length);
    }
    GeodesicCycleSearch search(g, dist, limits, out);
    for (int length = 3; length <= longest && out.complete; ++length) {
        search.run(length);
    }
    return out;
}

}  // namespace dwidth
