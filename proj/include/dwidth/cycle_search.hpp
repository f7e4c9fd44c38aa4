#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "dwidth/loaded_cycle.hpp"

namespace dwidth {

struct CycleLimits {
    /// Cycles longer than this are not visited (0 = no length cap).
    int max_length = 0;
    /// Enumeration stops once this many cycles have been visited.
    std::uint64_t max_cycles = 1'000'000;
};

enum class Visit { keep_going, stop };

/// Calls `visit` once per simple cycle, as a vertex sequence starting at its
/// smallest vertex with the second vertex smaller than the last. Returns false
/// if the cycle cap stopped the enumeration.
bool for_each_simple_cycle(const Graph& g, const CycleLimits& limits,
                           const std::function<Visit(const std::vector<Vertex>&)>& visit);

/// Largest |F| with (cycle, F) geodesic, and one such F. Feasibility only
/// shrinks as F grows, so a branch-and-bound over edges in cycle order with
/// the best load so far as the bound is exact.
LoadedCycle max_geodesic_load(const DistanceMatrix& dist, const std::vector<Vertex>& cycle, int must_beat = -1);

struct GlcResult {
    /// Exact glc when `complete`; otherwise a lower bound.
    int value = 0;
    std::optional<LoadedCycle> witness;
    bool complete = true;
    std::uint64_t cycles_examined = 0;
};

/// Maximum load of a geodesic loaded cycle by exhaustive cycle enumeration.
GlcResult brute_force_glc(const Graph& g, const CycleLimits& limits = {});

struct GeodesicCycles {
    std::vector<std::vector<Vertex>> cycles;
    int max_length = 0;
    bool complete = true;
};

/// All cycles C with d_C(u, v) = d_G(u, v) for every u, v on C. A geodesic
/// cycle of length L has d_G = min(t, L - t) between vertices t apart, so the
/// search fixes L and only extends paths that keep this exact.
GeodesicCycles enumerate_geodesic_cycles(const Graph& g, const CycleLimits& limits = {});

}  // namespace dwidth
