#pragma once

#include "dwidth/decomposition.hpp"

namespace dwidth {

struct ExactOdw {
    int width = 0;
    /// Clique tree of an optimal chordal supergraph; its outer diameter is `width`.
    TreeDecomposition decomposition;
};

inline constexpr int kDefaultExactOdwLimit = 8;
inline constexpr int kMaxExactOdwLimit = 22;

/// Exact outer diameter-width of a small connected graph.
///
/// Every tree-decomposition can be refined to the clique tree of a chordal
/// supergraph H of G without growing any bag, and every chordal H is the
/// elimination graph of one of its perfect elimination orderings. So the
/// optimum is the minimum over elimination orderings of the largest G-diameter
/// of {v} plus its higher neighbours at elimination time. The higher
/// neighbourhood of v depends only on the set S eliminated before it (the
/// vertices outside S reachable from v through S), which gives a DP over
/// subsets: best(S + v) = min over v of max(best(S), cost(S, v)).
///
/// Throws PreconditionError when g is disconnected or has more than `limit`
/// vertices (limit is capped at kMaxExactOdwLimit).
ExactOdw exact_odw(const Graph& g, int limit = kDefaultExactOdwLimit);

}  // namespace dwidth
