#pragma once

#include <optional>
#include <vector>

#include "dwidth/decomposition.hpp"

namespace dwidth {

class NotChordalError : public PreconditionError {
public:
    explicit NotChordalError(std::vector<Vertex> cycle);

    /// A chordless cycle of length >= 4, in cycle order.
    const std::vector<Vertex>& cycle() const { return cycle_; }

private:
    std::vector<Vertex> cycle_;
};

/// Maximum-cardinality search visit order; ties go to the smallest vertex id.
std::vector<Vertex> maximum_cardinality_search(const Graph& g);

/// True iff `order` (first eliminated first) is a perfect elimination ordering.
bool is_perfect_elimination_ordering(const Graph& g, const std::vector<Vertex>& order);

/// Reverse MCS order if it is a perfect elimination ordering, else nothing.
std::optional<std::vector<Vertex>> perfect_elimination_ordering(const Graph& g);

bool is_chordal(const Graph& g);

/// Some chordless cycle of length >= 4, or nothing when g is chordal.
std::optional<std::vector<Vertex>> chordless_cycle(const Graph& g);

/// Tree-decomposition whose bags are exactly the maximal cliques of a chordal
/// graph. Throws NotChordalError otherwise.
TreeDecomposition chordal_clique_tree(const Graph& g);

}  // namespace dwidth
