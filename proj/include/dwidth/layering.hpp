#pragma once

#include <optional>
#include <vector>

#include "dwidth/decomposition.hpp"
#include "dwidth/loaded_cycle.hpp"

namespace dwidth {

/// BFS layering from a root, split into classes.
///
/// Two vertices of layer L_i are equivalent when some path joins them with
/// interior in L_i + L_{i+1} + ...; since both ends are in L_i as well, that is
/// the same as lying in one component of G[L_{>=i}]. Classes are those
/// components traced on L_i.
struct Layering {
    struct LayerClass {
        int layer = 0;
        std::vector<Vertex> members;  // sorted
        int parent = -1;              // class index in layer - 1; -1 for the root class
    };

    Vertex root = 0;
    std::vector<int> depth;                    // d_G(v, root)
    std::vector<std::vector<Vertex>> layers;   // sorted
    std::vector<LayerClass> classes;           // ordered by (layer, smallest member)
    std::vector<int> class_of;                 // class index per vertex
};

Layering build_layering(const Graph& g, Vertex root);

/// Tree = class parent tree; bag of class A is A plus its parent class.
TreeDecomposition layering_decomposition(const Layering& lay);

/// Largest G-distance between two members of a common class, attained by the
/// lexicographically smallest (layer, u, v) with u < v.
struct ClassSpread {
    int distance = 0;
    int class_index = -1;
    Vertex u = -1;
    Vertex v = -1;
};

ClassSpread widest_class_pair(const DistanceMatrix& dist, const Layering& lay);

struct LayeringWitness {
    LoadedCycle cycle;
    Vertex root = 0;
    int class_layer = 0;
    Vertex u = -1;
    Vertex v = -1;
    int spread = 0;  // m
};

/// The geodesic loaded cycle P + S + Q + R with F = E(P) + E(Q), built from a
/// widest class pair (u, v) in layer i with m = d_G(u, v): P, Q are k-edge
/// shortest climbs from u and v towards the root, R a shortest u-v path in
/// G[L_{>=i}], S a shortest p-q path in G[L_{<=i-k}]. Tries k = floor((m+1)/2)
/// over all widest pairs and climb choices first, then k = floor(m/2) with the
/// smallest-id climbs. Nothing when m = 0.
std::optional<LayeringWitness> extract_witness(const Graph& g, const Layering& lay);
std::optional<LayeringWitness> extract_witness(const Graph& g, const DistanceMatrix& dist, const Layering& lay);

/// Per-root summary used by root sweeps.
struct LayeringRun {
    Vertex root = 0;
    TreeDecomposition decomposition;
    int outer_diameter = 0;  // D
    int spread = 0;          // m
    std::optional<LayeringWitness> witness;
};

LayeringRun run_layering(const Graph& g, const DistanceMatrix& dist, Vertex root);

/// Runs every root; `best_decomposition` minimises D and `best_witness`
/// maximises the load, ties to the smaller root.
struct RootSweep {
    std::vector<LayeringRun> runs;
    std::size_t best_decomposition = 0;
    std::size_t best_witness = 0;
};

RootSweep sweep_roots(const Graph& g, const DistanceMatrix& dist);

}  // namespace dwidth
