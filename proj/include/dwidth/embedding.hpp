#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dwidth/decomposition.hpp"
#include "dwidth/rational.hpp"

namespace dwidth {

/// Intermediate values of decomposition_to_embedding, indexed by the nodes and
/// tree edges of the source decomposition.
struct EmbeddingProvenance {
    int width = 0;                 // outer diameter k of the source decomposition
    Node root = 0;
    std::vector<Vertex> beta;      // -1 for nodes with empty bags
    std::vector<int> root_length;  // l(t, root) = d_G(beta(t), beta(root)); -1 if pruned
    std::vector<int> edge_length;  // l(e) per source tree edge; -1 if pruned
    std::vector<Node> phi;         // source node chosen for each vertex
    std::vector<int> sigma;        // source node -> embedding tree node; -1 outside the spanning subtree
};

/// A map from graph vertices to the nodes of a unit-length tree.
struct TreeEmbedding {
    int tree_nodes = 1;
    std::vector<Edge> tree_edges;
    std::vector<Node> phi;
    std::optional<EmbeddingProvenance> provenance;
};

/// Throws PreconditionError unless the tree is a tree and phi is total on g.
void require_embedding(const Graph& g, const TreeEmbedding& emb);

/// Tree built from a decomposition of outer diameter k, with additive
/// distortion at most 6k:
///  - drop empty bags; root at the smallest node, beta(root) its smallest vertex;
///  - beta(t) is a vertex of B_t closest to beta(root), l(st) the difference of
///    their distances to beta(root);
///  - phi(v) is the smallest node whose bag holds v;
///  - keep the minimal subtree spanning phi's image, contract l = 0 edges and
///    subdivide each other edge into l unit edges (new nodes numbered after the
///    contracted ones).
TreeEmbedding decomposition_to_embedding(const Graph& g, const TreeDecomposition& td);

/// max over vertex pairs of |d_G(u, v) - d_T(phi(u), phi(v))|. Throws on a
/// disconnected graph.
int additive_distortion(const Graph& g, const TreeEmbedding& emb);

struct QuasiIsometryViolation {
    enum class Kind { contracts_too_much, stretches_too_much, not_dense };

    Kind kind = Kind::contracts_too_much;
    Vertex u = -1;
    Vertex v = -1;
    Node node = -1;  // for not_dense
    std::string message;
};

/// Checks (1/L) d_G - C <= d_T <= L d_G + C on all vertex pairs and that every
/// tree node is within C of the image, in exact arithmetic.
std::optional<QuasiIsometryViolation> check_quasi_isometry(const Graph& g, const TreeEmbedding& emb,
                                                           const Rational& L, const Rational& C);

/// Least C for which check_quasi_isometry(g, emb, L, C) passes (g connected).
Rational least_quasi_isometry_constant(const Graph& g, const TreeEmbedding& emb, const Rational& L);

/// Bags B_t = {v : d_T(t, phi(v)) <= (L + C + 1) / 2} over the embedding tree.
/// Requires an (L, C)-quasi-isometry; the result has outer diameter at most
/// L(L + C + 1) + C.
TreeDecomposition embedding_to_decomposition(const Graph& g, const TreeEmbedding& emb, const Rational& L,
                                             const Rational& C);

}  // namespace dwidth
