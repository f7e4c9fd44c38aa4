#include <doctest.h>

#include <algorithm>

#include "dwidth/chordal.hpp"
#include "dwidth/decomposition.hpp"
#include "dwidth/embedding.hpp"
#include "dwidth/exact_odw.hpp"
#include "dwidth/generators.hpp"
#include "dwidth/layering.hpp"
#include "dwidth/rational.hpp"
#include "support/corpus.hpp"

using namespace dwidth;

namespace {

TreeEmbedding one_node(int n) {
    TreeEmbedding emb;
    emb.tree_nodes = 1;
    emb.phi.assign(static_cast<std::size_t>(n), 0);
    return emb;
}

TreeEmbedding identity(const Graph& tree) {
    TreeEmbedding emb;
    emb.tree_nodes = tree.vertex_count();
    emb.tree_edges = tree.edges();
    for (Vertex v = 0; v < tree.vertex_count(); ++v) {
        emb.phi.push_back(v);
    }
    return emb;
}

TreeDecomposition edge_bags(int n) {
    TreeDecomposition td;
    td.node_count = n - 1;
    for (int i = 0; i + 1 < n; ++i) {
        td.bags.push_back({i, i + 1});
        if (i > 0) {
            td.tree_edges.emplace_back(i - 1, i);
        }
    }
    return td;
}

// Decompositions the suite produces for a graph.
std::vector<TreeDecomposition> produced(const Graph& g) {
    std::vector<TreeDecomposition> out;
    const auto dist = all_pairs_distances(g);
    for (Vertex r = 0; r < g.vertex_count(); r += 2) {
        const auto run = run_layering(g, dist, r);
        out.push_back(run.decomposition);
        out.push_back(expand_bags(g, run.decomposition, run.outer_diameter));
    }
    if (g.vertex_count() <= 8) {
        out.push_back(exact_odw(g).decomposition);
    }
    if (is_chordal(g)) {
        out.push_back(chordal_clique_tree(g));
    }
    return out;
}

}  // namespace

TEST_SUITE("rational") {
    TEST_CASE("parsing and arithmetic") {
        CHECK(Rational::parse("3") == Rational(3));
        CHECK(Rational::parse("6/4") == Rational(3, 2));
        CHECK(Rational::parse("1.5") == Rational(3, 2));
        CHECK(Rational::parse("-0.25") == Rational(-1, 4));
        CHECK(Rational::parse(".5") == Rational(1, 2));
        CHECK_THROWS_AS(Rational::parse("x"), PreconditionError);
        CHECK_THROWS_AS(Rational::parse("1/0"), PreconditionError);
        CHECK_THROWS_AS(Rational::parse("1.-5"), PreconditionError);
        CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
        CHECK(Rational(1, 2) * 4 == Rational(2));
        CHECK(Rational(3, 2) / Rational(3) == Rational(1, 2));
        CHECK(Rational(2, -4).to_string() == "-1/2");
        CHECK(Rational(1, 3) < Rational(1, 2));
    }
}

TEST_SUITE("decomposition to embedding") {
    TEST_CASE("path with edge bags embeds as a path") {
        for (int n = 2; n <= 8; ++n) {
            const Graph p = make_path(n);
            const TreeEmbedding emb = decomposition_to_embedding(p, edge_bags(n));
            // n vertices on n - 1 nodes: some edge collapses.
            CHECK(additive_distortion(p, emb) == 1);
            CHECK(emb.tree_nodes == n - 1);
            require_embedding(p, emb);
        }
    }

    TEST_CASE("six-cycle with an optimal decomposition") {
        const Graph c6 = make_cycle(6);
        const ExactOdw best = exact_odw(c6);
        REQUIRE(best.width == 2);
        const TreeEmbedding emb = decomposition_to_embedding(c6, best.decomposition);
        CHECK(additive_distortion(c6, emb) <= 12);
        REQUIRE(emb.provenance.has_value());
        CHECK(emb.provenance->width == 2);
    }

    TEST_CASE("single bag gives a single node") {
        const Graph k5 = make_complete(5);
        TreeDecomposition td;
        td.node_count = 1;
        td.bags = {{0, 1, 2, 3, 4}};
        const TreeEmbedding emb = decomposition_to_embedding(k5, td);
        CHECK(emb.tree_nodes == 1);
        CHECK(additive_distortion(k5, emb) == 1);
    }

    TEST_CASE("empty bags are dropped") {
        const Graph p = make_path(3);
        TreeDecomposition td;
        td.node_count = 4;
        td.tree_edges = {{0, 1}, {1, 2}, {2, 3}};
        td.bags = {{}, {0, 1}, {1, 2}, {}};
        const TreeEmbedding emb = decomposition_to_embedding(p, td);
        CHECK(emb.provenance->root == 1);
        CHECK(additive_distortion(p, emb) <= 6);
        require_embedding(p, emb);
    }

    TEST_CASE("distortion at most six times the outer diameter, with the per-vertex bounds") {
        for (const auto* entry : dwidth::testing::corpus_up_to(21)) {
            const Graph& g = entry->graph;
            const auto dist = all_pairs_distances(g);
            for (const TreeDecomposition& td : produced(g)) {
                INFO(entry->name);
                const int k = outer_diameter(dist, td).hops();
                const TreeEmbedding emb = decomposition_to_embedding(g, td);
                require_embedding(g, emb);
                CHECK(additive_distortion(g, emb) <= 6 * k);

                const auto& prov = *emb.provenance;
                const auto adj = td.tree_adjacency();
                for (Vertex v = 0; v < g.vertex_count(); ++v) {
                    const Node home = prov.phi[static_cast<std::size_t>(v)];
                    CHECK(std::ranges::binary_search(td.bags[static_cast<std::size_t>(home)], v));
                    for (const Node t : tree_path(adj, home, prov.root)) {
                        const int along = prov.root_length[static_cast<std::size_t>(home)] -
                                          prov.root_length[static_cast<std::size_t>(t)];
                        const int direct = dist.hops(v, prov.beta[static_cast<std::size_t>(t)]);
                        CHECK(along <= direct + k);
                        CHECK(direct <= along + 3 * k);
                    }
                }
            }
        }
    }

    TEST_CASE("preconditions") {
        CHECK_THROWS_AS(decomposition_to_embedding(make_path(3), edge_bags(2)), PreconditionError);
        CHECK_THROWS_AS(decomposition_to_embedding(dwidth::testing::graph_of(2, {}), edge_bags(2)),
                        PreconditionError);
    }
}

TEST_SUITE("distortion and quasi-isometry") {
    TEST_CASE("additive distortion examples") {
        const Graph t = dwidth::testing::random_tree(9, 4);
        CHECK(additive_distortion(t, identity(t)) == 0);
        CHECK(additive_distortion(make_cycle(6), one_node(6)) == 3);
        TreeEmbedding two;
        two.tree_nodes = 2;
        two.tree_edges = {{0, 1}};
        two.phi = {0, 0, 1};
        CHECK(additive_distortion(make_path(3), two) == 1);
    }

    TEST_CASE("quasi-isometry checks") {
        const Graph t = dwidth::testing::random_tree(9, 4);
        CHECK_FALSE(check_quasi_isometry(t, identity(t), 1, 0).has_value());

        const Graph c6 = make_cycle(6);
        CHECK_FALSE(check_quasi_isometry(c6, one_node(6), 1, 3).has_value());
        const auto v = check_quasi_isometry(c6, one_node(6), 1, 2);
        REQUIRE(v.has_value());
        CHECK(v->kind == QuasiIsometryViolation::Kind::contracts_too_much);
        CHECK(c6.vertex_count() > v->u);
        CHECK(all_pairs_distances(c6).hops(v->u, v->v) == 3);

        TreeEmbedding far = one_node(3);
        far.tree_nodes = 4;
        far.tree_edges = {{0, 1}, {1, 2}, {2, 3}};
        const Graph k3 = make_complete(3);
        const auto sparse = check_quasi_isometry(k3, far, 1, 2);
        REQUIRE(sparse.has_value());
        CHECK(sparse->kind == QuasiIsometryViolation::Kind::not_dense);
        CHECK(sparse->node == 3);
        CHECK_FALSE(check_quasi_isometry(k3, far, 1, 3).has_value());
    }

    TEST_CASE("constants are compared exactly") {
        // Path 0-1-2 onto a path of length 3, node 2 unused.
        TreeEmbedding stretched;
        stretched.tree_nodes = 4;
        stretched.tree_edges = {{0, 1}, {1, 2}, {2, 3}};
        stretched.phi = {0, 1, 3};
        const Graph p = make_path(3);
        CHECK_FALSE(check_quasi_isometry(p, stretched, Rational(2), 1).has_value());
        const auto sparse = check_quasi_isometry(p, stretched, Rational(2), Rational(1, 2));
        REQUIRE(sparse.has_value());
        CHECK(sparse->kind == QuasiIsometryViolation::Kind::not_dense);
        TreeEmbedding spread_out;
        spread_out.tree_nodes = 3;
        spread_out.tree_edges = {{0, 1}, {1, 2}};
        spread_out.phi = {0, 1, 2};
        const auto stretch = check_quasi_isometry(make_complete(3), spread_out, 1, Rational(1, 2));
        REQUIRE(stretch.has_value());
        CHECK(stretch->kind == QuasiIsometryViolation::Kind::stretches_too_much);
        CHECK_FALSE(check_quasi_isometry(make_complete(3), spread_out, 2, 0).has_value());
        CHECK(least_quasi_isometry_constant(p, stretched, 1) == Rational(1));

        const Graph c6 = make_cycle(6);
        CHECK(least_quasi_isometry_constant(c6, one_node(6), 1) == Rational(3));
        CHECK(least_quasi_isometry_constant(c6, one_node(6), 2) == Rational(3, 2));
        CHECK_FALSE(check_quasi_isometry(c6, one_node(6), 2, Rational(3, 2)).has_value());
        CHECK(check_quasi_isometry(c6, one_node(6), 2, Rational(7, 5)).has_value());
    }

    TEST_CASE("rejects bad constants and maps") {
        CHECK_THROWS_AS(check_quasi_isometry(make_path(3), one_node(3), Rational(1, 2), 0), PreconditionError);
        CHECK_THROWS_AS(check_quasi_isometry(make_path(3), one_node(3), 1, -1), PreconditionError);
        CHECK_THROWS_AS(require_embedding(make_path(3), one_node(2)), PreconditionError);
        TreeEmbedding cyclic = one_node(3);
        cyclic.tree_nodes = 3;
        cyclic.tree_edges = {{0, 1}, {1, 2}, {2, 0}};
        CHECK_THROWS_AS(require_embedding(make_path(3), cyclic), PreconditionError);
    }
}

TEST_SUITE("embedding to decomposition") {
    TEST_CASE("one node gives one bag") {
        const Graph c6 = make_cycle(6);
        const TreeDecomposition td = embedding_to_decomposition(c6, one_node(6), 1, 3);
        CHECK(td.bags == std::vector<std::vector<Vertex>>{{0, 1, 2, 3, 4, 5}});
        CHECK(outer_diameter(c6, td) == Distance(3));
    }

    TEST_CASE("identity on a tree gives radius-one balls") {
        const Graph t = dwidth::testing::random_tree(10, 7);
        const TreeDecomposition td = embedding_to_decomposition(t, identity(t), 1, 0);
        CHECK_FALSE(validate(t, td).has_value());
        CHECK(outer_diameter(t, td) <= Distance(2));
        for (Vertex v = 0; v < t.vertex_count(); ++v) {
            std::vector<Vertex> ball{v};
            for (const Vertex w : t.neighbors(v)) {
                ball.push_back(w);
            }
            std::ranges::sort(ball);
            CHECK(td.bags[static_cast<std::size_t>(v)] == ball);
        }
    }

    TEST_CASE("requires the quasi-isometry") {
        CHECK_THROWS_AS(embedding_to_decomposition(make_cycle(6), one_node(6), 1, 2), PreconditionError);
    }

    TEST_CASE("round trip through the embedding") {
        for (const auto* entry : dwidth::testing::corpus_up_to(16)) {
            const Graph& g = entry->graph;
            const auto dist = all_pairs_distances(g);
            const auto run = run_layering(g, dist, 0);
            const int k = run.outer_diameter;
            const TreeEmbedding emb = decomposition_to_embedding(g, run.decomposition);
            const Rational C = least_quasi_isometry_constant(g, emb, 1);
            CHECK(C <= Rational(6 * k));
            for (const Rational& c : {C, Rational(6 * k)}) {
                const TreeDecomposition back = embedding_to_decomposition(g, emb, 1, c);
                CHECK_MESSAGE(!validate(g, back), entry->name);
                CHECK(Rational(outer_diameter(dist, back).hops()) <= c + 2 + c);
            }
        }
    }
}
