#include <doctest.h>

#include <algorithm>

#include <numeric>

#include "dwidth/chordal.hpp"
#include "dwidth/decomposition.hpp"
#include "dwidth/exact_odw.hpp"
#include "dwidth/generators.hpp"
#include "dwidth/layering.hpp"
#include "support/corpus.hpp"
#include "support/oracles.hpp"

using namespace dwidth;
using dwidth::testing::graph_of;

namespace {

TreeDecomposition path_tree(std::vector<std::vector<Vertex>> bags) {
    TreeDecomposition td;
    td.node_count = static_cast<int>(bags.size());
    for (int i = 0; i + 1 < td.node_count; ++i) {
        td.tree_edges.emplace_back(i, i + 1);
    }
    td.bags = std::move(bags);
    return td;
}

TreeDecomposition single_bag(int n) {
    std::vector<Vertex> all(static_cast<std::size_t>(n));
    std::iota(all.begin(), all.end(), 0);
    return path_tree({all});
}

// Removing B_s leaves no component touching both B_r and B_t, for every s on
// the tree path between r and t.
bool bags_intercept(const Graph& g, const TreeDecomposition& td) {
    const auto adj = td.tree_adjacency();
    for (Node r = 0; r < td.node_count; ++r) {
        for (Node t = r + 1; t < td.node_count; ++t) {
            const auto path = tree_path(adj, r, t);
            for (std::size_t i = 1; i + 1 < path.size(); ++i) {
                std::vector<char> allowed(static_cast<std::size_t>(g.vertex_count()), 1);
                for (const Vertex v : td.bags[static_cast<std::size_t>(path[i])]) {
                    allowed[static_cast<std::size_t>(v)] = 0;
                }
                const auto label = component_labels(g, allowed);
                for (const Vertex x : td.bags[static_cast<std::size_t>(r)]) {
                    for (const Vertex y : td.bags[static_cast<std::size_t>(t)]) {
                        const int lx = label[static_cast<std::size_t>(x)];
                        if (lx >= 0 && lx == label[static_cast<std::size_t>(y)]) {
                            return false;
                        }
                    }
                }
            }
        }
    }
    return true;
}

}  // namespace

TEST_SUITE("validate") {
    TEST_CASE("path with edge bags is valid") {
        CHECK_FALSE(validate(make_path(3), path_tree({{0, 1}, {1, 2}})).has_value());
    }

    TEST_CASE("missing edge") {
        const auto v = validate(make_path(3), path_tree({{0, 1}, {1}}));
        REQUIRE(v.has_value());
        CHECK(v->axiom == Violation::Axiom::vertex_cover);
        const auto e = validate(make_path(3), path_tree({{0, 1}, {1}, {2}}));
        REQUIRE(e.has_value());
        CHECK(e->axiom == Violation::Axiom::edge_cover);
        CHECK(e->witness == std::vector<int>{1, 2});
    }

    TEST_CASE("disconnected occurrence of a vertex") {
        const auto v = validate(graph_of(2, {}), path_tree({{0}, {1}, {0}}));
        REQUIRE(v.has_value());
        CHECK(v->axiom == Violation::Axiom::subtree);
        CHECK(v->witness.front() == 0);
    }

    TEST_CASE("malformed trees and bags") {
        TreeDecomposition cyclic = path_tree({{0, 1}, {1, 2}, {0, 2}});
        cyclic.tree_edges.emplace_back(0, 2);
        const auto v = validate(make_cycle(3), cyclic);
        REQUIRE(v.has_value());
        CHECK(v->axiom == Violation::Axiom::malformed);
        CHECK(validate(make_path(2), path_tree({{0, 5}}))->axiom == Violation::Axiom::malformed);
        TreeDecomposition forest = path_tree({{0, 1}, {1}});
        forest.tree_edges.clear();
        CHECK(validate(make_path(2), forest)->axiom == Violation::Axiom::malformed);
        CHECK_THROWS_AS(require_valid(make_path(3), path_tree({{0, 1}})), PreconditionError);
    }

    TEST_CASE("empty bags are allowed and ignored by diameters") {
        const TreeDecomposition td = path_tree({{0, 1}, {1, 2}, {}});
        CHECK_FALSE(validate(make_path(3), td).has_value());
        CHECK(outer_diameter(make_path(3), td) == Distance(1));
        CHECK(inner_diameter(make_path(3), td) == Distance(1));
    }
}

TEST_SUITE("bag diameters") {
    TEST_CASE("outer diameter") {
        const Graph c6 = make_cycle(6);
        CHECK(outer_diameter(c6, single_bag(6)) == Distance(3));
        const TreeDecomposition four = path_tree({{0, 1, 5}, {1, 2, 5}, {2, 4, 5}, {2, 3, 4}});
        CHECK_FALSE(validate(c6, four).has_value());
        CHECK(outer_diameter(c6, four) == Distance(3));
        CHECK(outer_diameter(graph_of(3, {}), path_tree({{0}, {1}, {2}})) == Distance(0));
    }

    TEST_CASE("inner diameter") {
        const Graph c4 = make_cycle(4);
        CHECK(inner_diameter(c4, path_tree({{0, 1, 3}, {1, 2, 3}})) == Distance(2));
        CHECK(inner_diameter(make_cycle(6), single_bag(6)) == Distance(3));
        CHECK_FALSE(inner_diameter(c4, path_tree({{0, 1, 2}, {0, 2}, {0, 2, 3}})).is_finite());
    }

    TEST_CASE("expansion by short paths") {
        const Graph c4 = make_cycle(4);
        const TreeDecomposition expanded = expand_bags(c4, path_tree({{0, 1, 3}, {1, 2, 3}}), 2);
        CHECK(expanded.bags == std::vector<std::vector<Vertex>>{{0, 1, 2, 3}, {0, 1, 2, 3}});
        CHECK(inner_diameter(c4, expanded) == Distance(2));

        const TreeDecomposition singletons = path_tree({{0}, {1}});
        CHECK(expand_bags(graph_of(2, {}), singletons, 0) == singletons);

        const Graph c6 = make_cycle(6);
        const TreeDecomposition four = path_tree({{0, 1, 5}, {1, 2, 5}, {2, 4, 5}, {2, 3, 4}});
        const TreeDecomposition big = expand_bags(c6, four, 3);
        CHECK_FALSE(validate(c6, big).has_value());
        CHECK(inner_diameter(c6, big) <= Distance(6));
        CHECK_THROWS_AS(expand_bags(c6, four, 2), PreconditionError);
        for (std::size_t i = 0; i < four.bags.size(); ++i) {
            CHECK(std::ranges::includes(big.bags[i], four.bags[i]));
        }
    }

    TEST_CASE("expansion requires a bound on the outer diameter") {
        CHECK_THROWS_AS(expand_bags(make_cycle(6), single_bag(6), 2), PreconditionError);
    }

    TEST_CASE("expanded layering decompositions stay within twice the outer diameter") {
        for (const auto* entry : dwidth::testing::corpus_up_to(21)) {
            const Graph& g = entry->graph;
            const auto dist = all_pairs_distances(g);
            const auto run = run_layering(g, dist, 0);
            const auto expanded = expand_bags(g, run.decomposition, run.outer_diameter);
            CHECK_MESSAGE(!validate(g, expanded), entry->name);
            const Distance inner = inner_diameter(g, expanded);
            CHECK_MESSAGE(inner <= Distance(2 * run.outer_diameter), entry->name);
            CHECK_MESSAGE(outer_diameter(dist, expanded) <= inner, entry->name);
        }
    }

    TEST_CASE("bags intercept paths between the two sides") {
        for (const auto* entry : dwidth::testing::corpus_up_to(12)) {
            const Graph& g = entry->graph;
            const auto dist = all_pairs_distances(g);
            for (Vertex r = 0; r < g.vertex_count(); r += 3) {
                CHECK_MESSAGE(bags_intercept(g, run_layering(g, dist, r).decomposition), entry->name);
            }
            if (g.vertex_count() <= 8) {
                CHECK_MESSAGE(bags_intercept(g, exact_odw(g).decomposition), entry->name);
            }
        }
    }
}

TEST_SUITE("chordal") {
    TEST_CASE("triangle has one bag") {
        const TreeDecomposition td = chordal_clique_tree(make_complete(3));
        CHECK(td.bags == std::vector<std::vector<Vertex>>{{0, 1, 2}});
        CHECK(inner_diameter(make_complete(3), td) == Distance(1));
    }

    TEST_CASE("farey pyramids are chordal with clique bags") {
        for (int k = 1; k <= 5; ++k) {
            const Graph g = make_farey(k).graph;
            REQUIRE(is_chordal(g));
            const TreeDecomposition td = chordal_clique_tree(g);
            CHECK_FALSE(validate(g, td).has_value());
            CHECK(inner_diameter(g, td) == Distance(1));
            CHECK(td.node_count == g.vertex_count() - 2);
        }
    }

    TEST_CASE("four-cycle is rejected with its cycle") {
        try {
            chordal_clique_tree(make_cycle(4));
            FAIL("expected NotChordalError");
        } catch (const NotChordalError& e) {
            CHECK(e.cycle() == std::vector<Vertex>{0, 1, 2, 3});
        }
    }

    TEST_CASE("chordless cycle witnesses are induced cycles") {
        for (const auto& entry : dwidth::testing::corpus()) {
            const Graph& g = entry.graph;
            const auto cycle = chordless_cycle(g);
            CHECK_MESSAGE(cycle.has_value() != is_chordal(g), entry.name);
            if (!cycle) {
                continue;
            }
            const std::size_t len = cycle->size();
            REQUIRE(len >= 4);
            for (std::size_t i = 0; i < len; ++i) {
                for (std::size_t j = i + 1; j < len; ++j) {
                    const bool consecutive = j == i + 1 || (i == 0 && j == len - 1);
                    CHECK(g.adjacent((*cycle)[i], (*cycle)[j]) == consecutive);
                }
            }
        }
    }

    TEST_CASE("perfect elimination orderings") {
        const Graph g = make_farey(3).graph;
        const auto peo = perfect_elimination_ordering(g);
        REQUIRE(peo.has_value());
        CHECK(is_perfect_elimination_ordering(g, *peo));
        CHECK_FALSE(perfect_elimination_ordering(make_cycle(5)).has_value());
        CHECK(maximum_cardinality_search(make_path(3)) == std::vector<Vertex>{0, 1, 2});
        CHECK(is_chordal(make_grid(1, 1)));
        CHECK_FALSE(is_chordal(make_grid(2, 2)));
    }

    TEST_CASE("clique trees of chordal corpus graphs") {
        for (const auto& entry : dwidth::testing::corpus()) {
            if (!is_chordal(entry.graph)) {
                continue;
            }
            const TreeDecomposition td = chordal_clique_tree(entry.graph);
            CHECK_MESSAGE(!validate(entry.graph, td), entry.name);
            const Distance inner = inner_diameter(entry.graph, td);
            CHECK_MESSAGE(inner <= Distance(1), entry.name);
        }
    }
}

TEST_SUITE("exact odw") {
    TEST_CASE("module examples") {
        for (int n = 2; n <= 8; ++n) {
            CHECK(exact_odw(make_path(n)).width == 1);
        }
        CHECK(exact_odw(dwidth::testing::random_tree(8, 5)).width == 1);
        CHECK(exact_odw(make_cycle(6)).width == 2);
        CHECK(exact_odw(make_complete(5)).width == 1);
        CHECK(exact_odw(make_path(1)).width == 0);
    }

    TEST_CASE("values on small cycles and grids") {
        CHECK(exact_odw(make_cycle(3)).width == 1);
        CHECK(exact_odw(make_cycle(4)).width == 2);
        CHECK(exact_odw(make_cycle(8)).width == 3);
        CHECK(exact_odw(make_grid(2, 3)).width == 2);
    }

    TEST_CASE("decomposition attains the width") {
        for (const auto* entry : dwidth::testing::corpus_up_to(8)) {
            const auto result = exact_odw(entry->graph);
            CHECK_MESSAGE(!validate(entry->graph, result.decomposition), entry->name);
            CHECK(outer_diameter(entry->graph, result.decomposition) == Distance(result.width));
        }
    }

    TEST_CASE("limits and preconditions") {
        CHECK_THROWS_AS(exact_odw(make_cycle(9)), PreconditionError);
        CHECK(exact_odw(make_cycle(9), 9).width == 3);
        CHECK_THROWS_AS(exact_odw(graph_of(3, {{0, 1}})), PreconditionError);
    }

    TEST_CASE("agrees with decomposition enumeration up to four vertices") {
        for (int n = 1; n <= 4; ++n) {
            for (const Graph& g : dwidth::testing::connected_graphs(n)) {
                CHECK(exact_odw(g).width == dwidth::testing::enumerated_odw(g));
            }
        }
    }

    TEST_CASE("enumeration oracle is itself sane") {
        CHECK(dwidth::testing::connected_graphs(4).size() == 6);
        CHECK(dwidth::testing::connected_graphs(5).size() == 21);
        const auto td = dwidth::testing::find_decomposition(make_cycle(5), 2);
        REQUIRE(td.has_value());
        CHECK_FALSE(validate(make_cycle(5), *td).has_value());
        CHECK_FALSE(dwidth::testing::find_decomposition(make_cycle(5), 1).has_value());
    }
}
