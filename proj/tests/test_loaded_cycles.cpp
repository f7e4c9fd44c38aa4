#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "dwidth/cycle_search.hpp"
#include "dwidth/decomposition.hpp"
#include "dwidth/exact_odw.hpp"
#include "dwidth/generators.hpp"
#include "dwidth/loaded_cycle.hpp"
#include "support/corpus.hpp"

using namespace dwidth;

namespace {

std::vector<Vertex> iota_cycle(int n) {
    std::vector<Vertex> c(static_cast<std::size_t>(n));
    std::iota(c.begin(), c.end(), 0);
    return c;
}

// Every loading of `cycle`, checked directly against the definition.
int max_load_by_subsets(const DistanceMatrix& dist, const std::vector<Vertex>& cycle) {
    const std::size_t len = cycle.size();
    int best = 0;
    for (std::uint32_t mask = 0; mask < (1U << len); ++mask) {
        std::vector<char> flags(len);
        for (std::size_t i = 0; i < len; ++i) {
            flags[i] = static_cast<char>(mask >> i & 1U);
        }
        const LoadedCycle lc = LoadedCycle::from_flags(cycle, flags);
        bool ok = true;
        for (const Vertex u : cycle) {
            for (const Vertex v : cycle) {
                ok = ok && dist.at(u, v) >= Distance(cf_distance(lc, u, v));
            }
        }
        if (ok) {
            best = std::max(best, lc.load());
        }
    }
    return best;
}

}  // namespace

TEST_SUITE("loaded cycle") {
    TEST_CASE("construction and accessors") {
        const LoadedCycle lc({2, 0, 1}, {{0, 2}});
        CHECK(lc.length() == 3);
        CHECK(lc.load() == 1);
        CHECK(lc.loaded(0));
        CHECK_FALSE(lc.loaded(1));
        CHECK(lc.loaded_edges() == std::vector<Edge>{{0, 2}});
        CHECK(lc.position_of(1) == std::optional<std::size_t>(2));
        CHECK_FALSE(lc.contains(5));
        CHECK(LoadedCycle::fully_loaded({0, 1, 2, 3}).load() == 4);
    }

    TEST_CASE("rejects malformed cycles") {
        CHECK_THROWS_AS(LoadedCycle({0, 1}, {}), PreconditionError);
        CHECK_THROWS_AS(LoadedCycle({0, 1, 0}, {}), PreconditionError);
        CHECK_THROWS_AS(LoadedCycle({0, 1, 2, 3}, {{0, 2}}), PreconditionError);
        CHECK_THROWS_AS(require_cycle_in(make_path(3), LoadedCycle({0, 1, 2}, {})), PreconditionError);
    }

    TEST_CASE("loaded distance") {
        const LoadedCycle full = LoadedCycle::fully_loaded(iota_cycle(6));
        CHECK(cf_distance(full, 0, 3) == 3);
        CHECK(cf_distance(full, 1, 5) == 2);
        const LoadedCycle two({0, 1, 2, 3, 4, 5}, {{0, 1}, {0, 5}});
        CHECK(cf_distance(two, 1, 5) == 0);
        CHECK(cf_distance(two, 1, 4) == 0);
        CHECK(cf_distance(two, 0, 3) == 1);
        for (Vertex v = 0; v < 6; ++v) {
            CHECK(cf_distance(two, v, v) == 0);
        }
        CHECK_THROWS_AS(cf_distance(two, 0, 9), PreconditionError);
    }

    TEST_CASE("geodesic checks") {
        for (int l = 3; l <= 12; ++l) {
            CHECK_FALSE(is_geodesic_loaded(make_cycle(l), LoadedCycle::fully_loaded(iota_cycle(l))).has_value());
        }
        for (int n = 1; n <= 6; ++n) {
            const auto lat = make_triangular_lattice(n);
            std::vector<Edge> base;
            for (std::size_t i = 0; i + 1 < lat.base_path.size(); ++i) {
                base.emplace_back(lat.base_path[i], lat.base_path[i + 1]);
            }
            const LoadedCycle lc(lat.perimeter, base);
            CHECK(lc.load() == n);
            CHECK_FALSE(is_geodesic_loaded(lat.graph, lc).has_value());
        }
        const auto bad = is_geodesic_loaded(make_complete(4), LoadedCycle::fully_loaded({0, 1, 2, 3}));
        REQUIRE(bad.has_value());
        CHECK(bad->u == 0);
        CHECK(bad->v == 2);
        CHECK(bad->graph_distance == Distance(1));
        CHECK(bad->cycle_distance == 2);
    }

    TEST_CASE("removing loaded edges keeps a cycle geodesic") {
        const Graph g = make_grid(3, 3);
        const auto dist = all_pairs_distances(g);
        const std::vector<Vertex> ring{0, 1, 2, 5, 8, 7, 6, 3};
        for (std::uint32_t mask = 0; mask < 256; ++mask) {
            std::vector<char> flags(8);
            for (std::size_t i = 0; i < 8; ++i) {
                flags[i] = static_cast<char>(mask >> i & 1U);
            }
            if (is_geodesic_loaded(g, dist, LoadedCycle::from_flags(ring, flags))) {
                continue;
            }
            for (std::size_t i = 0; i < 8; ++i) {
                if (flags[i]) {
                    auto fewer = flags;
                    fewer[i] = 0;
                    CHECK_FALSE(is_geodesic_loaded(g, dist, LoadedCycle::from_flags(ring, fewer)).has_value());
                }
            }
        }
    }
}

TEST_SUITE("cycle search") {
    TEST_CASE("simple cycle enumeration counts") {
        auto count = [](const Graph& g) {
            std::size_t n = 0;
            CHECK(for_each_simple_cycle(g, {}, [&](const std::vector<Vertex>&) {
                ++n;
                return Visit::keep_going;
            }));
            return n;
        };
        CHECK(count(make_cycle(7)) == 1);
        CHECK(count(make_path(7)) == 0);
        CHECK(count(make_complete(4)) == 7);
        CHECK(count(make_complete(5)) == 37);
        CHECK(count(make_grid(3, 3)) == 13);
    }

    TEST_CASE("each cycle once in canonical rotation") {
        std::set<std::vector<Vertex>> seen;
        for_each_simple_cycle(make_complete(5), {}, [&](const std::vector<Vertex>& c) {
            CHECK(c.front() == *std::ranges::min_element(c));
            CHECK(c[1] < c.back());
            CHECK(seen.insert(c).second);
            return Visit::keep_going;
        });
    }

    TEST_CASE("caps are reported") {
        std::size_t n = 0;
        const bool complete = for_each_simple_cycle(make_complete(6), {.max_length = 0, .max_cycles = 10},
                                                    [&](const std::vector<Vertex>&) {
                                                        ++n;
                                                        return Visit::keep_going;
                                                    });
        CHECK_FALSE(complete);
        CHECK(n == 10);
        for_each_simple_cycle(make_complete(5), {.max_length = 3, .max_cycles = 1000},
                              [&](const std::vector<Vertex>& c) {
                                  CHECK(c.size() == 3);
                                  return Visit::keep_going;
                              });
        const GlcResult capped = brute_force_glc(make_complete(6), {.max_length = 0, .max_cycles = 5});
        CHECK_FALSE(capped.complete);
    }

    TEST_CASE("branch and bound matches subset search") {
        for (const auto* entry : dwidth::testing::corpus_up_to(8)) {
            const auto dist = all_pairs_distances(entry->graph);
            for_each_simple_cycle(entry->graph, {.max_length = 12, .max_cycles = 200}, [&](const std::vector<Vertex>& c) {
                const LoadedCycle best = max_geodesic_load(dist, c);
                CHECK_MESSAGE(best.load() == max_load_by_subsets(dist, c), entry->name);
                CHECK_FALSE(is_geodesic_loaded(entry->graph, dist, best).has_value());
                return Visit::keep_going;
            });
        }
    }

    TEST_CASE("glc module examples") {
        for (std::uint64_t seed = 1; seed <= 5; ++seed) {
            const GlcResult tree = brute_force_glc(dwidth::testing::random_tree(9, seed));
            CHECK(tree.value == 0);
            CHECK(tree.complete);
            CHECK_FALSE(tree.witness.has_value());
        }
        const GlcResult c6 = brute_force_glc(make_cycle(6));
        CHECK(c6.value == 6);
        REQUIRE(c6.witness.has_value());
        CHECK(c6.witness->load() == 6);
        CHECK(c6.witness->length() == 6);
        const GlcResult k4 = brute_force_glc(make_complete(4));
        CHECK(k4.value == 3);
        REQUIRE(k4.witness.has_value());
        CHECK(k4.witness->length() == 3);
    }

    TEST_CASE("glc sandwich on small corpus graphs") {
        for (const auto* entry : dwidth::testing::corpus_up_to(8)) {
            const GlcResult glc = brute_force_glc(entry->graph);
            REQUIRE(glc.complete);
            const int odw = exact_odw(entry->graph).width;
            CHECK_MESSAGE(odw - 1 <= glc.value, entry->name);
            CHECK_MESSAGE(glc.value <= 3 * odw, entry->name);
            if (glc.witness) {
                CHECK_FALSE(is_geodesic_loaded(entry->graph, *glc.witness).has_value());
            }
        }
    }

    TEST_CASE("some bag sees a third of the load") {
        for (const auto* entry : dwidth::testing::corpus_up_to(8)) {
            const Graph& g = entry->graph;
            const GlcResult glc = brute_force_glc(g);
            if (!glc.witness || glc.witness->load() < 2) {
                continue;
            }
            const LoadedCycle& lc = *glc.witness;
            const TreeDecomposition td = exact_odw(g).decomposition;
            bool found = false;
            for (const auto& bag : td.bags) {
                for (const Vertex u : bag) {
                    for (const Vertex v : bag) {
                        if (lc.contains(u) && lc.contains(v) && 3 * cf_distance(lc, u, v) >= lc.load()) {
                            found = true;
                        }
                    }
                }
            }
            CHECK_MESSAGE(found, entry->name);
        }
    }

    TEST_CASE("geodesic cycles") {
        const GeodesicCycles c6 = enumerate_geodesic_cycles(make_cycle(6));
        CHECK(c6.max_length == 6);
        CHECK(c6.cycles.size() == 1);
        CHECK(c6.complete);
        CHECK(enumerate_geodesic_cycles(make_triangular_lattice(3).graph).max_length == 3);
        CHECK(enumerate_geodesic_cycles(make_complete(4)).max_length == 3);
        CHECK(enumerate_geodesic_cycles(make_path(5)).max_length == 0);
        CHECK(enumerate_geodesic_cycles(make_grid(3, 3)).max_length == 4);
    }

    TEST_CASE("geodesic cycles match the definition") {
        for (const auto* entry : dwidth::testing::corpus_up_to(9)) {
            const Graph& g = entry->graph;
            const auto dist = all_pairs_distances(g);
            std::set<std::vector<Vertex>> expected;
            for_each_simple_cycle(g, {}, [&](const std::vector<Vertex>& c) {
                if (!is_geodesic_loaded(g, dist, LoadedCycle::fully_loaded(c))) {
                    expected.insert(c);
                }
                return Visit::keep_going;
            });
            const GeodesicCycles found = enumerate_geodesic_cycles(g);
            const std::set<std::vector<Vertex>> got(found.cycles.begin(), found.cycles.end());
            CHECK_MESSAGE(got == expected, entry->name);
        }
    }
}
