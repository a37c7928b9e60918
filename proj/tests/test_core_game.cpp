#include <doctest.h>

#include <set>

#include "fixtures.hpp"
#include "netform/game.hpp"
#include "oracles.hpp"

using namespace netform;

TEST_CASE("induced graph basics") {
    SUBCASE("single purchase yields one edge") {
        auto s = GameState::empty(2, 1, 1).with_strategy(0, {{1}, false});
        const auto g = build_induced_graph(s);
        CHECK(g.edges == std::vector<std::pair<int, int>>{{0, 1}});
        CHECK(g.purchase_count == std::vector<int>{1, 0});
    }
    SUBCASE("mutual purchases dedup to one edge, two charges") {
        auto s = GameState::empty(3, 1, 1)
                     .with_strategy(0, {{1}, false})
                     .with_strategy(1, {{0}, false});
        const auto g = build_induced_graph(s);
        CHECK(g.edge_count() == 1);
        CHECK(g.purchase_count == std::vector<int>{1, 1, 0});
    }
    SUBCASE("hub-spoke: spokes buy the edges to the hub") {
        auto s = GameState::empty(9, 1, 1);
        for (int v = 1; v < 9; ++v) s = s.with_strategy(v, {{0}, false});
        const auto g = build_induced_graph(s);
        CHECK(g.edge_count() == 8);
        CHECK(g.purchase_count[0] == 0);
        CHECK(g.degree(0) == 8);
    }
    SUBCASE("dedup inequality: edges <= total purchases") {
        SplitMix64 rng(7);
        for (int trial = 0; trial < 50; ++trial) {
            const auto s = fixtures::random_state(rng, 8, 0.4, 0.3);
            const auto g = build_induced_graph(s);
            CHECK(g.edge_count() <= s.total_purchases());
        }
    }
}

TEST_CASE("game state validation") {
    CHECK_THROWS_AS(GameState::empty(0, 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(GameState::empty(3, -1, 1), std::invalid_argument);
    CHECK_THROWS_AS(GameState::empty(3, 1, 1).with_strategy(0, {{0}, false}),
                    std::invalid_argument);  // self purchase
    CHECK_THROWS_AS(GameState::empty(3, 1, 1).with_strategy(0, {{3}, false}),
                    std::invalid_argument);  // out of range
    CHECK_THROWS_AS(GameState::empty(3, 1, 1).with_strategy(0, {{1, 1}, false}),
                    std::invalid_argument);  // duplicate
}

TEST_CASE("region decomposition") {
    SUBCASE("seven-vertex example regions") {
        const auto s = fixtures::seven_vertex();
        const auto g = build_induced_graph(s);
        const auto d = decompose_regions(s, g);
        REQUIRE(d.region_count() == 3);
        CHECK(d.vulnerable_regions[0] == std::vector<int>{0});
        CHECK(d.vulnerable_regions[1] == std::vector<int>{3, 4});
        CHECK(d.vulnerable_regions[2] == std::vector<int>{5, 6});
    }
    SUBCASE("all immunized: zero regions") {
        auto s = GameState::empty(4, 1, 1);
        for (int v = 0; v < 4; ++v) s = s.with_strategy(v, {{}, true});
        CHECK(decompose_regions(s, build_induced_graph(s)).region_count() == 0);
    }
    SUBCASE("empty graph, all vulnerable: singletons") {
        const auto s = GameState::empty(4, 1, 1);
        const auto d = decompose_regions(s, build_induced_graph(s));
        REQUIRE(d.region_count() == 4);
        for (int r = 0; r < 4; ++r) CHECK(d.vulnerable_regions[r] == std::vector<int>{r});
    }
    SUBCASE("regions match the BFS oracle on random states") {
        SplitMix64 rng(11);
        for (int trial = 0; trial < 100; ++trial) {
            const auto s = fixtures::random_state(rng, 9, 0.3, 0.4);
            const auto d = decompose_regions(s, build_induced_graph(s));
            CHECK(d.vulnerable_regions == oracle::regions(s));
            // cover: regions + immunized partition all vertices
            int covered = d.vulnerable_count() + static_cast<int>(d.immunized.size());
            CHECK(covered == s.n());
        }
    }
}

TEST_CASE("post attack") {
    const auto s = fixtures::seven_vertex();
    const auto g = build_induced_graph(s);
    const auto d = decompose_regions(s, g);

    SUBCASE("killing region {0} splits the rest in two") {
        const auto view = post_attack(g, d, 0);
        CHECK(view.killed == std::vector<int>{0});
        REQUIRE(view.components.size() == 2);
        CHECK(view.components[0] == std::vector<int>{1, 3, 4});
        CHECK(view.components[1] == std::vector<int>{2, 5, 6});
    }
    SUBCASE("hub-spoke survives any spoke kill as one component") {
        auto hs = GameState::empty(9, 1, 1);
        hs = hs.with_strategy(0, {{}, true});
        for (int v = 1; v < 9; ++v) hs = hs.with_strategy(v, {{0}, false});
        const auto hg = build_induced_graph(hs);
        const auto hd = decompose_regions(hs, hg);
        REQUIRE(hd.region_count() == 8);
        for (int r = 0; r < 8; ++r) {
            const auto view = post_attack(hg, hd, r);
            REQUIRE(view.components.size() == 1);
            CHECK(view.components[0].size() == 8);
        }
    }
    SUBCASE("killed vertices never appear in components") {
        SplitMix64 rng(13);
        for (int trial = 0; trial < 50; ++trial) {
            const auto st = fixtures::random_state(rng, 8, 0.35, 0.3);
            const auto gg = build_induced_graph(st);
            const auto dd = decompose_regions(st, gg);
            for (int r = 0; r < dd.region_count(); ++r) {
                const auto view = post_attack(gg, dd, r);
                for (int v : view.killed) CHECK(view.component_of[v] == -1);
                std::set<int> killed(view.killed.begin(), view.killed.end());
                CHECK(oracle::components(st.n(), oracle::edges_of(st), killed) ==
                      view.components);
            }
        }
    }
    SUBCASE("region index out of range throws") {
        CHECK_THROWS_AS(post_attack(g, d, 3), std::out_of_range);
        CHECK_THROWS_AS(post_attack(g, d, -1), std::out_of_range);
    }
}

TEST_CASE("network equivalence") {
    SUBCASE("reflexive") {
        const auto s = fixtures::seven_vertex();
        CHECK(equivalent(s, s));
    }
    SUBCASE("parallel purchase of an existing edge is equivalent") {
        const auto s = fixtures::seven_vertex();
        auto s2 = s.with_strategy(4, {{3}, false});  // 3-4 already bought by 3
        CHECK(equivalent(s, s2));
    }
    SUBCASE("immunized path vs triangle") {
        auto path = GameState::empty(3, 1, 1);
        for (int v = 0; v < 3; ++v) path = path.with_strategy(v, {{}, true});
        auto triangle = path;
        path = path.with_strategy(0, {{1}, true}).with_strategy(1, {{2}, true});
        triangle = triangle.with_strategy(0, {{1, 2}, true}).with_strategy(1, {{2}, true});
        CHECK(equivalent(path, triangle));
    }
    SUBCASE("vulnerable path vs triangle are not equivalent") {
        auto path = GameState::empty(3, 1, 1).with_strategy(0, {{1}, false}).with_strategy(
            1, {{2}, false});
        auto tri = path.with_strategy(2, {{0}, false});
        // same regions, but killing the region kills everything in both; the
        // post-attack components for immunized seeds differ? both fully
        // vulnerable: every seed kills all three -> actually equivalent.
        CHECK(equivalent(path, tri));
        // breaking the path into two pieces is not equivalent to the path
        auto split = GameState::empty(3, 1, 1).with_strategy(0, {{1}, false});
        CHECK_FALSE(equivalent(path, split));
    }
    SUBCASE("mismatched immunization sets throw") {
        const auto s = fixtures::seven_vertex();
        const auto other = s.with_strategy(0, {{1, 2}, true});
        CHECK_THROWS_AS(equivalent(s, other), std::invalid_argument);
    }
    SUBCASE("equivalence relation on random instances") {
        SplitMix64 rng(17);
        int transitives = 0;
        for (int trial = 0; trial < 60; ++trial) {
            const auto a = fixtures::random_state(rng, 6, 0.4, 0.4);
            auto b = fixtures::random_state(rng, 6, 0.4, 0.0);
            // align immunization patterns so the precondition holds
            for (int v = 0; v < 6; ++v)
                b = b.with_strategy(v, {b.strategy(v).purchases, a.immunized(v)});
            const bool ab = equivalent(a, b);
            CHECK(equivalent(a, a));
            CHECK(equivalent(b, b));
            CHECK(equivalent(b, a) == ab);  // symmetric
            if (ab) ++transitives;
        }
        (void)transitives;
    }
}

TEST_CASE("equivalence is transitive along redundant-purchase chains") {
    const auto s = fixtures::seven_vertex();
    const auto s2 = s.with_strategy(4, {{3}, false});   // duplicate 3-4
    const auto s3 = s2.with_strategy(6, {{5}, false});  // duplicate 5-6 too
    CHECK(equivalent(s, s2));
    CHECK(equivalent(s2, s3));
    CHECK(equivalent(s, s3));
}

TEST_CASE("single-vertex game") {
    const auto s = GameState::empty(1, 1.0, 1.0);
    const auto g = build_induced_graph(s);
    const auto d = decompose_regions(s, g);
    REQUIRE(d.region_count() == 1);
    const auto view = post_attack(g, d, 0);
    CHECK(view.killed == std::vector<int>{0});
    CHECK(view.components.empty());
}
