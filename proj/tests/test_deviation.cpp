#include <doctest.h>

#include <algorithm>
#include <set>

#include "fixtures.hpp"
#include "netform/catalog.hpp"
#include "netform/deviation.hpp"
#include "netform/payoff.hpp"
#include "oracles.hpp"

using namespace netform;

namespace {

oracle::Adv to_oracle(AdversaryKind kind) {
    switch (kind) {
        case AdversaryKind::MaxCarnage: return oracle::Adv::Carnage;
        case AdversaryKind::RandomAttack: return oracle::Adv::Random;
        case AdversaryKind::MaxDisruption: return oracle::Adv::Disruption;
    }
    return oracle::Adv::Carnage;
}

}  // namespace

TEST_CASE("deviation enumeration counts and order") {
    SUBCASE("vulnerable actor in an empty 3-vertex graph: 5 linkstable moves") {
        const auto s = GameState::empty(3, 1, 1);
        const auto devs = enumerate_linkstable(s, 0);
        REQUIRE(devs.size() == 5);
        CHECK(devs[0].change == Deviation::Change::Add);
        CHECK(devs[0].add_target == 1);
        CHECK(devs[1].add_target == 2);
        CHECK(devs[2].change == Deviation::Change::None);
        CHECK(devs[2].toggle_immunization);
        CHECK(devs[3].toggle_immunization);
        CHECK(devs[3].change == Deviation::Change::Add);
    }
    SUBCASE("hub of the hub-spoke owns nothing and neighbors everyone") {
        const auto r = generate(Family::HubSpoke, {.n = 9}, 1.0, 1.0);
        const auto devs = enumerate_linkstable(r.state, 0);
        REQUIRE(devs.size() == 1);
        CHECK(devs[0].change == Deviation::Change::None);
        CHECK(devs[0].toggle_immunization);
    }
    SUBCASE("spoke of the hub-spoke: 17 linkstable moves") {
        const auto r = generate(Family::HubSpoke, {.n = 9}, 1.0, 1.0);
        CHECK(enumerate_linkstable(r.state, 3).size() == 17);  // 1+7+1+1+7
    }
    SUBCASE("swapstable count: one purchase, two addable targets") {
        auto s = GameState::empty(4, 1, 1).with_strategy(0, {{1}, false});
        const auto devs = enumerate_swapstable(s, 0);
        // drops 1, adds 2, swaps 2, toggle 1, drops+t 1, adds+t 2, swaps+t 2
        CHECK(devs.size() == 11);
    }
    SUBCASE("actor without purchases has no swaps") {
        const auto s = GameState::empty(4, 1, 1);
        CHECK(enumerate_swapstable(s, 0).size() == enumerate_linkstable(s, 0).size());
    }
}

TEST_CASE("nash best response") {
    SUBCASE("two isolated vulnerable vertices, c=2, b=5: do nothing") {
        const auto s = GameState::empty(2, 2.0, 5.0);
        const auto br = nash_best_response(s, 0, AdversaryKind::MaxCarnage);
        CHECK(br.strategy.purchases.empty());
        CHECK_FALSE(br.strategy.immunized);
        CHECK(br.utility == doctest::Approx(0.5));
    }
    SUBCASE("all-immunized spanning tree: keep the single purchase") {
        const auto r = generate(Family::TreeAllImmunized, {.n = 8}, 2.0, 1.0);
        for (int i = 0; i < 8; ++i) {
            const auto br = nash_best_response(r.state, i, AdversaryKind::MaxCarnage);
            CHECK(br.strategy == r.state.strategy(i));
        }
    }
    SUBCASE("instance too large throws") {
        const auto s = GameState::empty(12, 1, 1);
        CHECK_THROWS_AS(nash_best_response(s, 0, AdversaryKind::MaxCarnage, 1 << 10),
                        InstanceTooLarge);
    }
    SUBCASE("agrees with the naive enumeration oracle") {
        SplitMix64 rng(61);
        for (int trial = 0; trial < 25; ++trial) {
            const auto s = fixtures::random_state(rng, 7, 0.35, 0.3);
            for (auto kind : {AdversaryKind::MaxCarnage, AdversaryKind::RandomAttack}) {
                for (int i = 0; i < s.n(); ++i) {
                    const auto br = nash_best_response(s, i, kind);
                    const double naive = oracle::best_response_utility(s, i, to_oracle(kind));
                    CHECK(br.utility == doctest::Approx(naive).epsilon(1e-12));
                }
            }
        }
    }
}

TEST_CASE("classify on canonical instances") {
    SUBCASE("hub-spoke n=9, c=1, b=1 is Nash under maximum carnage") {
        const auto r = generate(Family::HubSpoke, {.n = 9}, 1.0, 1.0);
        const auto report = classify(r.state, AdversaryKind::MaxCarnage);
        CHECK(report.cls == EquilibriumClass::Nash);
        CHECK_FALSE(report.nash_unknown);
    }
    SUBCASE("two vulnerable vertices joined by one edge, c=2, b=5: not even linkstable") {
        const auto s = GameState::empty(2, 2.0, 5.0).with_strategy(0, {{1}, false});
        const auto report = classify(s, AdversaryKind::MaxCarnage);
        CHECK(report.cls == EquilibriumClass::None);
        REQUIRE(report.witness.has_value());
        CHECK(report.witness->actor == 0);
        CHECK(report.witness->change == Deviation::Change::Drop);
        CHECK(report.utility_after > report.utility_before);
    }
    SUBCASE("21-cycle with every third vertex immunized: exactly linkstable") {
        const auto r = generate(Family::LinkNotSwap, {.k = 7}, 2.0, 4.0);
        CHECK(r.valid);
        const auto report = classify(r.state, AdversaryKind::MaxCarnage);
        CHECK(report.cls == EquilibriumClass::Linkstable);
        REQUIRE(report.witness.has_value());
        CHECK(report.witness->change == Deviation::Change::Swap);
        // replay the witness: it must strictly improve the actor
        const auto& w = *report.witness;
        const auto after = r.state.with_strategy(w.actor,
                                                 apply_deviation(r.state.strategy(w.actor), w));
        const double u0 = expected_utility(
            r.state, attack_distribution(r.state, AdversaryKind::MaxCarnage), w.actor);
        const double u1 = expected_utility(
            after, attack_distribution(after, AdversaryKind::MaxCarnage), w.actor);
        CHECK(u1 > u0);
    }
    SUBCASE("nine trees of three, c=1, b=4: swapstable with a Nash witness") {
        const auto r = generate(Family::SwapNotNash, {.k = 9}, 1.0, 4.0);
        CHECK(r.valid);
        const auto report = classify(r.state, AdversaryKind::MaxCarnage);
        CHECK(report.cls == EquilibriumClass::Swapstable);
        CHECK_FALSE(report.nash_unknown);
        REQUIRE(report.nash_witness.has_value());
        CHECK(report.nash_witness->second.immunized);
        CHECK(report.nash_witness->second.purchases.size() >= 8);
        CHECK(report.utility_after - report.utility_before >= 3.0);
    }
}

TEST_CASE("classify agrees with the brute-force deviation oracle") {
    SplitMix64 rng(67);
    for (int trial = 0; trial < 60; ++trial) {
        const auto s = fixtures::random_state(rng, 6, 0.35, 0.3);
        for (auto kind : {AdversaryKind::MaxCarnage, AdversaryKind::MaxDisruption}) {
            const auto report = classify(s, kind);
            const bool link_break = oracle::has_profitable_deviation(s, to_oracle(kind), false);
            const bool swap_break = oracle::has_profitable_deviation(s, to_oracle(kind), true);
            if (link_break) {
                CHECK(report.cls == EquilibriumClass::None);
            } else if (swap_break) {
                CHECK(report.cls == EquilibriumClass::Linkstable);
            } else {
                CHECK(report.cls >= EquilibriumClass::Swapstable);
            }
        }
    }
}

TEST_CASE("hierarchy and witness validity on random instances") {
    SplitMix64 rng(71);
    int with_witness = 0;
    for (int trial = 0; trial < 60; ++trial) {
        const auto s = fixtures::random_state(rng, 6, 0.3, 0.3);
        const auto report = classify(s, AdversaryKind::MaxCarnage);
        if (report.witness) {
            const auto& w = *report.witness;
            const auto after =
                s.with_strategy(w.actor, apply_deviation(s.strategy(w.actor), w));
            const double u0 =
                expected_utility(s, attack_distribution(s, AdversaryKind::MaxCarnage), w.actor);
            const double u1 = expected_utility(
                after, attack_distribution(after, AdversaryKind::MaxCarnage), w.actor);
            CHECK(u1 > u0 - 1e-12);
            ++with_witness;
        }
        if (report.cls >= EquilibriumClass::Linkstable && s.n() > 1) {
            // the number of targeted regions is never one at stable states
            CHECK(targeted_region_count(s, AdversaryKind::MaxCarnage) != 1);
        }
        if (report.cls == EquilibriumClass::Nash) {
            CHECK_FALSE(oracle::has_profitable_deviation(s, oracle::Adv::Carnage, true));
        }
    }
    CHECK(with_witness > 10);
}

TEST_CASE("profitable deviations imply a strictly improving best response") {
    SplitMix64 rng(73);
    for (int trial = 0; trial < 30; ++trial) {
        const auto s = fixtures::random_state(rng, 7, 0.3, 0.3);
        const auto report = classify(s, AdversaryKind::MaxCarnage);
        if (report.cls > EquilibriumClass::None) continue;
        REQUIRE(report.witness.has_value());
        const int actor = report.witness->actor;
        const auto br = nash_best_response(s, actor, AdversaryKind::MaxCarnage);
        const double u0 =
            expected_utility(s, attack_distribution(s, AdversaryKind::MaxCarnage), actor);
        CHECK(br.utility > u0);
    }
}

TEST_CASE("single-vertex classification") {
    // the lone vulnerable vertex is attacked with probability one; immunizing
    // pays off only when b < 1
    const auto cheap = classify(GameState::empty(1, 1.0, 0.5), AdversaryKind::MaxCarnage);
    CHECK(cheap.cls == EquilibriumClass::None);
    REQUIRE(cheap.witness.has_value());
    CHECK(cheap.witness->toggle_immunization);
    const auto costly = classify(GameState::empty(1, 1.0, 2.0), AdversaryKind::MaxCarnage);
    CHECK(costly.cls == EquilibriumClass::Nash);
}
