#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "netform/adversary.hpp"
#include "netform/eval.hpp"
#include "netform/game.hpp"

namespace netform {

enum class EquilibriumClass { None, Linkstable, Swapstable, Nash };
const char* equilibrium_class_name(EquilibriumClass cls);

/// One local move: an edge change (at most one drop and one add) optionally
/// combined with flipping the immunization bit.
struct Deviation {
    enum class Change { None, Drop, Add, Swap };
    int actor = -1;
    Change change = Change::None;
    int drop_target = -1;
    int add_target = -1;
    bool toggle_immunization = false;
};

bool operator==(const Deviation& a, const Deviation& b);

/// Strategy resulting from a deviation. Throws std::invalid_argument if the
/// drop target is not owned or the add target is the actor / already owned.
PlayerStrategy apply_deviation(const PlayerStrategy& current, const Deviation& dev);

/// Single-edge drops and adds, plus every one of those (and the bare flip)
/// combined with toggling immunization. Add targets are the non-neighbors in
/// the induced graph. Order: drops asc, adds asc, bare toggle, drops+toggle
/// asc, adds+toggle asc.
std::vector<Deviation> enumerate_linkstable(const GameState& state, const InducedGraph& graph,
                                            int actor);
/// Linkstable set plus all swaps (owned edge x addable target), each
/// optionally with the immunization toggle. Order: drops, adds, swaps,
/// bare toggle, drops+toggle, adds+toggle, swaps+toggle.
std::vector<Deviation> enumerate_swapstable(const GameState& state, const InducedGraph& graph,
                                            int actor);
std::vector<Deviation> enumerate_linkstable(const GameState& state, int actor);
std::vector<Deviation> enumerate_swapstable(const GameState& state, int actor);

class InstanceTooLarge : public std::runtime_error {
public:
    explicit InstanceTooLarge(const std::string& what) : std::runtime_error(what) {}
};

struct BestResponse {
    PlayerStrategy strategy;
    ExactUtility exact;
    double utility = 0.0;
};

/// Exhaustive best response over all 2^(n-1) purchase sets times the
/// immunization bit. Ties broken toward the current strategy, then fewer
/// purchases, then lexicographic purchase set, then non-immunized.
/// Throws InstanceTooLarge when 2^(n-1) exceeds `limit`.
BestResponse nash_best_response(const GameState& state, int actor, AdversaryKind kind,
                                std::int64_t limit = std::int64_t{1} << 20);

struct EquilibriumReport {
    EquilibriumClass cls = EquilibriumClass::None;
    std::optional<Deviation> witness;  // profitable deviation at the failing stage
    std::optional<std::pair<int, PlayerStrategy>> nash_witness;
    double utility_before = 0.0;
    double utility_after = 0.0;
    /// True when the Nash stage could not be decided: the instance exceeds the
    /// brute-force limit and no improving strategy was found by the witness
    /// probe. The class then caps at Swapstable.
    bool nash_unknown = false;
};

/// Runs the linkstable, swapstable and Nash checks in order and returns the
/// strongest class passed together with the first profitable witness found at
/// the failing stage. Deterministic given the enumeration order.
EquilibriumReport classify(const GameState& state, AdversaryKind kind,
                           std::int64_t nash_limit = std::int64_t{1} << 20);

/// Number of regions with positive attack probability (helper for the
/// "targeted regions cannot be unique" checks).
int targeted_region_count(const GameState& state, AdversaryKind kind);

}  // namespace netform
