#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "netform/adversary.hpp"
#include "netform/deviation.hpp"
#include "netform/game.hpp"

namespace netform {

enum class TieBreakKind { PreferCurrent, RandomAmongBest, Adversarial };

/// Update-selection rule. PreferCurrent keeps the current action unless a
/// strictly better deviation exists (max gain, then enumeration order).
/// RandomAmongBest picks uniformly among the strict improvers of maximal
/// gain (staying put when nothing improves).
/// Adversarial replays a fixed move script (round, actor) -> deviation,
/// used to reproduce the canonical best-response cycle.
struct TieBreakPolicy {
    TieBreakKind kind = TieBreakKind::PreferCurrent;
    std::uint64_t seed = 0;
    std::map<std::pair<int, int>, Deviation> script;  // (round, actor) -> move
    int script_period_start = 0;  // rounds beyond the script repeat with this period
    int script_period = 0;

    static TieBreakPolicy prefer_current() { return {}; }
    static TieBreakPolicy random_among_best(std::uint64_t seed) {
        TieBreakPolicy p;
        p.kind = TieBreakKind::RandomAmongBest;
        p.seed = seed;
        return p;
    }
};

/// Scripted policy reproducing the 4-periodic best-response cycle on the
/// five-paths-of-four instance (catalog family best-response-cycle-paths).
TieBreakPolicy scripted_cycle_policy(int components = 5);

enum class DeviationSet { Linkstable, Swapstable };

struct DynamicsConfig {
    std::vector<int> order;  // permutation of [0,n); empty means ascending
    int max_rounds = 200;
    TieBreakPolicy policy;
    AdversaryKind adversary = AdversaryKind::MaxCarnage;
    DeviationSet deviations = DeviationSet::Swapstable;
};

struct RoundMetrics {
    int round = 0;  // 1-based
    int edge_count = 0;
    int immunization_count = 0;
    double avg_welfare = 0.0;  // social welfare / n
    int changes = 0;           // players whose action changed this round
};

enum class DynamicsOutcome { Converged, Cycled, RoundLimit };
const char* outcome_name(DynamicsOutcome o);

struct DynamicsTrace {
    int initial_edge_count = 0;
    int initial_immunization_count = 0;
    double initial_avg_welfare = 0.0;
    std::vector<RoundMetrics> rounds;
    DynamicsOutcome outcome = DynamicsOutcome::RoundLimit;
    GameState final_state;
    int rounds_to_converge = -1;   // set when Converged
    int first_repeat_round = -1;   // set when Cycled: boundary state of this
    int period = -1;               // round equals the one `period` rounds before
};

/// Round-based best-response dynamics: within a round players update
/// sequentially in the configured order, each seeing all earlier updates.
/// Stops on a zero-change round (Converged), on an exact state revisit at a
/// round boundary (Cycled) or at max_rounds.
DynamicsTrace run_swapstable_dynamics(const GameState& initial, const DynamicsConfig& config);

/// Stable digest of the strategy profile (FNV-1a over a canonical encoding).
std::uint64_t canonical_hash(const GameState& state);

}  // namespace netform
