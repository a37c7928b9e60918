#include "netform/dynamics.hpp"

#include <algorithm>
#include <stdexcept>

#include "netform/payoff.hpp"
#include "netform/rng.hpp"

namespace netform {

const char* outcome_name(DynamicsOutcome o) {
    switch (o) {
        case DynamicsOutcome::Converged: return "converged";
        case DynamicsOutcome::Cycled: return "cycled";
        case DynamicsOutcome::RoundLimit: return "round_limit";
    }
    return "?";
}

std::uint64_t canonical_hash(const GameState& state) {
    std::uint64_t h = 1469598103934665603ull;
    auto mix = [&h](std::uint64_t v) {
        for (int i = 0; i < 8; ++i) {
            h ^= (v >> (i * 8)) & 0xFF;
            h *= 1099511628211ull;
        }
    };
    mix(static_cast<std::uint64_t>(state.n()));
    for (int i = 0; i < state.n(); ++i) {
        const auto& s = state.strategy(i);
        mix(s.immunized ? 0x1Dull : 0x2Full);
        mix(static_cast<std::uint64_t>(s.purchases.size()));
        for (int t : s.purchases) mix(static_cast<std::uint64_t>(t));
    }
    return h;
}

TieBreakPolicy scripted_cycle_policy(int components) {
    // Component-local moves per round, with local labels 0..3 along the
    // initial path. Rounds 2..5 repeat forever with period 4.
    struct Move {
        int round, local_actor;
        Deviation::Change change;
        int local_drop, local_add;
    };
    static const Move moves[] = {
        {1, 2, Deviation::Change::Drop, 3, -1}, {1, 3, Deviation::Change::Add, -1, 0},
        {2, 1, Deviation::Change::Drop, 2, -1}, {2, 2, Deviation::Change::Add, -1, 3},
        {3, 0, Deviation::Change::Drop, 1, -1}, {3, 1, Deviation::Change::Add, -1, 2},
        {4, 3, Deviation::Change::Drop, 0, -1},
        {5, 0, Deviation::Change::Add, -1, 1},  {5, 2, Deviation::Change::Drop, 3, -1},
        {5, 3, Deviation::Change::Add, -1, 0},
    };
    TieBreakPolicy policy;
    policy.kind = TieBreakKind::Adversarial;
    policy.script_period_start = 2;
    policy.script_period = 4;
    for (int comp = 0; comp < components; ++comp) {
        const int base = 4 * comp;
        for (const Move& m : moves) {
            Deviation d;
            d.actor = base + m.local_actor;
            d.change = m.change;
            d.drop_target = m.local_drop >= 0 ? base + m.local_drop : -1;
            d.add_target = m.local_add >= 0 ? base + m.local_add : -1;
            policy.script[{m.round, d.actor}] = d;
        }
    }
    return policy;
}

namespace {

struct UpdateDecision {
    bool changed = false;
    PlayerStrategy strategy;
};

// candidate purchase list for a deviation, composed into a reused buffer
void compose_targets(const std::vector<int>& purchases, const Deviation& dev,
                     std::vector<int>& out) {
    out.clear();
    for (int t : purchases)
        if (!(dev.change == Deviation::Change::Drop || dev.change == Deviation::Change::Swap) ||
            t != dev.drop_target)
            out.push_back(t);
    if (dev.change == Deviation::Change::Add || dev.change == Deviation::Change::Swap)
        out.insert(std::lower_bound(out.begin(), out.end(), dev.add_target), dev.add_target);
}

UpdateDecision select_update(const GameState& state, const InducedGraph& graph, Evaluator& ev,
                             int actor, const DynamicsConfig& config, int round,
                             SplitMix64& rng, std::vector<int>& scratch) {
    const double c = state.edge_cost(), b = state.immunization_cost();
    const TieBreakPolicy& policy = config.policy;

    if (policy.kind == TieBreakKind::Adversarial) {
        int effective = round;
        if (policy.script_period > 0 && !policy.script.empty()) {
            const int last = policy.script.rbegin()->first.first;
            if (round > last && round >= policy.script_period_start)
                effective = (round - policy.script_period_start) % policy.script_period +
                            policy.script_period_start;
        }
        const auto it = policy.script.find({effective, actor});
        if (it == policy.script.end()) return {};
        UpdateDecision out;
        out.changed = true;
        Deviation dev = it->second;
        dev.actor = actor;
        out.strategy = apply_deviation(state.strategy(actor), dev);
        return out;
    }

    const ExactUtility current = ev.evaluate_current(actor);
    const auto devs = config.deviations == DeviationSet::Swapstable
                          ? enumerate_swapstable(state, graph, actor)
                          : enumerate_linkstable(state, graph, actor);

    const auto& purchases = state.strategy(actor).purchases;
    const bool cur_imm = state.immunized(actor);

    if (policy.kind == TieBreakKind::PreferCurrent) {
        ExactUtility best = current;
        int best_index = -1;
        for (int k = 0; k < static_cast<int>(devs.size()); ++k) {
            compose_targets(purchases, devs[k], scratch);
            const bool imm = devs[k].toggle_immunization ? !cur_imm : cur_imm;
            const ExactUtility u = ev.evaluate(actor, scratch, imm);
            if (compare_exact(u, best, c, b) > 0) {
                best = u;
                best_index = k;
            }
        }
        if (best_index < 0) return {};
        UpdateDecision out;
        out.changed = true;
        out.strategy = apply_deviation(state.strategy(actor), devs[best_index]);
        return out;
    }

    // RandomAmongBest: uniform over the strictly improving deviations of
    // maximal gain; stays put when nothing strictly improves, so every
    // applied update still raises the actor's utility.
    ExactUtility best = current;
    std::vector<int> best_set;
    for (int k = 0; k < static_cast<int>(devs.size()); ++k) {
        compose_targets(purchases, devs[k], scratch);
        const bool imm = devs[k].toggle_immunization ? !cur_imm : cur_imm;
        const ExactUtility u = ev.evaluate(actor, scratch, imm);
        const int cmp = compare_exact(u, best, c, b);
        if (cmp > 0) {
            best = u;
            best_set.assign(1, k);
        } else if (cmp == 0 && !best_set.empty()) {
            best_set.push_back(k);
        }
    }
    if (best_set.empty()) return {};
    const int pick = best_set[static_cast<int>(rng.next_below(best_set.size()))];
    UpdateDecision out;
    out.changed = true;
    out.strategy = apply_deviation(state.strategy(actor), devs[pick]);
    return out;
}

}  // namespace

DynamicsTrace run_swapstable_dynamics(const GameState& initial, const DynamicsConfig& config) {
    const int n = initial.n();
    std::vector<int> order = config.order;
    if (order.empty()) {
        order.resize(n);
        for (int i = 0; i < n; ++i) order[i] = i;
    }
    {
        std::vector<int> check = order;
        std::sort(check.begin(), check.end());
        for (int i = 0; i < n; ++i)
            if (i >= static_cast<int>(check.size()) || check[i] != i)
                throw std::invalid_argument("dynamics order must be a permutation of [0,n)");
    }
    if (config.max_rounds < 1) throw std::invalid_argument("max_rounds must be positive");

    SplitMix64 rng(config.policy.seed);

    auto metrics_of = [&](const GameState& s, int round, int changes) {
        const InducedGraph g = build_induced_graph(s);
        const RegionDecomposition d = decompose_regions(s, g);
        const AttackDistribution a = attack_distribution(s, g, d, config.adversary);
        RoundMetrics m;
        m.round = round;
        m.edge_count = g.edge_count();
        m.immunization_count = s.immunized_count();
        m.avg_welfare = social_welfare_component_form(s, g, d, a) / n;
        m.changes = changes;
        return m;
    };

    DynamicsTrace trace{0, 0, 0.0, {}, DynamicsOutcome::RoundLimit, initial};
    {
        const RoundMetrics m0 = metrics_of(initial, 0, 0);
        trace.initial_edge_count = m0.edge_count;
        trace.initial_immunization_count = m0.immunization_count;
        trace.initial_avg_welfare = m0.avg_welfare;
    }

    GameState state = initial;
    // boundary states (before round k+1 at index k) for cycle detection
    std::vector<std::pair<std::uint64_t, GameState>> boundaries;
    boundaries.emplace_back(canonical_hash(state), state);

    std::vector<int> scratch;
    scratch.reserve(n);
    InducedGraph graph = build_induced_graph(state);
    Evaluator ev(state, config.adversary);
    for (int round = 1; round <= config.max_rounds; ++round) {
        int changes = 0;
        for (int actor : order) {
            UpdateDecision upd =
                select_update(state, graph, ev, actor, config, round, rng, scratch);
            if (upd.changed && !(upd.strategy == state.strategy(actor))) {
                state = state.with_strategy(actor, std::move(upd.strategy));
                graph = build_induced_graph(state);
                ev = Evaluator(state, config.adversary);
                ++changes;
            }
        }
        trace.rounds.push_back(metrics_of(state, round, changes));
        if (changes == 0) {
            trace.outcome = DynamicsOutcome::Converged;
            trace.rounds_to_converge = round;
            trace.final_state = state;
            return trace;
        }
        const std::uint64_t h = canonical_hash(state);
        for (int k = 0; k < static_cast<int>(boundaries.size()); ++k) {
            if (boundaries[k].first == h && boundaries[k].second == state) {
                trace.outcome = DynamicsOutcome::Cycled;
                trace.first_repeat_round = round + 1;  // boundary before round+1
                trace.period = round + 1 - (k + 1);
                trace.final_state = state;
                return trace;
            }
        }
        boundaries.emplace_back(h, state);
    }
    trace.outcome = DynamicsOutcome::RoundLimit;
    trace.final_state = state;
    return trace;
}

}  // namespace netform
