#include "netform/deviation.hpp"

#include <algorithm>

namespace netform {

const char* equilibrium_class_name(EquilibriumClass cls) {
    switch (cls) {
        case EquilibriumClass::None: return "none";
        case EquilibriumClass::Linkstable: return "linkstable";
        case EquilibriumClass::Swapstable: return "swapstable";
        case EquilibriumClass::Nash: return "nash";
    }
    return "?";
}

bool operator==(const Deviation& a, const Deviation& b) {
    return a.actor == b.actor && a.change == b.change && a.drop_target == b.drop_target &&
           a.add_target == b.add_target && a.toggle_immunization == b.toggle_immunization;
}

PlayerStrategy apply_deviation(const PlayerStrategy& current, const Deviation& dev) {
    PlayerStrategy next = current;
    auto drop = [&](int t) {
        auto it = std::find(next.purchases.begin(), next.purchases.end(), t);
        if (it == next.purchases.end())
            throw std::invalid_argument("deviation drops an unowned edge");
        next.purchases.erase(it);
    };
    auto add = [&](int t) {
        if (t == dev.actor) throw std::invalid_argument("deviation adds a self-edge");
        auto it = std::lower_bound(next.purchases.begin(), next.purchases.end(), t);
        if (it != next.purchases.end() && *it == t)
            throw std::invalid_argument("deviation adds an already-owned edge");
        next.purchases.insert(it, t);
    };
    switch (dev.change) {
        case Deviation::Change::None: break;
        case Deviation::Change::Drop: drop(dev.drop_target); break;
        case Deviation::Change::Add: add(dev.add_target); break;
        case Deviation::Change::Swap:
            drop(dev.drop_target);
            add(dev.add_target);
            break;
    }
    if (dev.toggle_immunization) next.immunized = !next.immunized;
    return next;
}

namespace {

std::vector<int> addable_targets(const GameState& state, const InducedGraph& graph,
                                 int actor) {
    std::vector<int> out;
    for (int t = 0; t < state.n(); ++t)
        if (t != actor && !graph.has_edge(actor, t)) out.push_back(t);
    return out;
}

void append_edge_moves(std::vector<Deviation>& out, const GameState& state,
                       const std::vector<int>& addable, int actor, bool swaps, bool toggle) {
    const auto& owned = state.strategy(actor).purchases;
    for (int t : owned)
        out.push_back({actor, Deviation::Change::Drop, t, -1, toggle});
    for (int t : addable)
        out.push_back({actor, Deviation::Change::Add, -1, t, toggle});
    if (swaps)
        for (int d : owned)
            for (int a : addable)
                out.push_back({actor, Deviation::Change::Swap, d, a, toggle});
}

}  // namespace

std::vector<Deviation> enumerate_linkstable(const GameState& state, const InducedGraph& graph,
                                            int actor) {
    std::vector<Deviation> out;
    const auto addable = addable_targets(state, graph, actor);
    append_edge_moves(out, state, addable, actor, false, false);
    out.push_back({actor, Deviation::Change::None, -1, -1, true});
    append_edge_moves(out, state, addable, actor, false, true);
    return out;
}

std::vector<Deviation> enumerate_swapstable(const GameState& state, const InducedGraph& graph,
                                            int actor) {
    std::vector<Deviation> out;
    const auto addable = addable_targets(state, graph, actor);
    append_edge_moves(out, state, addable, actor, true, false);
    out.push_back({actor, Deviation::Change::None, -1, -1, true});
    append_edge_moves(out, state, addable, actor, true, true);
    return out;
}

std::vector<Deviation> enumerate_linkstable(const GameState& state, int actor) {
    return enumerate_linkstable(state, build_induced_graph(state), actor);
}

std::vector<Deviation> enumerate_swapstable(const GameState& state, int actor) {
    return enumerate_swapstable(state, build_induced_graph(state), actor);
}

namespace {

// lexicographic comparison of two sorted id sets encoded as bit masks
bool mask_lex_less(std::uint64_t a, std::uint64_t b) {
    while (a && b) {
        const int la = __builtin_ctzll(a), lb = __builtin_ctzll(b);
        if (la != lb) return la < lb;
        a &= a - 1;
        b &= b - 1;
    }
    return a == 0 && b != 0;
}

std::vector<int> mask_to_targets(std::uint64_t mask) {
    std::vector<int> out;
    while (mask) {
        out.push_back(__builtin_ctzll(mask));
        mask &= mask - 1;
    }
    return out;
}

}  // namespace

BestResponse nash_best_response(const GameState& state, int actor, AdversaryKind kind,
                                std::int64_t limit) {
    const int n = state.n();
    if (n - 1 > 62 || (std::int64_t{1} << (n - 1)) > limit)
        throw InstanceTooLarge("nash_best_response: 2^(n-1) strategies exceed the limit of " +
                               std::to_string(limit));
    Evaluator ev(state, kind);
    const double c = state.edge_cost(), b = state.immunization_cost();

    const auto& cur = state.strategy(actor);
    std::uint64_t cur_mask = 0;
    for (int t : cur.purchases) cur_mask |= std::uint64_t{1} << t;

    struct Candidate {
        std::uint64_t mask;
        bool immunized;
        ExactUtility exact;
        bool is_current;
    };
    Candidate best{cur_mask, cur.immunized, ev.evaluate_current(actor), true};

    auto better = [&](const Candidate& a, const Candidate& x) {
        const int cmp = compare_exact(a.exact, x.exact, c, b);
        if (cmp != 0) return cmp > 0;
        if (a.is_current != x.is_current) return a.is_current;
        const int pa = __builtin_popcountll(a.mask), px = __builtin_popcountll(x.mask);
        if (pa != px) return pa < px;
        if (a.mask != x.mask) return mask_lex_less(a.mask, x.mask);
        return !a.immunized && x.immunized;
    };

    const std::uint64_t low_mask = (std::uint64_t{1} << actor) - 1;
    const std::uint64_t count = std::uint64_t{1} << (n - 1);
    for (std::uint64_t raw = 0; raw < count; ++raw) {
        const std::uint64_t mask = (raw & low_mask) | ((raw & ~low_mask) << 1);
        for (int imm = 0; imm < 2; ++imm) {
            Candidate cand{mask, imm == 1, {}, mask == cur_mask && (imm == 1) == cur.immunized};
            cand.exact = ev.evaluate_mask(actor, mask, cand.immunized);
            if (better(cand, best)) best = cand;
        }
    }
    BestResponse out;
    out.strategy.purchases = mask_to_targets(best.mask);
    out.strategy.immunized = best.immunized;
    out.exact = best.exact;
    out.utility = best.exact.value(c, b);
    return out;
}

namespace {

// Cheap sound probe for a profitable arbitrary (Nash) deviation when the
// instance is too large for exhaustive search. Tries, for each immunization
// bit, connecting to one representative of every other component, and the
// empty strategy. Finding an improvement proves the state is not Nash;
// finding none proves nothing.
std::vector<PlayerStrategy> nash_probe_candidates(const GameState& state,
                                                  const InducedGraph& graph, int actor) {
    const int n = state.n();
    std::vector<int> comp_of(n, -1);
    int comps = 0;
    for (int start = 0; start < n; ++start) {
        if (comp_of[start] >= 0) continue;
        std::vector<int> stack = {start};
        comp_of[start] = comps;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int u : graph.adjacency[v])
                if (comp_of[u] < 0) {
                    comp_of[u] = comps;
                    stack.push_back(u);
                }
        }
        ++comps;
    }
    std::vector<int> reps;  // min vertex of every component other than the actor's
    std::vector<char> seen_comp(comps, 0);
    for (int v = 0; v < n; ++v) {
        if (comp_of[v] == comp_of[actor] || seen_comp[comp_of[v]]) continue;
        seen_comp[comp_of[v]] = 1;
        reps.push_back(v);
    }
    std::vector<int> joined = state.strategy(actor).purchases;
    joined.insert(joined.end(), reps.begin(), reps.end());
    std::sort(joined.begin(), joined.end());
    joined.erase(std::unique(joined.begin(), joined.end()), joined.end());

    std::vector<PlayerStrategy> out;
    for (bool imm : {false, true}) {
        out.push_back({joined, imm});
        out.push_back({{}, imm});
    }
    return out;
}

}  // namespace

EquilibriumReport classify(const GameState& state, AdversaryKind kind,
                           std::int64_t nash_limit) {
    const int n = state.n();
    const double c = state.edge_cost(), b = state.immunization_cost();
    const InducedGraph graph = build_induced_graph(state);
    Evaluator ev(state, kind);

    EquilibriumReport report;

    std::vector<ExactUtility> current(n);
    for (int i = 0; i < n; ++i) current[i] = ev.evaluate_current(i);

    std::vector<int> scratch;
    auto find_witness = [&](bool swaps) -> std::optional<Deviation> {
        for (int i = 0; i < n; ++i) {
            const auto devs = swaps ? enumerate_swapstable(state, graph, i)
                                    : enumerate_linkstable(state, graph, i);
            for (const auto& d : devs) {
                const PlayerStrategy cand = apply_deviation(state.strategy(i), d);
                const ExactUtility u = ev.evaluate(i, cand);
                if (compare_exact(u, current[i], c, b) > 0) {
                    report.utility_before = current[i].value(c, b);
                    report.utility_after = u.value(c, b);
                    return d;
                }
            }
        }
        return std::nullopt;
    };

    if (auto w = find_witness(false)) {
        report.cls = EquilibriumClass::None;
        report.witness = w;
        return report;
    }
    if (auto w = find_witness(true)) {
        report.cls = EquilibriumClass::Linkstable;
        report.witness = w;
        return report;
    }

    const bool nash_feasible =
        n - 1 <= 62 && (std::int64_t{1} << (n - 1)) <= nash_limit;
    if (nash_feasible) {
        for (int i = 0; i < n; ++i) {
            const BestResponse br = nash_best_response(state, i, kind, nash_limit);
            if (compare_exact(br.exact, current[i], c, b) > 0) {
                report.cls = EquilibriumClass::Swapstable;
                report.nash_witness = {i, br.strategy};
                report.utility_before = current[i].value(c, b);
                report.utility_after = br.utility;
                return report;
            }
        }
        report.cls = EquilibriumClass::Nash;
        return report;
    }

    for (int i = 0; i < n; ++i) {
        for (const auto& cand : nash_probe_candidates(state, graph, i)) {
            const ExactUtility u = ev.evaluate(i, cand);
            if (compare_exact(u, current[i], c, b) > 0) {
                report.cls = EquilibriumClass::Swapstable;
                report.nash_witness = {i, cand};
                report.utility_before = current[i].value(c, b);
                report.utility_after = u.value(c, b);
                return report;
            }
        }
    }
    report.cls = EquilibriumClass::Swapstable;
    report.nash_unknown = true;
    return report;
}

int targeted_region_count(const GameState& state, AdversaryKind kind) {
    return static_cast<int>(attack_distribution(state, kind).targeted.size());
}

}  // namespace netform
