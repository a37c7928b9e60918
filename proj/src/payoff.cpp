#include "netform/payoff.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace netform {

double ExactUtility::value(double c, double b) const {
    return static_cast<double>(benefit_num) / static_cast<double>(benefit_den) -
           purchase_count * c - (immunized ? b : 0.0);
}

namespace {

// Decompose a nonnegative double as mantissa * 2^exponent with integer
// mantissa. Returns false for values whose exponent is outside the range the
// int128 comparison below can absorb (never the case for sane cost inputs).
bool dyadic(double v, std::int64_t& mantissa, int& exponent) {
    if (v == 0.0) {
        mantissa = 0;
        exponent = 0;
        return true;
    }
    int e = 0;
    double m = std::frexp(v, &e);  // v = m * 2^e, m in [0.5, 1)
    mantissa = static_cast<std::int64_t>(std::ldexp(m, 53));
    exponent = e - 53;
    return exponent >= -160 && exponent <= 80;
}

}  // namespace

int compare_exact(const ExactUtility& a, const ExactUtility& b, double c, double bcost) {
    // Benefit difference as an exact rational.
    const __int128 q_num = static_cast<__int128>(a.benefit_num) * b.benefit_den -
                           static_cast<__int128>(b.benefit_num) * a.benefit_den;
    const __int128 q_den = static_cast<__int128>(a.benefit_den) * b.benefit_den;
    const int dm = a.purchase_count - b.purchase_count;
    const int dy = (a.immunized ? 1 : 0) - (b.immunized ? 1 : 0);
    if (dm == 0 && dy == 0) return q_num > 0 ? 1 : (q_num < 0 ? -1 : 0);

    // a - b = q_num/q_den - (dm*c + dy*bcost). Try a safely-separated long
    // double comparison first, fall back to integers near the boundary.
    const long double lhs = static_cast<long double>(q_num) / static_cast<long double>(q_den);
    const long double rhs =
        static_cast<long double>(dm) * c + static_cast<long double>(dy) * bcost;
    const long double diff = lhs - rhs;
    const long double scale = 1.0L + std::fabs(lhs) + std::fabs(rhs);
    if (diff > 1e-12L * scale) return 1;
    if (diff < -1e-12L * scale) return -1;

    std::int64_t cm = 0, bm = 0;
    int ce = 0, be = 0;
    if (!dyadic(c, cm, ce) || !dyadic(bcost, bm, be))
        return diff > 0 ? 1 : (diff < 0 ? -1 : 0);
    // Compare q_num/q_den with (dm*cm*2^ce + dy*bm*2^be) on a common
    // power-of-two scale E = min(ce, be):
    //   q_num * 2^{-E}  vs  (dm*cm*2^{ce-E} + dy*bm*2^{be-E}) * q_den
    const int E = std::min(ce, be);
    const int shift_l = -E;           // in [0, 160]
    const int sc = ce - E, sb = be - E;
    if (shift_l > 120 || sc > 60 || sb > 60)
        return diff > 0 ? 1 : (diff < 0 ? -1 : 0);
    __int128 left = q_num;
    // q_num fits in ~80 bits; shifting by up to 120 could overflow only if the
    // benefit difference is huge, in which case the double path already
    // decided. Near-tie values here are tiny.
    for (int s = shift_l; s > 0; --s) {
        if (left > (static_cast<__int128>(1) << 120) || left < -(static_cast<__int128>(1) << 120))
            return diff > 0 ? 1 : (diff < 0 ? -1 : 0);
        left <<= 1;
    }
    const __int128 cost_num = (static_cast<__int128>(dm) * cm << sc) +
                              (static_cast<__int128>(dy) * bm << sb);
    const __int128 right = cost_num * q_den;
    if (left > right) return 1;
    if (left < right) return -1;
    return 0;
}

void expected_component_fraction(const InducedGraph& graph, const RegionDecomposition& decomp,
                                 const AttackDistribution& dist, int i,
                                 std::int64_t& num, std::int64_t& den) {
    if (dist.empty()) {
        // No attack: benefit equals the size of i's component.
        std::vector<char> seen(graph.n, 0);
        std::vector<int> stack = {i};
        seen[i] = 1;
        std::int64_t size = 0;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            ++size;
            for (int u : graph.adjacency[v])
                if (!seen[u]) {
                    seen[u] = 1;
                    stack.push_back(u);
                }
        }
        num = size;
        den = 1;
        return;
    }
    num = 0;
    den = dist.denominator;
    for (int r : dist.targeted) {
        if (decomp.region_of[i] == r) continue;  // i dies, contributes 0
        const PostAttackView view = post_attack(graph, decomp, r);
        const int comp = view.component_of[i];
        num += dist.region_weight[r] *
               static_cast<std::int64_t>(view.components[comp].size());
    }
}

ExactUtility exact_utility(const GameState& state, const InducedGraph& graph,
                           const RegionDecomposition& decomp, const AttackDistribution& dist,
                           int i) {
    ExactUtility u;
    expected_component_fraction(graph, decomp, dist, i, u.benefit_num, u.benefit_den);
    u.purchase_count = static_cast<int>(state.strategy(i).purchases.size());
    u.immunized = state.immunized(i);
    return u;
}

double expected_utility(const GameState& state, const InducedGraph& graph,
                        const RegionDecomposition& decomp, const AttackDistribution& dist,
                        int i) {
    return exact_utility(state, graph, decomp, dist, i)
        .value(state.edge_cost(), state.immunization_cost());
}

double expected_utility(const GameState& state, const AttackDistribution& dist, int i) {
    const InducedGraph graph = build_induced_graph(state);
    const RegionDecomposition decomp = decompose_regions(state, graph);
    return expected_utility(state, graph, decomp, dist, i);
}

UtilityVector utility_vector(const GameState& state, AdversaryKind kind) {
    const InducedGraph graph = build_induced_graph(state);
    const RegionDecomposition decomp = decompose_regions(state, graph);
    const AttackDistribution dist = attack_distribution(state, graph, decomp, kind);
    UtilityVector out;
    out.utilities.resize(state.n());
    for (int i = 0; i < state.n(); ++i) {
        out.utilities[i] = expected_utility(state, graph, decomp, dist, i);
        out.total_welfare += out.utilities[i];
    }
    return out;
}

double social_welfare(const GameState& state, const AttackDistribution& dist) {
    const InducedGraph graph = build_induced_graph(state);
    const RegionDecomposition decomp = decompose_regions(state, graph);
    double total = 0.0;
    for (int i = 0; i < state.n(); ++i)
        total += expected_utility(state, graph, decomp, dist, i);
    return total;
}

double social_welfare(const GameState& state, AdversaryKind kind) {
    return social_welfare(state, attack_distribution(state, kind));
}

std::int64_t post_attack_component_square_sum(const InducedGraph& graph,
                                              const RegionDecomposition& decomp,
                                              int region_index) {
    const PostAttackView view = post_attack(graph, decomp, region_index);
    std::int64_t sum = 0;
    for (const auto& comp : view.components) {
        const std::int64_t s = static_cast<std::int64_t>(comp.size());
        sum += s * s;
    }
    return sum;
}

double social_welfare_component_form(const GameState& state, const InducedGraph& graph,
                                     const RegionDecomposition& decomp,
                                     const AttackDistribution& dist) {
    double benefit = 0.0;
    if (dist.empty()) {
        std::vector<char> seen(graph.n, 0);
        for (int start = 0; start < graph.n; ++start) {
            if (seen[start]) continue;
            std::vector<int> stack = {start};
            seen[start] = 1;
            double size = 0;
            while (!stack.empty()) {
                int v = stack.back();
                stack.pop_back();
                ++size;
                for (int u : graph.adjacency[v])
                    if (!seen[u]) {
                        seen[u] = 1;
                        stack.push_back(u);
                    }
            }
            benefit += size * size;
        }
    } else {
        for (int r : dist.targeted)
            benefit += dist.region_prob[r] *
                       static_cast<double>(post_attack_component_square_sum(graph, decomp, r));
    }
    return benefit - state.expenditure();
}

double post_attack_welfare(const GameState& state, int region_index) {
    const InducedGraph graph = build_induced_graph(state);
    const RegionDecomposition decomp = decompose_regions(state, graph);
    return static_cast<double>(post_attack_component_square_sum(graph, decomp, region_index)) -
           state.expenditure();
}

}  // namespace netform
