#include "netform/adversary.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "netform/payoff.hpp"

namespace netform {

const char* adversary_name(AdversaryKind kind) {
    switch (kind) {
        case AdversaryKind::MaxCarnage: return "carnage";
        case AdversaryKind::RandomAttack: return "random";
        case AdversaryKind::MaxDisruption: return "disruption";
    }
    return "?";
}

AdversaryKind adversary_from_name(const std::string& name) {
    if (name == "carnage") return AdversaryKind::MaxCarnage;
    if (name == "random") return AdversaryKind::RandomAttack;
    if (name == "disruption") return AdversaryKind::MaxDisruption;
    throw std::invalid_argument("unknown adversary '" + name +
                                "' (expected carnage|random|disruption)");
}

AttackDistribution attack_distribution(const GameState& state, const InducedGraph& graph,
                                       const RegionDecomposition& decomp,
                                       AdversaryKind kind) {
    const int k = decomp.region_count();
    AttackDistribution dist;
    dist.region_weight.assign(k, 0);
    dist.region_prob.assign(k, 0.0);
    dist.seed_prob.assign(graph.n, 0.0);
    if (k == 0) return dist;

    switch (kind) {
        case AdversaryKind::MaxCarnage: {
            std::size_t max_size = 0;
            for (const auto& r : decomp.vulnerable_regions)
                max_size = std::max(max_size, r.size());
            for (int r = 0; r < k; ++r)
                if (decomp.vulnerable_regions[r].size() == max_size) {
                    dist.region_weight[r] = 1;
                    ++dist.denominator;
                }
            break;
        }
        case AdversaryKind::RandomAttack: {
            for (int r = 0; r < k; ++r) {
                dist.region_weight[r] =
                    static_cast<std::int64_t>(decomp.vulnerable_regions[r].size());
                dist.denominator += dist.region_weight[r];
            }
            break;
        }
        case AdversaryKind::MaxDisruption: {
            // Expenditure is attack-invariant, so minimize the sum of squared
            // surviving component sizes.
            std::vector<std::int64_t> sq(k, 0);
            for (int r = 0; r < k; ++r) sq[r] = post_attack_component_square_sum(graph, decomp, r);
            const std::int64_t best = *std::min_element(sq.begin(), sq.end());
            for (int r = 0; r < k; ++r)
                if (sq[r] == best) {
                    dist.region_weight[r] = 1;
                    ++dist.denominator;
                }
            break;
        }
    }

    for (int r = 0; r < k; ++r) {
        if (dist.region_weight[r] == 0) continue;
        dist.targeted.push_back(r);
        dist.region_prob[r] =
            static_cast<double>(dist.region_weight[r]) / static_cast<double>(dist.denominator);
        const auto& members = decomp.vulnerable_regions[r];
        const double per_seed = dist.region_prob[r] / static_cast<double>(members.size());
        for (int v : members) dist.seed_prob[v] = per_seed;
    }
    return dist;
}

AttackDistribution attack_distribution(const GameState& state, AdversaryKind kind) {
    const InducedGraph graph = build_induced_graph(state);
    const RegionDecomposition decomp = decompose_regions(state, graph);
    return attack_distribution(state, graph, decomp, kind);
}

bool check_well_behaved(const GameState& s1, const GameState& s2, AdversaryKind kind) {
    if (!equivalent(s1, s2))
        throw std::invalid_argument("check_well_behaved: states are not equivalent");
    const InducedGraph g1 = build_induced_graph(s1), g2 = build_induced_graph(s2);
    const RegionDecomposition d1 = decompose_regions(s1, g1), d2 = decompose_regions(s2, g2);
    const AttackDistribution a1 = attack_distribution(s1, g1, d1, kind);
    const AttackDistribution a2 = attack_distribution(s2, g2, d2, kind);
    // Compare per-vertex seed probabilities as exact fractions
    // weight / (denominator * |region|).
    for (int v = 0; v < s1.n(); ++v) {
        std::int64_t n1 = 0, q1 = 1, n2 = 0, q2 = 1;
        if (d1.region_of[v] >= 0) {
            n1 = a1.region_weight[d1.region_of[v]];
            q1 = a1.denominator *
                 static_cast<std::int64_t>(d1.vulnerable_regions[d1.region_of[v]].size());
        }
        if (d2.region_of[v] >= 0) {
            n2 = a2.region_weight[d2.region_of[v]];
            q2 = a2.denominator *
                 static_cast<std::int64_t>(d2.vulnerable_regions[d2.region_of[v]].size());
        }
        if (q1 == 0) q1 = 1;  // empty distribution: probability is exactly 0
        if (q2 == 0) q2 = 1;
        if (static_cast<__int128>(n1) * q2 != static_cast<__int128>(n2) * q1) return false;
    }
    return true;
}

}  // namespace netform
