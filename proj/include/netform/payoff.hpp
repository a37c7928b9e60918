#pragma once

#include <cstdint>
#include <vector>

#include "netform/adversary.hpp"
#include "netform/game.hpp"

namespace netform {

/// Expected utility kept in a form that allows exact comparisons:
///   u = benefit_num / benefit_den  -  purchase_count * c  -  (immunized ? b : 0)
/// The benefit is an exact rational because attack probabilities have small
/// integer numerators/denominators and component sizes are integers.
struct ExactUtility {
    std::int64_t benefit_num = 0;
    std::int64_t benefit_den = 1;
    int purchase_count = 0;
    bool immunized = false;

    double value(double c, double b) const;
};

/// Sign of (a - b) for utilities under the same costs, computed exactly.
/// Uses integer arithmetic whenever the double comparison is too close to
/// call, so boundary parameters (e.g. b = (n-1)/2) resolve as true ties.
int compare_exact(const ExactUtility& a, const ExactUtility& b, double c, double bcost);

/// Expected size of i's post-attack component as an exact rational over the
/// given distribution. When nothing is targeted this is i's component size.
void expected_component_fraction(const InducedGraph& graph, const RegionDecomposition& decomp,
                                 const AttackDistribution& dist, int i,
                                 std::int64_t& num, std::int64_t& den);

double expected_utility(const GameState& state, const InducedGraph& graph,
                        const RegionDecomposition& decomp, const AttackDistribution& dist,
                        int i);
double expected_utility(const GameState& state, const AttackDistribution& dist, int i);

ExactUtility exact_utility(const GameState& state, const InducedGraph& graph,
                           const RegionDecomposition& decomp, const AttackDistribution& dist,
                           int i);

struct UtilityVector {
    std::vector<double> utilities;
    double total_welfare = 0.0;
};

UtilityVector utility_vector(const GameState& state, AdversaryKind kind);

/// Sum of expected utilities.
double social_welfare(const GameState& state, const AttackDistribution& dist);
double social_welfare(const GameState& state, AdversaryKind kind);

/// Same value via sum_regions Pr * (sum of squared surviving component sizes)
/// minus total expenditure. Must agree with the per-player sum to 1e-9.
double social_welfare_component_form(const GameState& state, const InducedGraph& graph,
                                     const RegionDecomposition& decomp,
                                     const AttackDistribution& dist);

/// Sum of squared surviving component sizes after killing one region.
std::int64_t post_attack_component_square_sum(const InducedGraph& graph,
                                              const RegionDecomposition& decomp,
                                              int region_index);

/// Deterministic welfare of the state after an attack on the given region:
/// sum of squared component sizes minus total expenditure.
double post_attack_welfare(const GameState& state, int region_index);

}  // namespace netform
