#pragma once

#include <cstdint>
#include <vector>

#include "netform/game.hpp"

namespace netform {

enum class AdversaryKind { MaxCarnage, RandomAttack, MaxDisruption };

const char* adversary_name(AdversaryKind kind);
AdversaryKind adversary_from_name(const std::string& name);  // carnage|random|disruption

/// Attack probabilities over vulnerable regions and seed vertices.
/// Probabilities are exact rationals region_weight[r]/denominator (the
/// denominators are region counts or sizes, never float-derived); the double
/// fields are exports of the same values.
struct AttackDistribution {
    std::vector<std::int64_t> region_weight;  // per region numerator
    std::int64_t denominator = 0;             // 0 iff no vulnerable region exists
    std::vector<int> targeted;                // region indices with positive probability
    std::vector<double> region_prob;          // per region
    std::vector<double> seed_prob;            // per vertex, uniform inside a region

    bool empty() const { return denominator == 0; }
};

AttackDistribution attack_distribution(const GameState& state, const InducedGraph& graph,
                                       const RegionDecomposition& decomp,
                                       AdversaryKind kind);
AttackDistribution attack_distribution(const GameState& state, AdversaryKind kind);

/// Well-behaved check on a pair of equivalent states: per-vertex attack
/// probabilities must coincide. Throws std::invalid_argument if the states are
/// not equivalent.
bool check_well_behaved(const GameState& s1, const GameState& s2, AdversaryKind kind);

}  // namespace netform
