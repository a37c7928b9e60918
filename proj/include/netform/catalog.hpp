#pragma once

#include <string>
#include <vector>

#include "netform/adversary.hpp"
#include "netform/deviation.hpp"
#include "netform/game.hpp"

namespace netform {

/// Canonical instance families: the canonical equilibrium constructions, the
/// two solution-concept separators, the two adversary separators and the
/// best-response cycling seed.
enum class Family {
    Empty,
    HubSpoke,
    TreeAllImmunized,
    TreeTargetedLeaves,
    Forest,
    ForestWithSingletons,
    AlternatingCycle,
    Flower,
    CompleteBipartite,
    SwapNotNash,
    LinkNotSwap,
    BinaryTreeDisruption,
    TwoCyclesBridge,
    BestResponseCyclePaths,
};

const char* family_name(Family f);
Family family_from_name(const std::string& name);
std::vector<std::string> family_names();

/// Family-specific sizes. Which fields are read depends on the family:
///   n          - vertex count (Empty, HubSpoke, TreeAllImmunized,
///                AlternatingCycle, CompleteBipartite; pair with k for
///                TreeTargetedLeaves)
///   k          - tree/cycle/petal multiplicity (Forest, ForestWithSingletons,
///                SwapNotNash, LinkNotSwap, Flower, TwoCyclesBridge,
///                TreeTargetedLeaves immunized count)
///   f          - tree size or petal count (Forest, ForestWithSingletons,
///                Flower)
///   extra      - singleton count (ForestWithSingletons), tree height
///                (BinaryTreeDisruption), component count
///                (BestResponseCyclePaths)
struct CatalogParams {
    int n = 0;
    int k = 0;
    int f = 0;
    int extra = 0;
};

struct CatalogResult {
    GameState state;
    EquilibriumClass expected_class = EquilibriumClass::Nash;
    AdversaryKind expected_adversary = AdversaryKind::MaxCarnage;
    bool valid = false;  // (params, c, b) inside the reference validity range
};

/// Builds the family instance with the exact layout and purchase directions
/// of the canonical drawing. Throws std::invalid_argument for structurally
/// impossible sizes; out-of-range costs only clear `valid`.
CatalogResult generate(Family family, const CatalogParams& params, double c, double b);

}  // namespace netform
