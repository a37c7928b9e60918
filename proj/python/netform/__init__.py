"""Simulation, verification and analysis toolkit for the network formation
game with adversarial attack and immunization."""

from ._core import (  # noqa: F401
    Adversary,
    EquilibriumClass,
    GameState,
    analyze,
    attack_distribution,
    catalog,
    check_sparsity,
    check_well_behaved,
    classify,
    edges,
    equivalent,
    erdos_renyi_avg_degree_init,
    erdos_renyi_init,
    expected_utility,
    family_names,
    heavy_targeted_cut_vertices,
    is_chord_free_abstraction,
    nash_best_response,
    post_attack_welfare,
    regions_are_trees,
    run_dynamics,
    social_welfare,
    vulnerable_regions,
    welfare_certificate,
)

__version__ = "0.1.0"
