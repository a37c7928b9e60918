#pragma once

#include <cstdint>
#include <vector>

#include "netform/adversary.hpp"
#include "netform/game.hpp"
#include "netform/payoff.hpp"

namespace netform {

/// Fast expected-utility evaluation for one player's candidate strategies
/// against a fixed opponent profile. Rebuild after the underlying state
/// changes; evaluate() is allocation-free and safe to call millions of times.
///
/// Internally the graph is kept as bit rows. Post-attack component sizes for
/// every targeted region are obtained in one pass from a cut-vertex DFS over
/// the region-contracted (abstract) graph rooted at the evaluated player.
class Evaluator {
public:
    Evaluator(const GameState& state, AdversaryKind kind);

    int n() const { return n_; }
    double edge_cost() const { return c_; }
    double immunization_cost() const { return b_; }
    AdversaryKind adversary() const { return kind_; }

    /// Utility of `actor` playing (targets, immunized) while everyone else
    /// keeps the profile captured at construction.
    ExactUtility evaluate(int actor, const std::vector<int>& targets, bool immunized);
    ExactUtility evaluate(int actor, const PlayerStrategy& strat);
    /// Targets encoded as a bit mask (only valid for n <= 64).
    ExactUtility evaluate_mask(int actor, std::uint64_t target_mask, bool immunized);
    ExactUtility evaluate_current(int actor);

private:
    void set_actor(int actor);
    ExactUtility run(int actor, int target_count, bool immunized);

    int n_ = 0;
    int words_ = 0;
    double c_ = 0, b_ = 0;
    AdversaryKind kind_;
    std::vector<std::vector<int>> purchases_;
    std::vector<std::uint64_t> rows_;          // current adjacency, n x words
    std::vector<std::uint64_t> reverse_rows_;  // who bought an edge to v
    std::vector<std::uint64_t> base_imm_;      // immunization mask
    int actor_ = -1;

    // scratch reused across evaluations
    std::vector<std::uint64_t> actor_row_saved_;
    std::vector<int> touched_;
    std::vector<std::uint64_t> vuln_;
    std::vector<std::uint64_t> seen_;
    std::vector<std::uint64_t> frontier_;
    std::vector<std::uint64_t> next_;
    std::vector<int> region_of_;     // per vertex, -1 immunized
    std::vector<int> region_size_;
    std::vector<int> imm_index_;     // per vertex, dense id among immunized
    std::vector<int> node_weight_;   // abstract node weights
    std::vector<int> edge_u_, edge_v_;
    std::vector<int> adj_off_, adj_nbr_, adj_eid_, node_deg_;
    std::vector<int> comp_of_node_;
    std::vector<std::int64_t> comp_weight_;
    std::vector<std::int64_t> sep_weight_, sep_sq_;
    std::vector<int> dfs_disc_, dfs_low_, dfs_parent_edge_;
    std::vector<std::int64_t> dfs_sub_;
    std::vector<int> stack_node_, stack_ptr_;
    std::vector<std::int64_t> region_sq_;      // disruption: sum |C|^2 per region kill
    std::vector<int> order_;
};

}  // namespace netform
