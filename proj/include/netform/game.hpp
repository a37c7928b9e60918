#pragma once

#include <string>
#include <utility>
#include <vector>

namespace netform {

/// One player's action: the set of vertices she buys an edge to, plus her
/// immunization choice.
struct PlayerStrategy {
    std::vector<int> purchases;  // sorted, unique, never contains the player itself
    bool immunized = false;
};

bool operator==(const PlayerStrategy& a, const PlayerStrategy& b);

/// Full game position: per-vertex strategies and the two cost parameters.
/// Immutable after construction; all operations on states are pure functions.
class GameState {
public:
    GameState(int n, double edge_cost, double immunization_cost,
              std::vector<PlayerStrategy> strategies);

    /// All-vulnerable state with no purchases.
    static GameState empty(int n, double edge_cost, double immunization_cost);

    int n() const { return n_; }
    double edge_cost() const { return c_; }
    double immunization_cost() const { return b_; }
    const PlayerStrategy& strategy(int i) const { return strategies_[i]; }
    const std::vector<PlayerStrategy>& strategies() const { return strategies_; }
    bool immunized(int i) const { return strategies_[i].immunized; }

    std::vector<int> immunized_set() const;
    int immunized_count() const;
    int total_purchases() const;
    /// Total expenditure c*sum|x_i| + b*|I|.
    double expenditure() const;

    /// Copy with player i's strategy replaced (revalidated).
    GameState with_strategy(int i, PlayerStrategy s) const;

    bool operator==(const GameState& other) const;

private:
    int n_;
    double c_, b_;
    std::vector<PlayerStrategy> strategies_;
};

/// Undirected simple graph induced by all purchases. Mutual purchases of the
/// same pair collapse to one edge but both buyers are still charged.
struct InducedGraph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;  // canonical: first < second, sorted
    std::vector<int> purchase_count;         // per vertex, |x_i|
    std::vector<std::vector<int>> adjacency; // sorted neighbor lists

    int edge_count() const { return static_cast<int>(edges.size()); }
    int degree(int i) const { return static_cast<int>(adjacency[i].size()); }
    bool has_edge(int a, int b) const;
};

InducedGraph build_induced_graph(const GameState& state);

/// Partition of the non-immunized vertices into vulnerable regions (maximal
/// connected sets of vulnerable vertices). Regions are ordered by their
/// minimum member id so downstream distributions are deterministic.
struct RegionDecomposition {
    std::vector<int> immunized;                        // sorted
    std::vector<std::vector<int>> vulnerable_regions;  // each sorted
    std::vector<int> region_of;                        // per vertex; -1 if immunized

    int region_count() const { return static_cast<int>(vulnerable_regions.size()); }
    int vulnerable_count() const;
};

RegionDecomposition decompose_regions(const InducedGraph& graph,
                                      const std::vector<int>& immunized);
RegionDecomposition decompose_regions(const GameState& state, const InducedGraph& graph);

/// Survivors' component structure after one region is killed.
struct PostAttackView {
    std::vector<int> killed;                         // sorted
    std::vector<std::vector<int>> components;        // by min vertex, each sorted
    std::vector<int> component_of;                   // per vertex; -1 if killed
};

PostAttackView post_attack(const InducedGraph& graph, const RegionDecomposition& decomp,
                           int region_index);

/// Network equivalence: same vertex set and immunization pattern, and for
/// every attack seed every vertex ends up in the identical post-attack
/// component. Immunized seeds spread nowhere (nothing dies).
/// Throws std::invalid_argument on mismatched n or immunization sets.
bool equivalent(const InducedGraph& g1, const std::vector<int>& immunized1,
                const InducedGraph& g2, const std::vector<int>& immunized2);
bool equivalent(const GameState& s1, const GameState& s2);

}  // namespace netform
