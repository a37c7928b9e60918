#include "netform/game.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace netform {

bool operator==(const PlayerStrategy& a, const PlayerStrategy& b) {
    return a.immunized == b.immunized && a.purchases == b.purchases;
}

namespace {

void validate_strategy(int n, int owner, PlayerStrategy& s) {
    std::sort(s.purchases.begin(), s.purchases.end());
    if (std::adjacent_find(s.purchases.begin(), s.purchases.end()) != s.purchases.end())
        throw std::invalid_argument("duplicate purchase in strategy of player " +
                                    std::to_string(owner));
    for (int t : s.purchases) {
        if (t < 0 || t >= n)
            throw std::invalid_argument("purchase target out of range for player " +
                                        std::to_string(owner));
        if (t == owner)
            throw std::invalid_argument("self-purchase by player " + std::to_string(owner));
    }
}

}  // namespace

GameState::GameState(int n, double edge_cost, double immunization_cost,
                     std::vector<PlayerStrategy> strategies)
    : n_(n), c_(edge_cost), b_(immunization_cost), strategies_(std::move(strategies)) {
    if (n_ < 1) throw std::invalid_argument("vertex count must be >= 1");
    if (!(c_ >= 0.0) || !(b_ >= 0.0))
        throw std::invalid_argument("costs must be nonnegative");
    if (static_cast<int>(strategies_.size()) != n_)
        throw std::invalid_argument("strategy count must equal n");
    for (int i = 0; i < n_; ++i) validate_strategy(n_, i, strategies_[i]);
}

GameState GameState::empty(int n, double edge_cost, double immunization_cost) {
    return GameState(n, edge_cost, immunization_cost, std::vector<PlayerStrategy>(n));
}

std::vector<int> GameState::immunized_set() const {
    std::vector<int> out;
    for (int i = 0; i < n_; ++i)
        if (strategies_[i].immunized) out.push_back(i);
    return out;
}

int GameState::immunized_count() const {
    int k = 0;
    for (const auto& s : strategies_) k += s.immunized ? 1 : 0;
    return k;
}

int GameState::total_purchases() const {
    int k = 0;
    for (const auto& s : strategies_) k += static_cast<int>(s.purchases.size());
    return k;
}

double GameState::expenditure() const {
    return c_ * total_purchases() + b_ * immunized_count();
}

GameState GameState::with_strategy(int i, PlayerStrategy s) const {
    if (i < 0 || i >= n_) throw std::invalid_argument("player index out of range");
    std::vector<PlayerStrategy> copy = strategies_;
    copy[i] = std::move(s);
    return GameState(n_, c_, b_, std::move(copy));
}

bool GameState::operator==(const GameState& other) const {
    return n_ == other.n_ && c_ == other.c_ && b_ == other.b_ &&
           strategies_ == other.strategies_;
}

bool InducedGraph::has_edge(int a, int b) const {
    const auto& adj = adjacency[a];
    return std::binary_search(adj.begin(), adj.end(), b);
}

InducedGraph build_induced_graph(const GameState& state) {
    const int n = state.n();
    InducedGraph g;
    g.n = n;
    g.purchase_count.resize(n);
    g.adjacency.assign(n, {});
    std::vector<std::pair<int, int>> raw;
    for (int i = 0; i < n; ++i) {
        const auto& s = state.strategy(i);
        g.purchase_count[i] = static_cast<int>(s.purchases.size());
        for (int t : s.purchases) raw.emplace_back(std::min(i, t), std::max(i, t));
    }
    std::sort(raw.begin(), raw.end());
    raw.erase(std::unique(raw.begin(), raw.end()), raw.end());
    g.edges = std::move(raw);
    for (auto [a, b] : g.edges) {
        g.adjacency[a].push_back(b);
        g.adjacency[b].push_back(a);
    }
    for (auto& adj : g.adjacency) std::sort(adj.begin(), adj.end());
    return g;
}

int RegionDecomposition::vulnerable_count() const {
    int k = 0;
    for (const auto& r : vulnerable_regions) k += static_cast<int>(r.size());
    return k;
}

RegionDecomposition decompose_regions(const InducedGraph& graph,
                                      const std::vector<int>& immunized) {
    const int n = graph.n;
    std::vector<char> is_imm(n, 0);
    for (int v : immunized) {
        if (v < 0 || v >= n) throw std::invalid_argument("immunized vertex out of range");
        is_imm[v] = 1;
    }
    RegionDecomposition d;
    d.immunized = immunized;
    std::sort(d.immunized.begin(), d.immunized.end());
    d.region_of.assign(n, -1);
    std::vector<char> seen(n, 0);
    for (int start = 0; start < n; ++start) {
        if (is_imm[start] || seen[start]) continue;
        std::vector<int> region;
        std::queue<int> q;
        q.push(start);
        seen[start] = 1;
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            region.push_back(v);
            for (int u : graph.adjacency[v]) {
                if (!is_imm[u] && !seen[u]) {
                    seen[u] = 1;
                    q.push(u);
                }
            }
        }
        std::sort(region.begin(), region.end());
        d.vulnerable_regions.push_back(std::move(region));
    }
    // BFS from ascending start vertices already yields min-vertex order.
    for (int r = 0; r < d.region_count(); ++r)
        for (int v : d.vulnerable_regions[r]) d.region_of[v] = r;
    return d;
}

RegionDecomposition decompose_regions(const GameState& state, const InducedGraph& graph) {
    return decompose_regions(graph, state.immunized_set());
}

PostAttackView post_attack(const InducedGraph& graph, const RegionDecomposition& decomp,
                           int region_index) {
    if (region_index < 0 || region_index >= decomp.region_count())
        throw std::out_of_range("region index out of range");
    const int n = graph.n;
    PostAttackView view;
    view.killed = decomp.vulnerable_regions[region_index];
    std::vector<char> dead(n, 0);
    for (int v : view.killed) dead[v] = 1;
    view.component_of.assign(n, -1);
    for (int start = 0; start < n; ++start) {
        if (dead[start] || view.component_of[start] >= 0) continue;
        std::vector<int> comp;
        std::queue<int> q;
        q.push(start);
        view.component_of[start] = static_cast<int>(view.components.size());
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            comp.push_back(v);
            for (int u : graph.adjacency[v]) {
                if (!dead[u] && view.component_of[u] < 0) {
                    view.component_of[u] = view.component_of[start];
                    q.push(u);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        view.components.push_back(std::move(comp));
    }
    return view;
}

bool equivalent(const InducedGraph& g1, const std::vector<int>& immunized1,
                const InducedGraph& g2, const std::vector<int>& immunized2) {
    if (g1.n != g2.n) throw std::invalid_argument("equivalent: vertex counts differ");
    std::vector<int> i1 = immunized1, i2 = immunized2;
    std::sort(i1.begin(), i1.end());
    std::sort(i2.begin(), i2.end());
    if (i1 != i2) throw std::invalid_argument("equivalent: immunization sets differ");

    const auto d1 = decompose_regions(g1, i1);
    const auto d2 = decompose_regions(g2, i2);
    const int n = g1.n;

    // Attacking vulnerable seed v kills its whole region; immunized seeds kill
    // nothing. Per-seed component partitions must match exactly.
    auto partition_for_seed = [n](const InducedGraph& g, const RegionDecomposition& d,
                                  int seed) {
        std::vector<std::vector<int>> comps;
        std::vector<char> dead(n, 0);
        if (d.region_of[seed] >= 0)
            for (int v : d.vulnerable_regions[d.region_of[seed]]) dead[v] = 1;
        std::vector<int> comp_of(n, -1);
        for (int start = 0; start < n; ++start) {
            if (dead[start] || comp_of[start] >= 0) continue;
            std::vector<int> comp;
            std::queue<int> q;
            q.push(start);
            comp_of[start] = 1;
            while (!q.empty()) {
                int v = q.front();
                q.pop();
                comp.push_back(v);
                for (int u : g.adjacency[v])
                    if (!dead[u] && comp_of[u] < 0) {
                        comp_of[u] = 1;
                        q.push(u);
                    }
            }
            std::sort(comp.begin(), comp.end());
            comps.push_back(std::move(comp));
        }
        std::sort(comps.begin(), comps.end());
        return comps;
    };

    for (int seed = 0; seed < n; ++seed) {
        if (d1.region_of[seed] >= 0 || d2.region_of[seed] >= 0) {
            // Killed sets must agree or some vertex's component differs (empty vs not).
            std::vector<int> k1, k2;
            if (d1.region_of[seed] >= 0) k1 = d1.vulnerable_regions[d1.region_of[seed]];
            if (d2.region_of[seed] >= 0) k2 = d2.vulnerable_regions[d2.region_of[seed]];
            if (k1 != k2) return false;
        }
        if (partition_for_seed(g1, d1, seed) != partition_for_seed(g2, d2, seed))
            return false;
    }
    return true;
}

bool equivalent(const GameState& s1, const GameState& s2) {
    return equivalent(build_induced_graph(s1), s1.immunized_set(),
                      build_induced_graph(s2), s2.immunized_set());
}

}  // namespace netform
