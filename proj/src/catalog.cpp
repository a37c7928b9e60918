#include "netform/catalog.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace netform {

namespace {

const char* kFamilyNames[] = {
    "empty",
    "hub-spoke",
    "tree-all-immunized",
    "tree-targeted-leaves",
    "forest",
    "forest-with-singletons",
    "alternating-cycle",
    "flower",
    "complete-bipartite",
    "swap-not-nash",
    "link-not-swap",
    "binary-tree-disruption",
    "two-cycles-bridge",
    "best-response-cycle-paths",
};

struct Builder {
    int n;
    std::vector<PlayerStrategy> strategies;

    explicit Builder(int n_) : n(n_), strategies(n_) {}
    void buy(int from, int to) { strategies[from].purchases.push_back(to); }
    void immunize(int v) { strategies[v].immunized = true; }
    GameState state(double c, double b) && {
        return GameState(n, c, b, std::move(strategies));
    }
};

void require(bool ok, const char* what) {
    if (!ok) throw std::invalid_argument(what);
}

// parents toward `root` in the tree given by adjacency; every non-root vertex
// buys the edge to its parent
void buy_toward_root(Builder& g, const std::vector<std::vector<int>>& adj, int root) {
    std::vector<int> parent(adj.size(), -2);
    std::vector<int> stack = {root};
    parent[root] = -1;
    while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        for (int u : adj[v])
            if (parent[u] == -2) {
                parent[u] = v;
                stack.push_back(u);
            }
    }
    for (std::size_t v = 0; v < adj.size(); ++v)
        if (parent[v] >= 0) g.buy(static_cast<int>(v), parent[v]);
}

// centroid of a tree over vertices [0, m) given as adjacency
int tree_centroid(const std::vector<std::vector<int>>& adj) {
    const int m = static_cast<int>(adj.size());
    std::vector<int> parent(m, -2), order;
    std::vector<int> stack = {0};
    parent[0] = -1;
    while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        order.push_back(v);
        for (int u : adj[v])
            if (parent[u] == -2) {
                parent[u] = v;
                stack.push_back(u);
            }
    }
    std::vector<int> size(m, 1), max_part(m, 0);
    for (auto it = order.rbegin(); it != order.rend(); ++it)
        if (parent[*it] >= 0) {
            size[parent[*it]] += size[*it];
            max_part[parent[*it]] = std::max(max_part[parent[*it]], size[*it]);
        }
    int best = 0;
    for (int v = 0; v < m; ++v) {
        max_part[v] = std::max(max_part[v], m - size[v]);
        if (max_part[v] < max_part[best]) best = v;
    }
    return best;
}

// The canonical 15-vertex tree with targeted leaves: immunized tree
// 0-1-2(-3,-5), 1-4 rooted at 2, with leaves {6,7}->0, {8}->1, {11}->2,
// {9,10}->3, {14}->4, {12,13}->5.
GameState canonical_tree_targeted_leaves(double c, double b) {
    Builder g(15);
    for (int v = 0; v < 6; ++v) g.immunize(v);
    g.buy(0, 1);
    g.buy(1, 2);
    g.buy(3, 2);
    g.buy(4, 1);
    g.buy(5, 2);
    const int leaf_parent[9] = {0, 0, 1, 3, 3, 2, 5, 5, 4};
    for (int j = 0; j < 9; ++j) g.buy(6 + j, leaf_parent[j]);
    return std::move(g).state(c, b);
}

}  // namespace

const char* family_name(Family f) { return kFamilyNames[static_cast<int>(f)]; }

Family family_from_name(const std::string& name) {
    for (int i = 0; i < static_cast<int>(std::size(kFamilyNames)); ++i)
        if (name == kFamilyNames[i]) return static_cast<Family>(i);
    throw std::invalid_argument("unknown family '" + name + "'");
}

std::vector<std::string> family_names() {
    return {std::begin(kFamilyNames), std::end(kFamilyNames)};
}

CatalogResult generate(Family family, const CatalogParams& params, double c, double b) {
    switch (family) {
        case Family::Empty: {
            const int n = params.n;
            require(n >= 1, "empty: n must be >= 1");
            return {GameState::empty(n, c, b), EquilibriumClass::Nash,
                    AdversaryKind::MaxCarnage, c >= 1.0 && b >= 1.0 / n};
        }

        case Family::HubSpoke: {
            const int n = params.n;
            require(n >= 2, "hub-spoke: n must be >= 2");
            Builder g(n);
            g.immunize(0);
            for (int v = 1; v < n; ++v) g.buy(v, 0);
            const bool valid = c > 0 && c <= n - 3 && b >= 1 && b <= n - 1;
            return {std::move(g).state(c, b), EquilibriumClass::Nash,
                    AdversaryKind::MaxCarnage, valid};
        }

        case Family::TreeAllImmunized: {
            const int n = params.n;
            require(n >= 1, "tree-all-immunized: n must be >= 1");
            Builder g(n);
            std::vector<std::vector<int>> adj(n);
            for (int v = 0; v + 1 < n; ++v) {
                adj[v].push_back(v + 1);
                adj[v + 1].push_back(v);
            }
            for (int v = 0; v < n; ++v) g.immunize(v);
            if (n > 1) buy_toward_root(g, adj, tree_centroid(adj));
            const bool valid = c > 0 && c < n / 2.0 && b > 0 && b < n / 2.0;
            return {std::move(g).state(c, b), EquilibriumClass::Nash,
                    AdversaryKind::MaxCarnage, valid};
        }

        case Family::TreeTargetedLeaves: {
            const int k = params.k, n = params.n;
            require(k >= 1 && n > k, "tree-targeted-leaves: need n > k >= 1");
            const bool valid = k >= 7 && n - k >= k && c > 0 && c < k / 2.0 &&
                               b > (n - 1.0) / (n - k) && b < k / 2.0 - 1.0;
            if (k == 6 && n == 15)  // the canonical drawn instance
                return {canonical_tree_targeted_leaves(c, b), EquilibriumClass::Nash,
                        AdversaryKind::MaxCarnage, valid};
            Builder g(n);
            std::vector<std::vector<int>> adj(n);  // full tree for centroid rooting
            auto link = [&adj](int a, int bvtx) {
                adj[a].push_back(bvtx);
                adj[bvtx].push_back(a);
            };
            for (int v = 0; v + 1 < k; ++v) link(v, v + 1);  // immunized path
            for (int v = 0; v < k; ++v) g.immunize(v);
            std::vector<int> leaf_parent(n - k);
            for (int j = 0; j < n - k; ++j) {
                leaf_parent[j] = j % k;  // round-robin attachment
                link(k + j, leaf_parent[j]);
            }
            // root the immunized tree at the full-tree centroid; immunized
            // vertices buy toward the root, leaves buy their attachment edge
            const int root = tree_centroid(adj);
            std::vector<std::vector<int>> imm_adj(k);
            for (int v = 0; v + 1 < k; ++v) {
                imm_adj[v].push_back(v + 1);
                imm_adj[v + 1].push_back(v);
            }
            Builder imm_only(k);
            buy_toward_root(imm_only, imm_adj, root < k ? root : 0);
            for (int v = 0; v < k; ++v)
                for (int t : imm_only.strategies[v].purchases) g.buy(v, t);
            for (int j = 0; j < n - k; ++j) g.buy(k + j, leaf_parent[j]);
            return {std::move(g).state(c, b), EquilibriumClass::Nash,
                    AdversaryKind::MaxCarnage, valid};
        }

        case Family::Forest: {
            const int k = params.k, f = params.f;
            require(k >= 1 && f >= 1, "forest: need k >= 1 trees of size f >= 1");
            Builder g(k * f);
            for (int t = 0; t < k; ++t)
                for (int v = 1; v < f; ++v) g.buy(t * f + v, t * f);  // stars
            const bool valid = k >= 4 && f >= 2 && c > 0 && c <= f / 4.0 &&
                               b >= (k - 7.0 / 4.0) * f;
            return {std::move(g).state(c, b), EquilibriumClass::Nash,
                    AdversaryKind::MaxCarnage, valid};
        }

        case Family::ForestWithSingletons: {
            const int k = params.k, f = params.f, singles = params.extra;
            require(k >= 1 && f >= 1 && singles >= 0, "forest-with-singletons: bad sizes");
            Builder g(k * f + singles);
            for (int t = 0; t < k; ++t)
                for (int v = 1; v < f; ++v) g.buy(t * f + v, t * f);
            const bool valid = k >= 4 && f >= 5 && c > 1 && c < f / 4.0 &&
                               b >= (k - 1.0) * (f - 1.0);
            return {std::move(g).state(c, b), EquilibriumClass::Nash,
                    AdversaryKind::MaxCarnage, valid};
        }

        case Family::AlternatingCycle: {
            const int n = params.n;
            require(n >= 4 && n % 2 == 0, "alternating-cycle: n must be even and >= 4");
            Builder g(n);
            for (int v = 0; v < n; ++v) {
                if (v % 2 == 0) g.immunize(v);
                g.buy(v, (v + 1) % n);  // clockwise
            }
            const bool valid = n / 2 >= 4 && c > 1 && c < n / 2.0 - 2.0 && b > 2 &&
                               b < n / 2.0 + 1.0;
            return {std::move(g).state(c, b), EquilibriumClass::Nash,
                    AdversaryKind::MaxCarnage, valid};
        }

        case Family::Flower: {
            const int f = params.f, k = params.k;  // f petals of size 2k
            require(f >= 1 && k >= 2, "flower: need f >= 1 petals with k >= 2");
            const int n = f * (2 * k - 1) + 1;
            Builder g(n);
            g.immunize(0);
            for (int p = 0; p < f; ++p) {
                const int base = 1 + p * (2 * k - 1);
                // petal cycle: 0, base, base+1, ..., base+2k-2, back to 0;
                // odd positions are targeted and buy both incident edges
                for (int j = 0; j < 2 * k - 1; ++j) {
                    const int v = base + j;
                    if (j % 2 == 1) g.immunize(v);
                }
                for (int j = 0; j < 2 * k - 1; j += 2) {
                    const int v = base + j;
                    g.buy(v, j == 0 ? 0 : v - 1);
                    g.buy(v, j == 2 * k - 2 ? 0 : v + 1);
                }
            }
            const double c_cap =
                std::min((k - 1.0) * f - 2.0,
                         ((k - 1.0) * (k - 1.0) + 5.0) / (2.0 * k * f));
            const bool valid = k >= 2 && f >= 3 && b > 2 && b < (2.0 * k - 1.0) * f &&
                               c > 0 && c < c_cap;
            return {std::move(g).state(c, b), EquilibriumClass::Nash,
                    AdversaryKind::MaxCarnage, valid};
        }

        case Family::CompleteBipartite: {
            const int n = params.n;
            require(n >= 3, "complete-bipartite: n must be >= 3");
            Builder g(n);
            for (int v = 2; v < n; ++v) g.immunize(v);
            for (int u = 0; u < 2; ++u)
                for (int v = 2; v < n; ++v) g.buy(u, v);
            const bool valid = c > 0 && c <= 0.5 && b > (n - 1.0) / 2.0 && b < n - 1.0;
            return {std::move(g).state(c, b), EquilibriumClass::Nash,
                    AdversaryKind::MaxCarnage, valid};
        }

        case Family::SwapNotNash: {
            const int k = params.k;
            require(k >= 1, "swap-not-nash: need k >= 1 trees");
            Builder g(3 * k);
            for (int t = 0; t < k; ++t) {
                g.buy(3 * t + 1, 3 * t);
                g.buy(3 * t + 2, 3 * t);
            }
            const bool valid = k >= 9 && c > 0 && c < 1.5 && b >= 4 && b <= 6;
            return {std::move(g).state(c, b), EquilibriumClass::Swapstable,
                    AdversaryKind::MaxCarnage, valid};
        }

        case Family::LinkNotSwap: {
            const int k = params.k;
            require(k >= 1, "link-not-swap: need k >= 1");
            const int n = 3 * k;
            Builder g(n);
            for (int v = 0; v < n; ++v) {
                if (v % 3 == 0) g.immunize(v);
                g.buy(v, (v + 1) % n);
            }
            const bool valid = k >= 7 && c > 0 && c < n / 2.0 - 5.0 && b > 3 &&
                               b < n / 2.0 + 3.0;
            return {std::move(g).state(c, b), EquilibriumClass::Linkstable,
                    AdversaryKind::MaxCarnage, valid};
        }

        case Family::BinaryTreeDisruption: {
            const int height = params.extra;
            require(height >= 1 && height <= 20, "binary-tree-disruption: bad height");
            const int n = (1 << (height + 1)) - 1;
            const int first_leaf = (1 << height) - 1;
            Builder g(n);
            for (int v = 0; v < first_leaf; ++v) {
                g.immunize(v);
                g.buy(v, 2 * v + 1);
                g.buy(v, 2 * v + 2);
            }
            const bool valid = height >= 3 && b > 2 && b < n - 2 && c > 0 &&
                               c < 1.0 - std::ldexp(1.0, -height);
            return {std::move(g).state(c, b), EquilibriumClass::Nash,
                    AdversaryKind::MaxDisruption, valid};
        }

        case Family::TwoCyclesBridge: {
            const int k = params.k;
            require(k >= 2, "two-cycles-bridge: need k >= 2");
            const int n = 4 * k + 1;
            Builder g(n);
            for (int cyc = 0; cyc < 2; ++cyc) {
                const int base = cyc * 2 * k;
                for (int j = 0; j < 2 * k; ++j) {
                    const int v = base + j;
                    if (j % 2 == 0) g.immunize(v);
                    g.buy(v, base + (j + 1) % (2 * k));
                }
            }
            g.buy(4 * k, 0);
            g.buy(4 * k, 2 * k);
            const bool valid = k >= 3 && b > 2 && b < n / 4.0 && c >= 1 && c < n / 4.0 - 2.0;
            return {std::move(g).state(c, b), EquilibriumClass::Nash,
                    AdversaryKind::MaxCarnage, valid};
        }

        case Family::BestResponseCyclePaths: {
            const int comps = params.extra > 0 ? params.extra : 5;
            require(comps >= 1, "best-response-cycle-paths: bad component count");
            Builder g(4 * comps);
            for (int t = 0; t < comps; ++t)
                for (int v = 0; v < 3; ++v) g.buy(4 * t + v, 4 * t + v + 1);
            // a dynamics seed, not an equilibrium
            return {std::move(g).state(c, b), EquilibriumClass::None,
                    AdversaryKind::MaxCarnage, comps == 5 && c == 7.0 / 6.0 && b == 20.0};
        }
    }
    throw std::invalid_argument("unknown family");
}

}  // namespace netform
