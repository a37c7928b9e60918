#include "netform/structure.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "netform/payoff.hpp"

namespace netform {

bool AbstractGraph::simple() const {
    for (std::size_t i = 1; i < edges.size(); ++i)
        if (edges[i] == edges[i - 1]) return false;
    return true;
}

int AbstractGraph::total_weight() const {
    return std::accumulate(node_weight.begin(), node_weight.end(), 0);
}

AbstractGraph abstract_graph(const InducedGraph& graph, const RegionDecomposition& decomp) {
    AbstractGraph out;
    const int n = graph.n;
    out.node_of_vertex.assign(n, -1);
    int next = 0;
    for (int v : decomp.immunized) out.node_of_vertex[v] = next++;
    out.immunized_node_count = next;
    for (int r = 0; r < decomp.region_count(); ++r) {
        for (int v : decomp.vulnerable_regions[r]) out.node_of_vertex[v] = next;
        ++next;
    }
    out.node_count = next;
    out.node_weight.assign(next, 1);
    for (int r = 0; r < decomp.region_count(); ++r)
        out.node_weight[out.immunized_node_count + r] =
            static_cast<int>(decomp.vulnerable_regions[r].size());
    for (auto [a, b] : graph.edges) {
        const int x = out.node_of_vertex[a], y = out.node_of_vertex[b];
        if (x == y) continue;  // intra-region edge
        out.edges.emplace_back(std::min(x, y), std::max(x, y));
    }
    std::sort(out.edges.begin(), out.edges.end());
    return out;
}

AbstractGraph abstract_graph(const GameState& state) {
    const InducedGraph graph = build_induced_graph(state);
    return abstract_graph(graph, decompose_regions(state, graph));
}

namespace {

// Biconnected components by Tarjan's edge-stack algorithm. Returns the vertex
// set of every block plus the cut vertices. Works on multigraphs when edges
// carry distinct ids.
struct Biconnected {
    std::vector<std::vector<int>> block_vertices;
    std::vector<char> is_cut;
};

Biconnected biconnected_components(int n, const std::vector<std::pair<int, int>>& edges) {
    std::vector<std::vector<std::pair<int, int>>> adj(n);  // (neighbor, edge id)
    for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
        adj[edges[e].first].emplace_back(edges[e].second, e);
        adj[edges[e].second].emplace_back(edges[e].first, e);
    }
    Biconnected out;
    out.is_cut.assign(n, 0);
    std::vector<int> disc(n, -1), low(n, 0), parent_edge(n, -1), it(n, 0);
    std::vector<int> edge_stack;
    int time = 0;

    for (int root = 0; root < n; ++root) {
        if (disc[root] >= 0) continue;
        std::vector<int> stack = {root};
        disc[root] = low[root] = time++;
        int root_children = 0;
        while (!stack.empty()) {
            const int u = stack.back();
            if (it[u] < static_cast<int>(adj[u].size())) {
                const auto [v, eid] = adj[u][it[u]++];
                if (eid == parent_edge[u]) continue;
                if (disc[v] < 0) {
                    edge_stack.push_back(eid);
                    disc[v] = low[v] = time++;
                    parent_edge[v] = eid;
                    stack.push_back(v);
                } else if (disc[v] < disc[u]) {
                    edge_stack.push_back(eid);
                    low[u] = std::min(low[u], disc[v]);
                }
            } else {
                stack.pop_back();
                if (stack.empty()) break;
                const int p = stack.back();
                low[p] = std::min(low[p], low[u]);
                if (p == root) ++root_children;
                if (low[u] >= disc[p]) {
                    if (p != root || root_children > 1) out.is_cut[p] = 1;
                    // pop the block: edges up to and including parent_edge[u]
                    std::vector<int> members;
                    while (!edge_stack.empty()) {
                        const int eid = edge_stack.back();
                        edge_stack.pop_back();
                        members.push_back(edges[eid].first);
                        members.push_back(edges[eid].second);
                        if (eid == parent_edge[u]) break;
                    }
                    std::sort(members.begin(), members.end());
                    members.erase(std::unique(members.begin(), members.end()), members.end());
                    out.block_vertices.push_back(std::move(members));
                }
            }
        }
        if (adj[root].empty())  // isolated vertex forms its own block
            out.block_vertices.push_back({root});
    }
    return out;
}

}  // namespace

ChordFreeResult is_chord_free(int node_count, const std::vector<std::pair<int, int>>& edges) {
    ChordFreeResult res;
    std::vector<std::pair<int, int>> sorted = edges;
    for (auto& e : sorted)
        if (e.first > e.second) std::swap(e.first, e.second);
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 1; i < sorted.size(); ++i)
        if (sorted[i] == sorted[i - 1]) {
            res.chord_free = false;
            res.witness = sorted[i];
            return res;
        }
    // Edge (u,v) is a chord iff u and v still lie on a common cycle once the
    // edge is removed, i.e. they share a block with at least three vertices.
    for (std::size_t skip = 0; skip < sorted.size(); ++skip) {
        std::vector<std::pair<int, int>> rest;
        rest.reserve(sorted.size() - 1);
        for (std::size_t j = 0; j < sorted.size(); ++j)
            if (j != skip) rest.push_back(sorted[j]);
        const Biconnected bc = biconnected_components(node_count, rest);
        const auto [u, v] = sorted[skip];
        for (const auto& block : bc.block_vertices) {
            if (block.size() < 3) continue;
            if (std::binary_search(block.begin(), block.end(), u) &&
                std::binary_search(block.begin(), block.end(), v)) {
                res.chord_free = false;
                res.witness = sorted[skip];
                return res;
            }
        }
    }
    return res;
}

ChordFreeResult is_chord_free(const AbstractGraph& graph) {
    return is_chord_free(graph.node_count, graph.edges);
}

SparsityVerdict check_sparsity(const GameState& state) {
    const InducedGraph graph = build_induced_graph(state);
    SparsityVerdict v;
    v.edge_count = graph.edge_count();
    v.bound = 2 * state.n() - 4;
    v.applicable = state.n() >= 4;
    v.within = !v.applicable || v.edge_count <= v.bound;
    return v;
}

RegionTreeResult regions_are_trees(const GameState& state) {
    const InducedGraph graph = build_induced_graph(state);
    const RegionDecomposition decomp = decompose_regions(state, graph);
    RegionTreeResult res;
    for (int r = 0; r < decomp.region_count(); ++r) {
        const auto& members = decomp.vulnerable_regions[r];
        int internal_edges = 0;
        for (int v : members)
            for (int u : graph.adjacency[v])
                if (u > v && decomp.region_of[u] == r) ++internal_edges;
        // regions are connected by construction, so tree <=> |E| = |V|-1
        if (internal_edges != static_cast<int>(members.size()) - 1) {
            res.all_trees = false;
            res.witness_region = r;
            return res;
        }
    }
    return res;
}

int BlockCutTree::node_weight(int node) const {
    if (node < static_cast<int>(blocks.size()))
        return static_cast<int>(blocks[node].size());
    return 1;
}

std::vector<int> BlockCutTree::subtree_sizes(int root_node) const {
    const int m = node_count();
    std::vector<int> size(m, 0), parent(m, -2), order;
    order.reserve(m);
    std::vector<int> stack = {root_node};
    parent[root_node] = -1;
    while (!stack.empty()) {
        const int u = stack.back();
        stack.pop_back();
        order.push_back(u);
        for (int v : tree_adjacency[u])
            if (parent[v] == -2) {
                parent[v] = u;
                stack.push_back(v);
            }
    }
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        size[*it] += node_weight(*it);
        if (parent[*it] >= 0) size[parent[*it]] += size[*it];
    }
    return size;
}

BlockCutTree block_cut_tree(const InducedGraph& graph) {
    // connectivity check
    if (graph.n == 0) throw std::invalid_argument("block_cut_tree: empty graph");
    {
        std::vector<char> seen(graph.n, 0);
        std::vector<int> stack = {0};
        seen[0] = 1;
        int count = 0;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            ++count;
            for (int u : graph.adjacency[v])
                if (!seen[u]) {
                    seen[u] = 1;
                    stack.push_back(u);
                }
        }
        if (count != graph.n)
            throw std::invalid_argument("block_cut_tree: graph is not connected");
    }
    const Biconnected bc = biconnected_components(graph.n, graph.edges);
    BlockCutTree tree;
    for (int v = 0; v < graph.n; ++v)
        if (bc.is_cut[v]) tree.cut_vertices.push_back(v);
    std::vector<int> cut_index(graph.n, -1);
    for (int k = 0; k < static_cast<int>(tree.cut_vertices.size()); ++k)
        cut_index[tree.cut_vertices[k]] = k;

    for (const auto& block : bc.block_vertices) {
        std::vector<int> members;
        const int node = static_cast<int>(tree.blocks.size());
        for (int v : block) {
            if (cut_index[v] >= 0)
                tree.tree_edges.emplace_back(node, v);  // second filled in below
            else
                members.push_back(v);
        }
        tree.blocks.push_back(std::move(members));
    }
    for (auto& e : tree.tree_edges) e.second = static_cast<int>(tree.blocks.size()) + cut_index[e.second];
    tree.tree_adjacency.assign(tree.node_count(), {});
    for (auto [bn, cn] : tree.tree_edges) {
        tree.tree_adjacency[bn].push_back(cn);
        tree.tree_adjacency[cn].push_back(bn);
    }
    return tree;
}

HeavyCutVertices heavy_targeted_cut_vertices(const GameState& state, AdversaryKind kind) {
    const InducedGraph graph = build_induced_graph(state);
    const RegionDecomposition decomp = decompose_regions(state, graph);
    const AttackDistribution dist = attack_distribution(state, graph, decomp, kind);
    const Biconnected bc = biconnected_components(graph.n, graph.edges);

    HeavyCutVertices out;
    out.epsilon = 2.0 * std::sqrt(state.edge_cost()) / std::cbrt(static_cast<double>(state.n()));
    const double threshold = (1.0 - out.epsilon) * state.n();
    for (int v = 0; v < graph.n; ++v) {
        if (!bc.is_cut[v]) continue;
        const int r = decomp.region_of[v];
        if (r < 0 || dist.region_weight[r] == 0) continue;  // not targeted
        const PostAttackView view = post_attack(graph, decomp, r);
        std::size_t largest = 0;
        for (const auto& comp : view.components) largest = std::max(largest, comp.size());
        if (static_cast<double>(largest) < threshold) out.vertices.push_back(v);
    }
    return out;
}

WelfareCertificate welfare_certificate(const GameState& state, AdversaryKind kind) {
    WelfareCertificate cert;
    cert.n = state.n();
    cert.c = state.edge_cost();
    cert.b = state.immunization_cost();
    const double n = static_cast<double>(cert.n);
    cert.c_max = (2.0 * n - 4.0) * cert.c + n * cert.b;
    cert.epsilon = 2.0 * std::sqrt(cert.c) / std::cbrt(n);
    const double k_const = std::sqrt(cert.b * cert.c) + 12.0 * std::sqrt(cert.c);
    cert.bound = n * n - k_const * std::pow(n, 5.0 / 3.0) - cert.c_max;
    const InducedGraph graph = build_induced_graph(state);
    const RegionDecomposition decomp = decompose_regions(state, graph);
    const AttackDistribution dist = attack_distribution(state, graph, decomp, kind);
    cert.measured_welfare = social_welfare_component_form(state, graph, decomp, dist);
    cert.holds = cert.measured_welfare >= cert.bound;
    cert.non_trivial = graph.edge_count() >= 1 && state.immunized_count() >= 1;
    return cert;
}

ConnectivityFlags connectivity_and_singletons(const GameState& state, AdversaryKind kind) {
    const InducedGraph graph = build_induced_graph(state);
    const RegionDecomposition decomp = decompose_regions(state, graph);
    const AttackDistribution dist = attack_distribution(state, graph, decomp, kind);
    ConnectivityFlags flags;
    {
        std::vector<char> seen(graph.n, 0);
        std::vector<int> stack = {0};
        seen[0] = 1;
        int count = 0;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            ++count;
            for (int u : graph.adjacency[v])
                if (!seen[u]) {
                    seen[u] = 1;
                    stack.push_back(u);
                }
        }
        flags.connected = count == graph.n;
    }
    flags.all_targeted_singletons = true;
    for (int r : dist.targeted)
        if (decomp.vulnerable_regions[r].size() > 1) flags.all_targeted_singletons = false;
    flags.non_trivial = graph.edge_count() >= 1 && state.immunized_count() >= 1;
    return flags;
}

int centroid_root(const InducedGraph& tree) {
    const int n = tree.n;
    if (tree.edge_count() != n - 1)
        throw std::invalid_argument("centroid_root: input is not a tree");
    std::vector<int> parent(n, -2), order;
    order.reserve(n);
    std::vector<int> stack = {0};
    parent[0] = -1;
    while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        order.push_back(v);
        for (int u : tree.adjacency[v])
            if (parent[u] == -2) {
                parent[u] = v;
                stack.push_back(u);
            }
    }
    if (static_cast<int>(order.size()) != n)
        throw std::invalid_argument("centroid_root: input is not a tree");
    std::vector<int> size(n, 1), max_part(n, 0);
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        const int v = *it;
        if (parent[v] >= 0) {
            size[parent[v]] += size[v];
            max_part[parent[v]] = std::max(max_part[parent[v]], size[v]);
        }
    }
    for (int v = 0; v < n; ++v)
        max_part[v] = std::max(max_part[v], n - size[v]);
    int best = 0;
    for (int v = 1; v < n; ++v)
        if (max_part[v] < max_part[best]) best = v;
    return best;
}

DegreeStats degree_stats(const InducedGraph& graph) {
    DegreeStats s;
    for (int v = 0; v < graph.n; ++v) s.max_degree = std::max(s.max_degree, graph.degree(v));
    s.avg_degree = graph.n > 0 ? 2.0 * graph.edge_count() / graph.n : 0.0;
    s.ratio = s.avg_degree > 0 ? s.max_degree / s.avg_degree : 0.0;
    s.degree_histogram.assign(s.max_degree + 1, 0);
    for (int v = 0; v < graph.n; ++v) ++s.degree_histogram[graph.degree(v)];
    return s;
}

}  // namespace netform
