#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "netform/adversary.hpp"
#include "netform/game.hpp"

namespace netform {

/// Network with every vulnerable region contracted to one weighted node.
/// Intra-region edges are dropped; parallel edges are preserved (a region with
/// two members adjacent to the same immunized vertex yields a multi-edge).
struct AbstractGraph {
    int node_count = 0;
    int immunized_node_count = 0;              // nodes [0, immunized_node_count) are originals
    std::vector<int> node_weight;              // original vertices represented
    std::vector<std::pair<int, int>> edges;    // multiset, canonical (min,max), sorted
    std::vector<int> node_of_vertex;           // original vertex -> abstract node

    bool simple() const;
    int total_weight() const;
};

AbstractGraph abstract_graph(const GameState& state);
AbstractGraph abstract_graph(const InducedGraph& graph, const RegionDecomposition& decomp);

struct ChordFreeResult {
    bool chord_free = true;
    std::optional<std::pair<int, int>> witness;  // chord edge or parallel pair
};

/// True iff no edge closes two internally vertex-disjoint paths between its
/// endpoints (equivalently: no edge is a chord of a cycle of length >= 4).
/// Parallel edges fail immediately with the parallel pair as witness.
ChordFreeResult is_chord_free(int node_count, const std::vector<std::pair<int, int>>& edges);
ChordFreeResult is_chord_free(const AbstractGraph& graph);

struct SparsityVerdict {
    int edge_count = 0;
    int bound = 0;        // 2n-4
    bool within = false;
    bool applicable = false;  // the bound is only claimed for n >= 4
};

SparsityVerdict check_sparsity(const GameState& state);

struct RegionTreeResult {
    bool all_trees = true;
    std::optional<int> witness_region;  // index of a region with a cycle
};

RegionTreeResult regions_are_trees(const GameState& state);

/// Biconnected decomposition with cut vertices excluded from the blocks
/// (blocks both of whose vertices are cut vertices come out empty).
struct BlockCutTree {
    std::vector<std::vector<int>> blocks;          // non-cut members, sorted
    std::vector<int> cut_vertices;                 // sorted
    std::vector<std::pair<int, int>> tree_edges;   // (block node, cut node)
    std::vector<std::vector<int>> tree_adjacency;  // over block nodes then cut nodes

    int block_node(int block_index) const { return block_index; }
    int cut_node(int cut_index) const { return static_cast<int>(blocks.size()) + cut_index; }
    int node_count() const { return static_cast<int>(blocks.size() + cut_vertices.size()); }
    int node_weight(int node) const;
    /// Original-vertex weight of every node's subtree under the given root.
    std::vector<int> subtree_sizes(int root_node) const;
};

/// Throws std::invalid_argument on a disconnected graph.
BlockCutTree block_cut_tree(const InducedGraph& graph);

struct HeavyCutVertices {
    std::vector<int> vertices;
    double epsilon = 0.0;  // 2 sqrt(c) / n^(1/3)
};

/// Targeted cut vertices whose removal together with their whole region
/// leaves every surviving component smaller than (1-epsilon)n.
HeavyCutVertices heavy_targeted_cut_vertices(const GameState& state, AdversaryKind kind);

struct WelfareCertificate {
    int n = 0;
    double c = 0, b = 0;
    double c_max = 0;     // (2n-4)c + n b
    double epsilon = 0;   // 2 sqrt(c) / n^(1/3)
    double bound = 0;     // n^2 - (sqrt(bc) + 12 sqrt(c)) n^(5/3) - c_max
    double measured_welfare = 0;
    bool holds = false;   // measured_welfare >= bound
    bool non_trivial = false;
};

WelfareCertificate welfare_certificate(const GameState& state, AdversaryKind kind);

struct ConnectivityFlags {
    bool connected = false;
    bool all_targeted_singletons = false;
    bool non_trivial = false;  // at least one edge and one immunized vertex
};

ConnectivityFlags connectivity_and_singletons(const GameState& state, AdversaryKind kind);

/// Centroid of a tree: every subtree of the returned root has at most n/2
/// vertices; ties broken by lower id. Throws std::invalid_argument on
/// non-tree input.
int centroid_root(const InducedGraph& tree);

struct DegreeStats {
    int max_degree = 0;
    double avg_degree = 0.0;
    double ratio = 0.0;  // max/avg, 0 when the graph has no edges
    std::vector<int> degree_histogram;
};

DegreeStats degree_stats(const InducedGraph& graph);

}  // namespace netform
