#pragma once

#include <vector>

#include "netform/game.hpp"
#include "netform/rng.hpp"

namespace fixtures {

// The running 7-vertex example: immunized {1,2}, vulnerable regions
// {0}, {3,4}, {5,6}; edges 0-1, 0-2, 1-3, 1-4, 3-4, 2-5, 2-6, 5-6.
inline netform::GameState seven_vertex(double c = 0.0, double b = 0.0) {
    std::vector<netform::PlayerStrategy> s(7);
    s[0].purchases = {1, 2};
    s[1].purchases = {3, 4};
    s[1].immunized = true;
    s[2].purchases = {5, 6};
    s[2].immunized = true;
    s[3].purchases = {4};
    s[5].purchases = {6};
    return netform::GameState(7, c, b, std::move(s));
}

// two hub-spoke clusters of `cluster` vertices joined through one vulnerable
// bridge vertex adjacent to both hubs; hubs immunized, everyone else not
inline netform::GameState two_hubs_with_bridge(int cluster, double c, double b) {
    const int n = 2 * cluster + 1;
    std::vector<netform::PlayerStrategy> s(n);
    for (int h = 0; h < 2; ++h) {
        const int hub = h * cluster;
        s[hub].immunized = true;
        for (int v = 1; v < cluster; ++v) s[hub + v].purchases = {hub};
    }
    s[n - 1].purchases = {0, cluster};
    return netform::GameState(n, c, b, std::move(s));
}

// random state: ER edges with random purchase direction, each vertex
// immunized with the given probability. Costs are multiples of 1/64 so the
// test oracles can compare utilities exactly.
inline netform::GameState random_state(netform::SplitMix64& rng, int n, double edge_prob,
                                       double immun_prob, double* c_out = nullptr,
                                       double* b_out = nullptr) {
    std::vector<netform::PlayerStrategy> s(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            if (rng.next_double() >= edge_prob) continue;
            const int buyer = rng.next_bool() ? i : j;
            s[buyer].purchases.push_back(buyer == i ? j : i);
        }
    for (int i = 0; i < n; ++i) s[i].immunized = rng.next_double() < immun_prob;
    const double c = static_cast<double>(rng.next_below(257)) / 64.0;   // [0, 4]
    const double b = static_cast<double>(rng.next_below(513)) / 64.0;   // [0, 8]
    if (c_out) *c_out = c;
    if (b_out) *b_out = b;
    return netform::GameState(n, c, b, std::move(s));
}

}  // namespace fixtures
