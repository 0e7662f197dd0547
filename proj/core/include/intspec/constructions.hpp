#pragma once

#include <vector>

#include "intspec/coloring.hpp"
#include "intspec/graph.hpp"

namespace intspec {

// Stages of the collapse sequence started from a harmonic coloring.
// stages[0] is the input; moved[j] lists the edges recolored to produce
// stages[j] (moved[0] is empty).
struct CollapseTrace {
    std::vector<EdgeColoring> stages;
    std::vector<std::vector<int>> moved;
};

// The coloring (x_i, y_j) -> i + j - 1 of K_{m,n} as laid out by
// build_complete_bipartite(m, n). Requires m >= n >= 1.
EdgeColoring staircase_coloring(int m, int n);

// Recolors every edge of the current maximum color M with M - Δ(G). The input
// must be valid and harmonic, and must use more than Δ(G) colors.
EdgeColoring collapse_step(const Graph& g, const EdgeColoring& c);

// k iterated collapse steps, 0 <= k <= t - Δ(G).
CollapseTrace collapse_sequence(const Graph& g, const EdgeColoring& c, int k);

// Coloring of K_{m,n} with t = n*q that is interval on Y. Y is cut into q
// consecutive groups of at most n vertices (greedy, earlier groups full);
// group l owns the color block [(l-1)n+1, ln] and the r-th member y of a group
// gets color (l-1)n + 1 + ((i + r) mod n) on the edge (x_i, y).
// Requires ceil(m/n) <= q <= m.
EdgeColoring block_interval_on_Y(int m, int n, int q);

}  // namespace intspec
