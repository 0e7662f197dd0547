#include "intspec/constructions.hpp"

#include <algorithm>
#include <stdexcept>

namespace intspec {

EdgeColoring staircase_coloring(int m, int n)
{
    if (n < 1 || m < n)
        throw std::invalid_argument("staircase coloring needs m >= n >= 1");
    const CompleteBipartiteShape shape{m, n};
    EdgeColoring c{m + n - 1, std::vector<int>(m * n)};
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= m; ++j)
            c.colors[shape.edge_index(i, j)] = i + j - 1;
    return c;
}

EdgeColoring collapse_step(const Graph& g, const EdgeColoring& c)
{
    if (!is_harmonic(g, c))
        throw std::invalid_argument("collapse step needs a harmonic coloring");
    const int delta = g.max_degree();
    const int top = *std::max_element(c.colors.begin(), c.colors.end());
    if (top <= delta)
        throw std::invalid_argument("coloring already uses Delta(G) colors; no collapse step remains");

    EdgeColoring next{top - 1, c.colors};
    for (int& color : next.colors)
        if (color == top)
            color -= delta;
    return next;
}

CollapseTrace collapse_sequence(const Graph& g, const EdgeColoring& c, int k)
{
    if (!is_harmonic(g, c))
        throw std::invalid_argument("collapse sequence needs a harmonic coloring");
    if (k < 0 || k > c.t - g.max_degree())
        throw std::out_of_range("collapse length " + std::to_string(k) + " outside [0, " +
                                std::to_string(c.t - g.max_degree()) + "]");
    CollapseTrace trace;
    trace.stages.push_back(c);
    trace.moved.emplace_back();
    for (int j = 1; j <= k; ++j) {
        const EdgeColoring& previous = trace.stages.back();
        std::vector<int> moved = color_class(g, previous, previous.t);
        trace.stages.push_back(collapse_step(g, previous));
        trace.moved.push_back(std::move(moved));
    }
    return trace;
}

EdgeColoring block_interval_on_Y(int m, int n, int q)
{
    if (m < 1 || n < 1)
        throw std::invalid_argument("K_{m,n} requires m >= 1 and n >= 1");
    const int min_groups = (m + n - 1) / n;
    if (q < min_groups || q > m)
        throw std::out_of_range("group count " + std::to_string(q) + " outside [" +
                                std::to_string(min_groups) + ", " + std::to_string(m) + "]");

    const CompleteBipartiteShape shape{m, n};
    EdgeColoring c{n * q, std::vector<int>(m * n)};
    int j = 1;
    for (int group = 1; group <= q; ++group) {
        // leave at least one y for each later group
        const int size = std::min(n, m - (j - 1) - (q - group));
        for (int r = 1; r <= size; ++r, ++j)
            for (int i = 1; i <= n; ++i)
                c.colors[shape.edge_index(i, j)] = (group - 1) * n + 1 + (i + r) % n;
    }
    return c;
}

}  // namespace intspec
