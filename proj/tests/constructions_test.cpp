#include <gtest/gtest.h>

#include <random>

#include "intspec/constructions.hpp"
#include "support/oracle.hpp"

using namespace intspec;

namespace {

std::vector<int> max_degree_vertices(const Graph& g)
{
    std::vector<int> out;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) == g.max_degree())
            out.push_back(v);
    return out;
}

int top_color(const EdgeColoring& c)
{
    return *std::max_element(c.colors.begin(), c.colors.end());
}

}  // namespace

TEST(Staircase, K32)
{
    const Graph g = build_complete_bipartite(3, 2);
    const auto xi = staircase_coloring(3, 2);
    EXPECT_EQ(xi.t, 4);
    EXPECT_EQ(xi.colors, (std::vector<int>{1, 2, 3, 2, 3, 4}));
    EXPECT_EQ(summarize(g, xi).f, 5);
}

TEST(Staircase, EverySmallPair)
{
    for (int m = 1; m <= 8; ++m)
        for (int n = 1; n <= m; ++n) {
            const Graph g = build_complete_bipartite(m, n);
            const auto xi = staircase_coloring(m, n);
            ASSERT_TRUE(validate(g, xi).ok()) << m << "," << n;
            EXPECT_EQ(xi.t, m + n - 1);
            EXPECT_EQ(oracle::interval_count(g, xi.colors), m + n);
            EXPECT_TRUE(is_harmonic(g, xi));
        }
}

TEST(Staircase, RejectsBadShape)
{
    EXPECT_THROW(staircase_coloring(2, 3), std::invalid_argument);
    EXPECT_THROW(staircase_coloring(0, 0), std::invalid_argument);
}

TEST(Collapse, K32SingleStep)
{
    const Graph g = build_complete_bipartite(3, 2);
    const auto& shape = *g.complete_bipartite_shape();
    const auto next = collapse_step(g, staircase_coloring(3, 2));
    EXPECT_EQ(next.t, 3);
    EXPECT_EQ(next.colors[shape.edge_index(2, 3)], 1);
    EXPECT_EQ(summarize(g, next).f, 4);
    EXPECT_TRUE(is_harmonic(g, next));
}

TEST(Collapse, K22SingleStep)
{
    const Graph g = build_complete_bipartite(2, 2);
    const auto next = collapse_step(g, staircase_coloring(2, 2));
    EXPECT_EQ(next.t, 2);
    EXPECT_EQ(next.colors, (std::vector<int>{1, 2, 2, 1}));
    EXPECT_EQ(summarize(g, next).f, 4);
}

TEST(Collapse, K33SequenceStaysFullyInterval)
{
    // the equal-sided staircase never loses an interval vertex
    const Graph g = build_complete_bipartite(3, 3);
    const auto trace = collapse_sequence(g, staircase_coloring(3, 3), 2);
    ASSERT_EQ(trace.stages.size(), 3u);
    ASSERT_EQ(trace.moved.size(), 3u);
    EXPECT_TRUE(trace.moved[0].empty());
    for (const auto& stage : trace.stages)
        EXPECT_EQ(summarize(g, stage).f, 6);
    EXPECT_EQ(trace.stages[2].t, 3);
}

TEST(Collapse, UnequalSidesLoseOneVertexPerStep)
{
    for (int m = 2; m <= 8; ++m)
        for (int n = 2; n < m; ++n) {
            const Graph g = build_complete_bipartite(m, n);
            const auto trace = collapse_sequence(g, staircase_coloring(m, n), n - 1);
            for (int j = 0; j < n; ++j)
                EXPECT_EQ(oracle::interval_count(g, trace.stages[j].colors), m + n - j) << m << "," << n << " j=" << j;
        }
}

TEST(Collapse, AtLeastMPlusOneEverywhere)
{
    for (int m = 2; m <= 8; ++m)
        for (int n = 2; n <= m; ++n) {
            const Graph g = build_complete_bipartite(m, n);
            const auto trace = collapse_sequence(g, staircase_coloring(m, n), n - 1);
            for (const auto& stage : trace.stages)
                EXPECT_GE(summarize(g, stage).f, m + 1);
        }
}

TEST(Collapse, MovedEdgesAreTheTopClass)
{
    const Graph g = build_complete_bipartite(5, 3);
    const auto trace = collapse_sequence(g, staircase_coloring(5, 3), 2);
    for (std::size_t j = 1; j < trace.stages.size(); ++j) {
        const auto& before = trace.stages[j - 1];
        EXPECT_EQ(trace.moved[j], color_class(g, before, top_color(before)));
        for (int e : trace.moved[j])
            EXPECT_EQ(trace.stages[j].colors[e], before.colors[e] - g.max_degree());
        EXPECT_EQ(trace.stages[j].t, before.t - 1);
    }
}

TEST(Collapse, RandomHarmonicStagesKeepInvariants)
{
    std::mt19937 rng(11);
    int sequences = 0;
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 3);
        const int m = n + static_cast<int>(rng() % 3);
        const auto [t, colors] = oracle::random_harmonic(m, n, rng);
        if (t <= m)
            continue;
        const Graph g = build_complete_bipartite(m, n);
        const EdgeColoring start{t, colors};
        const auto trace = collapse_sequence(g, start, start.t - m);
        ASSERT_EQ(trace.stages.back().t, m);
        const auto tops = max_degree_vertices(g);
        for (std::size_t j = 0; j < trace.stages.size(); ++j) {
            const auto& stage = trace.stages[j];
            ASSERT_TRUE(validate(g, stage).ok());
            EXPECT_TRUE(is_harmonic(g, stage));
            if (j == 0)
                continue;
            const auto& before = trace.stages[j - 1];
            for (int v : tops)
                if (is_interval_on(g, before, std::span<const int>(&v, 1)))
                    EXPECT_TRUE(is_interval_on(g, stage, std::span<const int>(&v, 1)));
        }
        ++sequences;
    }
    EXPECT_GT(sequences, 150);
}

TEST(Collapse, Preconditions)
{
    const Graph g = build_complete_bipartite(2, 2);
    // Δ-coloring: nothing to collapse
    EXPECT_THROW(collapse_step(g, {2, {1, 2, 2, 1}}), std::invalid_argument);
    // 1,2,3,1 is proper but colors 1 and 3 meet at y_1 with the same residue
    EXPECT_THROW(collapse_step(g, {3, {1, 2, 3, 1}}), std::invalid_argument);
    EXPECT_THROW(collapse_sequence(g, staircase_coloring(2, 2), 2), std::out_of_range);
    EXPECT_THROW(collapse_sequence(g, staircase_coloring(2, 2), -1), std::out_of_range);
    const auto empty = collapse_sequence(g, staircase_coloring(2, 2), 0);
    EXPECT_EQ(empty.stages.size(), 1u);
}

TEST(Block, IntervalOnYForEveryQ)
{
    for (int m = 1; m <= 8; ++m)
        for (int n = 1; n <= m; ++n) {
            const Graph g = build_complete_bipartite(m, n);
            const auto y = g.vertices_in(Part::Y);
            for (int q = (m + n - 1) / n; q <= m; ++q) {
                const auto c = block_interval_on_Y(m, n, q);
                ASSERT_EQ(c.t, n * q);
                ASSERT_TRUE(validate(g, c).ok()) << m << "," << n << "," << q;
                EXPECT_TRUE(is_interval_on(g, c, y));
            }
        }
}

TEST(Block, Examples)
{
    const Graph g52 = build_complete_bipartite(5, 2);
    const auto c = block_interval_on_Y(5, 2, 3);
    EXPECT_EQ(c.t, 6);
    const auto& shape = *g52.complete_bipartite_shape();
    EXPECT_EQ(spectrum(g52, c, shape.y_vertex(5)), (std::vector<int>{5, 6}));
    EXPECT_EQ(spectrum(g52, c, shape.y_vertex(4)), (std::vector<int>{3, 4}));

    const Graph g33 = build_complete_bipartite(3, 3);
    EXPECT_EQ(summarize(g33, block_interval_on_Y(3, 3, 1)).f, 6);

    EXPECT_THROW(block_interval_on_Y(5, 2, 2), std::out_of_range);
    EXPECT_THROW(block_interval_on_Y(5, 2, 6), std::out_of_range);
    EXPECT_THROW(block_interval_on_Y(0, 2, 1), std::invalid_argument);
}
