#include <gtest/gtest.h>

#include <random>

#include "intspec/coloring.hpp"
#include "intspec/constructions.hpp"
#include "support/oracle.hpp"

using namespace intspec;

namespace {

EdgeColoring around_c4(std::vector<int> colors, int t)
{
    return {t, std::move(colors)};
}

}  // namespace

TEST(Validate, ProperSurjective)
{
    const Graph c4 = build_cycle(4);
    EXPECT_TRUE(validate(c4, around_c4({1, 2, 1, 2}, 2)).ok());
    EXPECT_TRUE(validate(c4, around_c4({1, 2, 3, 4}, 4)).ok());
}

TEST(Validate, ReportsEveryKind)
{
    const Graph c4 = build_cycle(4);
    const auto clash = validate(c4, around_c4({1, 1, 2, 3}, 3));
    ASSERT_FALSE(clash.ok());
    EXPECT_EQ(clash.violations.front().kind, ViolationKind::AdjacentClash);
    EXPECT_FALSE(clash.describe().empty());

    const auto unused = validate(c4, around_c4({1, 2, 1, 2}, 3));
    ASSERT_EQ(unused.violations.size(), 1u);
    EXPECT_EQ(unused.violations[0].kind, ViolationKind::UnusedColor);
    EXPECT_EQ(unused.violations[0].color, 3);

    const auto range = validate(c4, around_c4({1, 2, 1, 5}, 4));
    bool out_of_range = false;
    for (const auto& v : range.violations)
        out_of_range = out_of_range || v.kind == ViolationKind::ColorOutOfRange;
    EXPECT_TRUE(out_of_range);

    EXPECT_THROW(validate(c4, around_c4({1, 2, 1}, 2)), std::invalid_argument);
    EXPECT_THROW(validate(c4, around_c4({1, 2, 1, 2}, 0)), std::invalid_argument);
}

TEST(Validate, AgreesWithOracleOnAllMaps)
{
    for (const Graph& g : oracle::connected_graphs_up_to(4)) {
        for (int t = 1; t <= g.edge_count(); ++t) {
            std::vector<int> colors(g.edge_count(), 1);
            for (;;) {
                EXPECT_EQ(validate(g, {t, colors}).ok(), oracle::proper_and_onto(g, colors, t));
                int i = 0;
                while (i < g.edge_count() && colors[i] == t)
                    colors[i++] = 1;
                if (i == g.edge_count())
                    break;
                ++colors[i];
            }
        }
    }
}

TEST(Spectrum, Examples)
{
    const Graph c4 = build_cycle(4);
    const auto c = around_c4({1, 2, 3, 4}, 4);
    EXPECT_EQ(spectrum(c4, c, 0), (std::vector<int>{1, 4}));
    EXPECT_EQ(spectrum(c4, c, 2), (std::vector<int>{2, 3}));

    const Graph k33 = build_complete_bipartite(3, 3);
    const auto xi = staircase_coloring(3, 3);
    EXPECT_EQ(spectrum(k33, xi, k33.complete_bipartite_shape()->x_vertex(2)), (std::vector<int>{2, 3, 4}));
}

TEST(IsInterval, Examples)
{
    EXPECT_TRUE(is_interval(std::vector<int>{3}));
    EXPECT_TRUE(is_interval(std::vector<int>{2, 3, 4}));
    EXPECT_TRUE(is_interval(std::vector<int>{4, 2, 3}));
    EXPECT_FALSE(is_interval(std::vector<int>{1, 3}));
    EXPECT_FALSE(is_interval(std::vector<int>{1, 4}));
    EXPECT_THROW(is_interval(std::vector<int>{}), std::invalid_argument);
}

TEST(Summarize, FourCycle)
{
    const Graph c4 = build_cycle(4);
    const auto a = summarize(c4, around_c4({1, 2, 3, 4}, 4));
    EXPECT_EQ(a.f, 3);
    EXPECT_EQ(a.interval_vertices, (std::vector<int>{1, 2, 3}));
    EXPECT_FALSE(a.interval[0]);

    EXPECT_EQ(summarize(c4, around_c4({1, 2, 1, 2}, 2)).f, 4);
    EXPECT_EQ(summarize(c4, around_c4({1, 3, 2, 4}, 4)).f, 1);

    EXPECT_THROW(summarize(c4, around_c4({1, 1, 2, 3}, 3)), InvalidColoring);
    try {
        summarize(c4, around_c4({1, 1, 2, 3}, 3));
    } catch (const InvalidColoring& e) {
        EXPECT_FALSE(e.report().ok());
    }
}

TEST(Summarize, MatchesOracleCount)
{
    for (const Graph& g : oracle::connected_graphs_up_to(5))
        for (int t = g.max_degree(); t <= g.edge_count(); ++t)
            oracle::walk_all(g, t, [&](const std::vector<int>& colors) {
                const auto s = summarize(g, {t, colors});
                ASSERT_EQ(s.f, oracle::interval_count(g, colors));
                ASSERT_EQ(static_cast<int>(s.interval_vertices.size()), s.f);
                for (int v = 0; v < g.vertex_count(); ++v) {
                    ASSERT_TRUE(std::is_sorted(s.spectra[v].begin(), s.spectra[v].end()));
                    ASSERT_EQ(static_cast<int>(s.spectra[v].size()), g.degree(v));
                }
            });
}

TEST(IsIntervalOn, Examples)
{
    const Graph c4 = build_cycle(4);
    const auto c = around_c4({1, 2, 1, 3}, 3);
    EXPECT_FALSE(is_interval_on(c4, c, std::vector<int>{0, 1, 2, 3}));
    EXPECT_TRUE(is_interval_on(c4, c, std::vector<int>{1, 2}));
    EXPECT_TRUE(is_interval_on(c4, c, std::vector<int>{}));
}

TEST(ColorClass, Examples)
{
    const Graph c4 = build_cycle(4);
    const auto c = around_c4({1, 2, 1, 2}, 2);
    EXPECT_EQ(color_class(c4, c, 1), (std::vector<int>{0, 2}));
    EXPECT_EQ(color_class(c4, c, 2), (std::vector<int>{1, 3}));
    EXPECT_THROW(color_class(c4, c, 3), std::out_of_range);
    EXPECT_THROW(color_class(c4, c, 0), std::out_of_range);
}

TEST(ColorClass, PartitionsEdgesIntoMatchings)
{
    for (const Graph& g : oracle::connected_graphs_up_to(4))
        for (int t = g.max_degree(); t <= g.edge_count(); ++t)
            oracle::walk_all(g, t, [&](const std::vector<int>& colors) {
                const EdgeColoring c{t, colors};
                int total = 0;
                for (int k = 1; k <= t; ++k) {
                    const auto cls = color_class(g, c, k);
                    ASSERT_FALSE(cls.empty());
                    std::set<int> ends;
                    for (int e : cls) {
                        ASSERT_TRUE(ends.insert(g.edge(e).u).second);
                        ASSERT_TRUE(ends.insert(g.edge(e).v).second);
                    }
                    total += static_cast<int>(cls.size());
                }
                ASSERT_EQ(total, g.edge_count());
            });
}

TEST(Harmonic, Examples)
{
    // K_{3,2}: staircase uses colors 1..4 with Δ = 3
    const Graph k32 = build_complete_bipartite(3, 2);
    EXPECT_TRUE(is_harmonic(k32, staircase_coloring(3, 2)));

    // C_4 with 1,2,3,4: residues mod 2 are 1,0,1,0 -> harmonic
    const Graph c4 = build_cycle(4);
    EXPECT_TRUE(is_harmonic(c4, around_c4({1, 2, 3, 4}, 4)));
    // 1,2,4,3: vertex 2 sees 2 and 4, the same residue
    EXPECT_FALSE(is_harmonic(c4, around_c4({1, 2, 4, 3}, 4)));

    // odd cycles are class 2
    EXPECT_THROW(is_harmonic(build_cycle(5), {3, {1, 2, 1, 2, 3}}), std::invalid_argument);
    EXPECT_THROW(is_harmonic(c4, around_c4({1, 1, 2, 2}, 2)), InvalidColoring);
}

TEST(Harmonic, RandomLiftsAreHarmonic)
{
    std::mt19937 rng(7);
    for (int trial = 0; trial < 400; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 4);
        const int m = n + static_cast<int>(rng() % 3);
        const auto [t, colors] = oracle::random_harmonic(m, n, rng);
        const Graph g = build_complete_bipartite(m, n);
        const EdgeColoring c{t, colors};
        ASSERT_TRUE(validate(g, c).ok());
        EXPECT_TRUE(is_harmonic(g, c));
    }
}

TEST(Harmonic, ResidueDefinitionAgreesOnSmallBipartite)
{
    // direct definition: every residue class union is a matching
    for (const Graph& g : oracle::connected_graphs_up_to(5)) {
        if (!is_bipartite(g))
            continue;
        const int delta = g.max_degree();
        for (int t = delta; t <= g.edge_count(); ++t)
            oracle::walk_all(g, t, [&](const std::vector<int>& colors) {
                bool matching = true;
                for (int r = 0; r < delta; ++r) {
                    std::set<int> ends;
                    for (int e = 0; e < g.edge_count(); ++e)
                        if ((colors[e] - 1) % delta == r) {
                            matching = matching && ends.insert(g.edge(e).u).second;
                            matching = matching && ends.insert(g.edge(e).v).second;
                        }
                }
                ASSERT_EQ(is_harmonic(g, {t, colors}), matching);
            });
    }
}
