#include "intspec/analysis.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <utility>

#include "intspec/constructions.hpp"

namespace intspec {

namespace {

std::pair<int, int> normalized(int m, int n)
{
    if (m < 1 || n < 1)
        throw std::invalid_argument("m and n must be positive");
    return {std::max(m, n), std::min(m, n)};
}

// First t of the table range. When χ' cannot be decided the range starts at
// Δ and the caller drops the row if it turns out to be empty.
int first_t(const Graph& g, const SearchBudget& budget)
{
    return chromatic_index(g, budget).value_or(g.max_degree());
}

template <typename Solve>
std::vector<std::pair<int, SearchOutcome>> column(const Graph& g, const SearchBudget& budget, Solve solve)
{
    std::vector<std::pair<int, SearchOutcome>> out;
    for (int t = first_t(g, budget); t <= g.edge_count(); ++t) {
        try {
            out.emplace_back(t, solve(t));
        } catch (const std::invalid_argument&) {
            if (t != g.max_degree())
                throw;
        }
    }
    return out;
}

// Extremum over a column, smallest t on ties.
MuParam fold(const std::vector<std::pair<int, const SearchOutcome*>>& entries, bool take_max)
{
    MuParam p;
    p.exact = true;
    bool first = true;
    for (const auto& [t, outcome] : entries) {
        p.exact = p.exact && outcome->exact();
        const bool better = take_max ? outcome->value > p.value : outcome->value < p.value;
        if (first || better) {
            p.value = outcome->value;
            p.t = t;
            first = false;
        }
    }
    return p;
}

ClaimStatus judge(bool exact, bool holds)
{
    if (!exact)
        return ClaimStatus::Skipped;
    return holds ? ClaimStatus::Pass : ClaimStatus::Fail;
}

}  // namespace

MuTable mu_table(const Graph& g, const SearchBudget& budget, Symmetry symmetry)
{
    MuTable table;
    table.graph = g.describe();
    auto mins = column(g, budget, [&](int t) { return mu1(g, t, budget, symmetry); });
    auto maxs = column(g, budget, [&](int t) { return mu2(g, t, budget, symmetry); });
    for (std::size_t i = 0; i < std::min(mins.size(), maxs.size()); ++i)
        table.rows.push_back({mins[i].first, std::move(mins[i].second), std::move(maxs[i].second)});
    return table;
}

MuParams mu_params(const MuTable& table)
{
    if (table.rows.empty())
        throw std::invalid_argument("mu table has no rows");
    std::vector<std::pair<int, const SearchOutcome*>> first, second;
    for (const auto& row : table.rows) {
        first.emplace_back(row.t, &row.mu1);
        second.emplace_back(row.t, &row.mu2);
    }
    return {fold(first, false), fold(first, true), fold(second, false), fold(second, true)};
}

GameResult game_solve(const Graph& g, GameObjective objective, const SearchBudget& budget, Symmetry symmetry)
{
    const bool mu21 = objective == GameObjective::Mu21;
    auto col = column(g, budget, [&](int t) {
        return mu21 ? mu2(g, t, budget, symmetry) : mu1(g, t, budget, symmetry);
    });
    std::vector<std::pair<int, const SearchOutcome*>> entries;
    for (const auto& [t, outcome] : col)
        entries.emplace_back(t, &outcome);
    const MuParam p = fold(entries, !mu21);

    GameResult result;
    result.objective = objective;
    result.alice_t = p.t;
    result.value = p.value;
    result.exact = p.exact;
    for (const auto& [t, outcome] : col)
        if (t == p.t)
            result.bob_witness = outcome.witness;
    return result;
}

int mu21_closed_form(int m, int n)
{
    std::tie(m, n) = normalized(m, n);
    return (n == 1 || (m == 2 && n == 2)) ? m + 1 : m;
}

int w_closed(int m, int n)
{
    std::tie(m, n) = normalized(m, n);
    return m + n - std::gcd(m, n);
}

int W_closed(int m, int n)
{
    std::tie(m, n) = normalized(m, n);
    return m + n - 1;
}

int wY_closed(int m, int n)
{
    std::tie(m, n) = normalized(m, n);
    return n * ((m + n - 1) / n);
}

bool corollary_chain_check(int m, int n)
{
    const auto [hi, lo] = normalized(m, n);
    const long chain[] = {hi, static_cast<long>(lo) * ((hi + lo - 1) / lo), hi + lo - std::gcd(hi, lo),
                          hi + lo - 1, static_cast<long>(hi) * lo};
    return std::is_sorted(std::begin(chain), std::end(chain));
}

int VerificationReport::count(ClaimStatus s) const
{
    return static_cast<int>(std::count_if(claims.begin(), claims.end(),
                                          [s](const ClaimRecord& c) { return c.status == s; }));
}

std::string to_string(ClaimStatus s)
{
    switch (s) {
    case ClaimStatus::Pass:
        return "pass";
    case ClaimStatus::Fail:
        return "fail";
    case ClaimStatus::Skipped:
        return "skipped";
    }
    return {};
}

std::string to_string(GameObjective o)
{
    return o == GameObjective::Mu21 ? "mu21" : "mu12";
}

namespace {

void verify_constructions(int m, int n, const Graph& g, std::vector<ClaimRecord>& out)
{
    const auto xi = staircase_coloring(m, n);
    const auto f0 = summarize(g, xi).f;
    out.push_back({"staircase_f", m, n, xi.t, m + n, f0, judge(true, f0 == m + n)});
    const bool harmonic = is_harmonic(g, xi);
    out.push_back({"staircase_harmonic", m, n, xi.t, 1, harmonic, judge(true, harmonic)});

    const int delta = g.max_degree();
    const auto trace = collapse_sequence(g, xi, xi.t - delta);
    const auto base = summarize(g, trace.stages.front());
    bool stays_harmonic = true;
    bool keeps_interval = true;
    for (std::size_t j = 1; j < trace.stages.size(); ++j) {
        const auto& stage = trace.stages[j];
        const auto s = summarize(g, stage);
        if (static_cast<int>(j) <= n - 1) {
            // m + n - j holds only for m > n; on K_{n,n} every stage stays
            // interval everywhere. The bound m + 1 holds in both cases.
            if (m > n) {
                const int expected = m + n - static_cast<int>(j);
                out.push_back({"collapse_f", m, n, stage.t, expected, s.f, judge(true, s.f == expected)});
            }
            out.push_back({"collapse_f_at_least_m_plus_1", m, n, stage.t, m + 1, s.f, judge(true, s.f >= m + 1)});
        }
        stays_harmonic = stays_harmonic && is_harmonic(g, stage);
        for (int v = 0; v < g.vertex_count(); ++v)
            if (g.degree(v) == delta && base.interval[v] && !s.interval[v])
                keeps_interval = false;
    }
    out.push_back({"collapse_harmonic", m, n, std::nullopt, 1, stays_harmonic, judge(true, stays_harmonic)});
    out.push_back({"collapse_max_degree_interval", m, n, std::nullopt, 1, keeps_interval,
                   judge(true, keeps_interval)});

    const auto y = g.vertices_in(Part::Y);
    const int q = (m + n - 1) / n;
    const auto block = block_interval_on_Y(m, n, q);
    const bool witness = validate(g, block).ok() && is_interval_on(g, block, y);
    out.push_back({"block_y_witness", m, n, block.t, 1, witness, judge(true, witness)});
}

}  // namespace

VerificationReport verify_suite(int max_m, int max_n, const SearchBudget& budget)
{
    if (max_n < 1 || max_m < max_n)
        throw std::invalid_argument("verify_suite needs 1 <= max_n <= max_m");

    VerificationReport report;
    auto& out = report.claims;
    for (int m = 1; m <= max_m; ++m)
        for (int n = 1; n <= std::min(m, max_n); ++n) {
            const Graph g = build_complete_bipartite(m, n);
            out.push_back({"bound_chain", m, n, std::nullopt, 1, corollary_chain_check(m, n),
                           judge(true, corollary_chain_check(m, n))});
            verify_constructions(m, n, g, out);
            if (m * n > 63) {
                // beyond the solver's color limit: nothing to compare against
                out.push_back({"mu21", m, n, std::nullopt, mu21_closed_form(m, n), std::nullopt,
                               ClaimStatus::Skipped});
                continue;
            }

            // μ2 column, solved blind
            std::vector<std::pair<int, SearchOutcome>> maxs;
            for (int t = m; t <= m * n; ++t)
                maxs.emplace_back(t, mu2(g, t, budget));
            std::vector<std::pair<int, const SearchOutcome*>> entries;
            for (const auto& [t, outcome] : maxs)
                entries.emplace_back(t, &outcome);
            const MuParam mu21 = fold(entries, false);
            const int expected = mu21_closed_form(m, n);
            out.push_back({"mu21", m, n, mu21.t, expected, mu21.value,
                           judge(mu21.exact, mu21.value == expected)});
            out.push_back({"mu21_between_m_and_m_plus_1", m, n, std::nullopt, m, mu21.value,
                           judge(mu21.exact, m <= mu21.value && mu21.value <= m + 1)});

            if ((m >= 3 && n == 2) || n >= 3) {
                const auto& top = maxs.back().second;
                out.push_back({"mu2_at_mn_equals_m", m, n, m * n, m, top.value,
                               judge(top.exact(), top.value == m)});
            }
            if (m >= 3)
                for (const auto& [t, outcome] : maxs)
                    out.push_back({"mu2_at_least_m", m, n, t, m, outcome.value,
                                   judge(outcome.exact(), outcome.value >= m)});

            const auto y = g.vertices_in(Part::Y);
            const auto all = g.all_vertices();
            const auto on_y = w_range(g, y, budget);
            const auto on_v = w_range(g, all, budget);
            const bool y_exact = on_y.status == SearchStatus::Exact;
            const bool v_exact = on_v.status == SearchStatus::Exact;
            out.push_back({"wY", m, n, std::nullopt, wY_closed(m, n), on_y.w,
                           judge(y_exact, on_y.w == wY_closed(m, n))});
            out.push_back({"WY_equals_edge_count", m, n, std::nullopt, m * n, on_y.W,
                           judge(y_exact, on_y.W == m * n)});
            out.push_back({"feasible_Y_contiguous", m, n, std::nullopt, 1, on_y.contiguous,
                           judge(y_exact, on_y.contiguous)});
            out.push_back({"w", m, n, std::nullopt, w_closed(m, n), on_v.w,
                           judge(v_exact, on_v.w == w_closed(m, n))});
            out.push_back({"W", m, n, std::nullopt, W_closed(m, n), on_v.W,
                           judge(v_exact, on_v.W == W_closed(m, n))});
            out.push_back({"feasible_V_contiguous", m, n, std::nullopt, 1, on_v.contiguous,
                           judge(v_exact, on_v.contiguous)});

            if (g.min_degree() >= 2) {
                auto sweep = enumerate_colorings(
                    g, m * n, 0,
                    [&](int& bad, const ColoringVisit& v) {
                        const auto& vint = v.summary.interval_vertices;
                        if (!vint.empty() && !is_linear_forest(induced_subgraph(g, vint)))
                            ++bad;
                    },
                    [](int& a, int b) { a += b; }, budget);
                out.push_back({"induced_interval_subgraph_is_linear_forest", m, n, m * n, 0, sweep.value,
                               judge(sweep.status == SearchStatus::Exact, sweep.value == 0)});
            }
        }
    return report;
}

}  // namespace intspec
