#include "intspec/search.hpp"

#include <cstdlib>
#include <string>
#include <thread>

#include "search_engine.hpp"

namespace intspec {

namespace {

void require_t_in_range(const Graph& g, int t)
{
    if (t < g.max_degree() || t > g.edge_count())
        throw std::invalid_argument("t = " + std::to_string(t) + " outside [" +
                                    std::to_string(g.max_degree()) + ", " +
                                    std::to_string(g.edge_count()) + "]");
    if (t > detail::max_colors)
        throw std::invalid_argument("t = " + std::to_string(t) + " exceeds the solver limit of " +
                                    std::to_string(detail::max_colors) + " colors");
}

std::optional<std::string> env(const char* name)
{
    const char* value = std::getenv(name);
    if (!value || !*value)
        return std::nullopt;
    return std::string(value);
}

SearchOutcome optimize(const Graph& g, int t, detail::Mode mode, const SearchBudget& budget,
                       Symmetry symmetry)
{
    require_t_in_range(g, t);
    detail::EngineRequest request;
    request.mode = mode;
    request.t = t;
    request.symmetry = symmetry;
    request.budget = budget;
    auto run = detail::run_engine(g, request);

    SearchOutcome out;
    out.status = run.status;
    out.nodes = run.nodes;
    if (run.witness) {
        out.value = *run.best;
        out.witness = std::move(run.witness);
    } else if (run.status == SearchStatus::Exact) {
        throw std::invalid_argument("no proper edge " + std::to_string(t) +
                                    "-coloring exists: t is below the chromatic index");
    } else {
        out.value = mode == detail::Mode::Maximize ? g.vertex_count() : 0;
    }
    return out;
}

}  // namespace

SearchBudget SearchBudget::defaults()
{
    SearchBudget b;
    b.max_time = std::chrono::milliseconds(10'000);
    b.parallel_width = std::max(1u, std::thread::hardware_concurrency());
    if (auto s = env("INTSPEC_BUDGET_SECONDS")) {
        const double seconds = std::stod(*s);
        if (seconds > 0)
            b.max_time = std::chrono::milliseconds(static_cast<long long>(seconds * 1000));
        else
            b.max_time.reset();
    }
    if (auto s = env("INTSPEC_BUDGET_NODES"))
        b.max_nodes = std::stoull(*s);
    if (auto s = env("INTSPEC_WORKERS"))
        b.parallel_width = std::max(1u, static_cast<unsigned>(std::stoul(*s)));
    return b;
}

namespace detail {

EnumerationRun enumerate_raw(const Graph& g, int t, const VisitSink& sink, const SearchBudget& budget,
                             Symmetry symmetry, const std::function<void(unsigned)>& prepare)
{
    require_t_in_range(g, t);
    EngineRequest request;
    request.mode = Mode::Enumerate;
    request.t = t;
    request.symmetry = symmetry;
    request.budget = budget;
    request.sink = sink;
    request.prepare = prepare;
    const auto run = run_engine(g, request);
    return {run.status, run.nodes, run.workers};
}

}  // namespace detail

SearchOutcome mu1(const Graph& g, int t, const SearchBudget& budget, Symmetry symmetry)
{
    return optimize(g, t, detail::Mode::Minimize, budget, symmetry);
}

SearchOutcome mu2(const Graph& g, int t, const SearchBudget& budget, Symmetry symmetry)
{
    return optimize(g, t, detail::Mode::Maximize, budget, symmetry);
}

SearchOutcome feasible_interval_on(const Graph& g, std::span<const int> vertices, int t,
                                   const SearchBudget& budget, Symmetry symmetry)
{
    require_t_in_range(g, t);
    detail::EngineRequest request;
    request.mode = detail::Mode::Feasible;
    request.t = t;
    request.symmetry = symmetry;
    request.budget = budget;
    request.required.assign(g.vertex_count(), 0);
    for (int v : vertices) {
        if (v < 0 || v >= g.vertex_count())
            throw std::out_of_range("vertex index " + std::to_string(v) + " out of range");
        request.required[v] = 1;
    }
    auto run = detail::run_engine(g, request);

    SearchOutcome out;
    out.status = run.status;
    out.nodes = run.nodes;
    out.value = run.witness ? 1 : 0;
    out.witness = std::move(run.witness);
    return out;
}

WRange w_range(const Graph& g, std::span<const int> vertices, const SearchBudget& budget, Symmetry symmetry)
{
    WRange out;
    for (int t = g.max_degree(); t <= std::min(g.edge_count(), detail::max_colors); ++t) {
        auto outcome = feasible_interval_on(g, vertices, t, budget, symmetry);
        if (!outcome.exact())
            out.status = SearchStatus::BudgetExhausted;
        if (outcome.value == 1) {
            if (!out.w)
                out.w = t;
            out.W = t;
        }
        out.rows.push_back({t, std::move(outcome)});
    }
    if (g.edge_count() > detail::max_colors)
        out.status = SearchStatus::BudgetExhausted;
    if (out.w)
        for (const auto& row : out.rows)
            if (row.t >= *out.w && row.t <= *out.W && row.outcome.exact() && row.outcome.value == 0)
                out.contiguous = false;
    return out;
}

std::optional<int> chromatic_index(const Graph& g)
{
    return chromatic_index(g, SearchBudget::unbounded());
}

std::optional<int> chromatic_index(const Graph& g, const SearchBudget& budget)
{
    const int delta = g.max_degree();
    if (is_bipartite(g))
        return delta;
    const auto found = feasible_interval_on(g, {}, delta, budget, Symmetry::Reversal);
    if (!found.exact())
        return std::nullopt;
    return found.value == 1 ? delta : delta + 1;
}

}  // namespace intspec
