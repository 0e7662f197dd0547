#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "intspec/coloring.hpp"
#include "intspec/graph.hpp"

namespace intspec {

// Absent limits are unbounded.
struct SearchBudget {
    std::optional<std::uint64_t> max_nodes;
    std::optional<std::chrono::milliseconds> max_time;
    unsigned parallel_width = 1;

    static SearchBudget unbounded() { return {}; }
    // 10 seconds per solve across all available hardware threads, unless
    // INTSPEC_BUDGET_SECONDS / INTSPEC_BUDGET_NODES / INTSPEC_WORKERS override.
    static SearchBudget defaults();
};

// Which coloring symmetries the enumeration may quotient out.
//   None: every coloring in α(G,t) is visited.
//   Reversal: only one of φ and j ↦ t+1-φ(j) is visited; f is preserved.
//   ReversalAndPartPermutations: additionally permutes the vertices inside
//     each part of K_{m,n}. Only valid for extremum and feasibility queries
//     on graphs with a complete bipartite layout, and for vertex sets that
//     are unions of whole parts.
enum class Symmetry { None, Reversal, ReversalAndPartPermutations };

enum class SearchStatus { Exact, BudgetExhausted };

struct SearchOutcome {
    SearchStatus status = SearchStatus::Exact;
    // Exact optimum, or the best value found when the budget ran out. For
    // feasibility queries: 1 when a witness exists, 0 otherwise. When the
    // budget ran out before any coloring was found, the trivial bound.
    int value = 0;
    std::optional<EdgeColoring> witness;
    std::uint64_t nodes = 0;

    bool exact() const { return status == SearchStatus::Exact; }
};

// One visited coloring. `multiplicity` counts how many members of α(G,t)
// the visit stands for under the active symmetry reduction (1 or 2).
struct ColoringVisit {
    const EdgeColoring& coloring;
    const SpectrumSummary& summary;
    int multiplicity;
};

template <typename Acc>
struct EnumerationResult {
    Acc value;
    SearchStatus status = SearchStatus::Exact;
    std::uint64_t nodes = 0;
};

namespace detail {
// worker index in [0, parallel_width)
using VisitSink = std::function<void(unsigned worker, const ColoringVisit&)>;

struct EnumerationRun {
    SearchStatus status;
    std::uint64_t nodes;
    unsigned workers;
};

EnumerationRun enumerate_raw(const Graph& g, int t, const VisitSink& sink, const SearchBudget& budget,
                             Symmetry symmetry, const std::function<void(unsigned)>& prepare);
}  // namespace detail

// Folds `visit(acc, ColoringVisit)` over α(G,t) (up to `symmetry`). Each
// worker folds into its own copy of `init`; copies are combined with
// `merge(acc, other)` in worker order, so the fold must be associative and
// commutative. Part permutations are rejected here.
template <typename Acc, typename Visit, typename Merge>
EnumerationResult<Acc> enumerate_colorings(const Graph& g, int t, Acc init, Visit visit, Merge merge,
                                           const SearchBudget& budget = {},
                                           Symmetry symmetry = Symmetry::Reversal)
{
    std::vector<Acc> per_worker;
    auto run = detail::enumerate_raw(
        g, t,
        [&](unsigned worker, const ColoringVisit& v) { visit(per_worker[worker], v); },
        budget, symmetry, [&](unsigned workers) { per_worker.assign(workers, init); });
    EnumerationResult<Acc> out{std::move(init), run.status, run.nodes};
    for (auto& acc : per_worker)
        merge(out.value, acc);
    return out;
}

// μ1(G,t) = min f_G over α(G,t), μ2(G,t) = max. Throws std::invalid_argument
// when t lies outside [χ'(G), |E(G)|].
SearchOutcome mu1(const Graph& g, int t, const SearchBudget& budget = {},
                  Symmetry symmetry = Symmetry::Reversal);
SearchOutcome mu2(const Graph& g, int t, const SearchBudget& budget = {},
                  Symmetry symmetry = Symmetry::Reversal);

// Searches α(G,t) for a coloring interval on every vertex of `vertices`.
SearchOutcome feasible_interval_on(const Graph& g, std::span<const int> vertices, int t,
                                   const SearchBudget& budget = {},
                                   Symmetry symmetry = Symmetry::Reversal);

struct FeasibilityRow {
    int t;
    SearchOutcome outcome;
};

struct WRange {
    std::vector<FeasibilityRow> rows;  // t = Δ(G) .. |E(G)|
    std::optional<int> w;              // least feasible t
    std::optional<int> W;              // greatest feasible t
    SearchStatus status = SearchStatus::Exact;
    bool contiguous = true;  // feasible t form exactly [w, W]

    bool has_i_property() const { return w.has_value(); }
};

WRange w_range(const Graph& g, std::span<const int> vertices, const SearchBudget& budget = {},
               Symmetry symmetry = Symmetry::Reversal);

}  // namespace intspec
