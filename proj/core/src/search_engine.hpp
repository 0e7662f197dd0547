#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "intspec/search.hpp"

namespace intspec::detail {

enum class Mode { Enumerate, Maximize, Minimize, Feasible };

struct EngineRequest {
    Mode mode = Mode::Maximize;
    int t = 1;
    std::vector<char> required;  // Feasible: vertices that must end interval
    Symmetry symmetry = Symmetry::Reversal;
    SearchBudget budget;
    VisitSink sink;                          // Enumerate only
    std::function<void(unsigned)> prepare;  // called once with the worker count
};

struct EngineResult {
    SearchStatus status = SearchStatus::Exact;
    std::optional<int> best;  // f of the witness (Maximize/Minimize)
    std::optional<EdgeColoring> witness;
    std::uint64_t nodes = 0;
    unsigned workers = 1;
};

// Largest t the bitset-based engine accepts.
inline constexpr int max_colors = 63;

EngineResult run_engine(const Graph& g, const EngineRequest& request);

}  // namespace intspec::detail
