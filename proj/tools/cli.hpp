#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "intspec/graph.hpp"
#include "intspec/search.hpp"

namespace intspec::cli {

enum class Format { Human, Json, Csv, Dot };

// Exit codes of `run`.
inline constexpr int exit_ok = 0;
inline constexpr int exit_claim_failed = 1;
inline constexpr int exit_usage = 2;
inline constexpr int exit_budget = 3;

struct RunConfig {
    std::string graph_spec;
    std::optional<int> t;
    SearchBudget budget = SearchBudget::defaults();
    Symmetry symmetry = Symmetry::Reversal;
    Format format = Format::Human;
    std::string output_path;  // empty: standard output
    bool require_exact = false;
};

// kmn:M,N | cycle:K | path:K | file:PATH
Graph parse_graph_spec(const std::string& spec);

// args excludes the program name. Diagnostics go to `err`; the artifact goes
// to `out` unless --output names a file.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace intspec::cli
