#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "intspec/analysis.hpp"
#include "intspec/constructions.hpp"
#include "intspec/search.hpp"

namespace intspec {

// Malformed input. The message names the offending field, or the line and
// column for syntax errors.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// { "vertex_count": int, "edges": [[u,v],...], "parts": {"X":[...],"Y":[...]}? }
nlohmann::json graph_to_json(const Graph& g);
Graph graph_from_json(const nlohmann::json& j);
Graph parse_graph_json(std::string_view text);

// { "t": int, "colors": [int,...] } in the graph's edge order
nlohmann::json coloring_to_json(const EdgeColoring& c);
EdgeColoring coloring_from_json(const nlohmann::json& j);
EdgeColoring parse_coloring_json(std::string_view text);

// { "stages": [coloring,...], "moved": [[edge,...],...], "f_values": [int,...] }
nlohmann::json trace_to_json(const Graph& g, const CollapseTrace& trace);

// { "status": "exact"|"budget", "value": int, "witness": coloring?, "nodes": int }
nlohmann::json outcome_to_json(const SearchOutcome& outcome);

nlohmann::json table_to_json(const MuTable& table);
std::string table_to_csv(const MuTable& table);
nlohmann::json params_to_json(const MuParams& params);
nlohmann::json game_to_json(const GameResult& game);
nlohmann::json wrange_to_json(const WRange& range);

// { "claims": [{ "claim", "pair": [m,n], "t"?, "expected", "got"?, "status" }],
//   "passed": int, "failed": int, "skipped": int }
nlohmann::json report_to_json(const VerificationReport& report);

// Edge labels carry colors; interval vertices get interval=true and a
// doubled outline.
std::string to_dot(const Graph& g, const EdgeColoring& c);

}  // namespace intspec
