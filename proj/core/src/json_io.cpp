#include "intspec/json_io.hpp"

#include <sstream>

namespace intspec {

using nlohmann::json;

namespace {

const json& field(const json& j, const char* name, const std::string& where)
{
    if (!j.is_object())
        throw ParseError(where + ": expected an object");
    const auto it = j.find(name);
    if (it == j.end())
        throw ParseError(where + ": missing field \"" + name + "\"");
    return *it;
}

int as_int(const json& j, const std::string& where)
{
    if (!j.is_number_integer())
        throw ParseError(where + ": expected an integer");
    return j.get<int>();
}

std::vector<int> as_int_list(const json& j, const std::string& where)
{
    if (!j.is_array())
        throw ParseError(where + ": expected an array");
    std::vector<int> out;
    for (std::size_t i = 0; i < j.size(); ++i)
        out.push_back(as_int(j[i], where + "[" + std::to_string(i) + "]"));
    return out;
}

json parse_text(std::string_view text)
{
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(e.what());
    }
}

std::string status_text(SearchStatus s)
{
    return s == SearchStatus::Exact ? "exact" : "budget";
}

json param_json(const MuParam& p)
{
    return {{"value", p.value}, {"t", p.t}, {"exact", p.exact}};
}

}  // namespace

json graph_to_json(const Graph& g)
{
    json edges = json::array();
    for (const Edge& e : g.edges())
        edges.push_back({e.u, e.v});
    json out{{"vertex_count", g.vertex_count()}, {"edges", std::move(edges)}};
    if (g.has_parts())
        out["parts"] = {{"X", g.vertices_in(Part::X)}, {"Y", g.vertices_in(Part::Y)}};
    return out;
}

Graph graph_from_json(const json& j)
{
    const int vertex_count = as_int(field(j, "vertex_count", "graph"), "vertex_count");
    const json& edge_list = field(j, "edges", "graph");
    if (!edge_list.is_array())
        throw ParseError("edges: expected an array");
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < edge_list.size(); ++i) {
        const auto where = "edges[" + std::to_string(i) + "]";
        const auto pair = as_int_list(edge_list[i], where);
        if (pair.size() != 2)
            throw ParseError(where + ": expected a pair of vertex indices");
        edges.push_back({pair[0], pair[1]});
    }

    std::optional<std::vector<Part>> parts;
    if (const auto it = j.find("parts"); it != j.end() && !it->is_null()) {
        if (vertex_count < 1)
            throw ParseError("vertex_count: must be positive");
        std::vector<int> seen(vertex_count, 0);
        parts.emplace(vertex_count, Part::X);
        for (const auto& [name, label] : {std::pair{"X", Part::X}, std::pair{"Y", Part::Y}}) {
            const auto where = std::string("parts.") + name;
            for (int v : as_int_list(field(*it, name, "parts"), where)) {
                if (v < 0 || v >= vertex_count)
                    throw ParseError(where + ": vertex " + std::to_string(v) + " out of range");
                if (seen[v]++)
                    throw ParseError(where + ": vertex " + std::to_string(v) + " listed twice");
                (*parts)[v] = label;
            }
        }
        for (int v = 0; v < vertex_count; ++v)
            if (!seen[v])
                throw ParseError("parts: vertex " + std::to_string(v) + " has no part");
    }

    try {
        return Graph(vertex_count, std::move(edges), std::move(parts));
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("graph: ") + e.what());
    }
}

Graph parse_graph_json(std::string_view text)
{
    return graph_from_json(parse_text(text));
}

json coloring_to_json(const EdgeColoring& c)
{
    return {{"t", c.t}, {"colors", c.colors}};
}

EdgeColoring coloring_from_json(const json& j)
{
    EdgeColoring c;
    c.t = as_int(field(j, "t", "coloring"), "t");
    c.colors = as_int_list(field(j, "colors", "coloring"), "colors");
    if (c.t < 1)
        throw ParseError("t: must be positive");
    return c;
}

EdgeColoring parse_coloring_json(std::string_view text)
{
    return coloring_from_json(parse_text(text));
}

json trace_to_json(const Graph& g, const CollapseTrace& trace)
{
    json stages = json::array();
    json f_values = json::array();
    for (const auto& stage : trace.stages) {
        stages.push_back(coloring_to_json(stage));
        f_values.push_back(summarize(g, stage).f);
    }
    return {{"stages", std::move(stages)}, {"moved", trace.moved}, {"f_values", std::move(f_values)}};
}

json outcome_to_json(const SearchOutcome& outcome)
{
    json out{{"status", status_text(outcome.status)}, {"value", outcome.value}, {"nodes", outcome.nodes}};
    if (outcome.witness)
        out["witness"] = coloring_to_json(*outcome.witness);
    return out;
}

json table_to_json(const MuTable& table)
{
    json rows = json::array();
    for (const auto& row : table.rows)
        rows.push_back({{"t", row.t}, {"mu1", outcome_to_json(row.mu1)}, {"mu2", outcome_to_json(row.mu2)}});
    return {{"graph", table.graph}, {"rows", std::move(rows)}};
}

std::string table_to_csv(const MuTable& table)
{
    std::ostringstream out;
    out << "t,mu1,mu1_status,mu2,mu2_status\n";
    for (const auto& row : table.rows)
        out << row.t << ',' << row.mu1.value << ',' << status_text(row.mu1.status) << ',' << row.mu2.value
            << ',' << status_text(row.mu2.status) << '\n';
    return out.str();
}

json params_to_json(const MuParams& p)
{
    return {{"mu11", param_json(p.mu11)},
            {"mu12", param_json(p.mu12)},
            {"mu21", param_json(p.mu21)},
            {"mu22", param_json(p.mu22)}};
}

json game_to_json(const GameResult& game)
{
    json out{{"objective", to_string(game.objective)},
             {"alice_t", game.alice_t},
             {"value", game.value},
             {"exact", game.exact}};
    if (game.bob_witness)
        out["bob_witness"] = coloring_to_json(*game.bob_witness);
    return out;
}

json wrange_to_json(const WRange& range)
{
    json rows = json::array();
    for (const auto& row : range.rows)
        rows.push_back({{"t", row.t}, {"feasible", outcome_to_json(row.outcome)}});
    json out{{"status", status_text(range.status)}, {"contiguous", range.contiguous}, {"rows", std::move(rows)}};
    out["w"] = range.w ? json(*range.w) : json(nullptr);
    out["W"] = range.W ? json(*range.W) : json(nullptr);
    return out;
}

json report_to_json(const VerificationReport& report)
{
    json claims = json::array();
    for (const auto& c : report.claims) {
        json record{{"claim", c.claim}, {"pair", {c.m, c.n}}, {"expected", c.expected}, {"status", to_string(c.status)}};
        if (c.t)
            record["t"] = *c.t;
        if (c.got)
            record["got"] = *c.got;
        claims.push_back(std::move(record));
    }
    return {{"claims", std::move(claims)},
            {"passed", report.count(ClaimStatus::Pass)},
            {"failed", report.count(ClaimStatus::Fail)},
            {"skipped", report.count(ClaimStatus::Skipped)}};
}

std::string to_dot(const Graph& g, const EdgeColoring& c)
{
    const auto summary = summarize(g, c);
    auto name = [&](int v) -> std::string {
        if (const auto& shape = g.complete_bipartite_shape())
            return v < shape->n ? "x" + std::to_string(v + 1) : "y" + std::to_string(v - shape->n + 1);
        return "v" + std::to_string(v);
    };

    std::ostringstream out;
    out << "graph G {\n";
    for (int v = 0; v < g.vertex_count(); ++v) {
        out << "  " << name(v);
        if (summary.interval[v])
            out << " [interval=true, peripheries=2]";
        out << ";\n";
    }
    for (int e = 0; e < g.edge_count(); ++e)
        out << "  " << name(g.edge(e).u) << " -- " << name(g.edge(e).v) << " [label=\"" << c.colors[e]
            << "\"];\n";
    out << "}\n";
    return out.str();
}

}  // namespace intspec
