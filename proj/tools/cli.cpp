#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "intspec/analysis.hpp"
#include "intspec/constructions.hpp"
#include "intspec/json_io.hpp"

namespace intspec::cli {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct BudgetFlags {
    std::optional<std::uint64_t> nodes;
    std::optional<double> seconds;
    std::optional<unsigned> workers;
    std::string symmetry = "reversal";
    std::string format = "human";
};

const std::map<std::string, Format> formats{
    {"human", Format::Human}, {"json", Format::Json}, {"csv", Format::Csv}, {"dot", Format::Dot}};

const std::map<std::string, Symmetry> symmetries{
    {"none", Symmetry::None}, {"reversal", Symmetry::Reversal}, {"parts", Symmetry::ReversalAndPartPermutations}};

int parse_positive(const std::string& text, const std::string& what)
{
    std::size_t used = 0;
    int value = 0;
    try {
        value = std::stoi(text, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != text.size() || used == 0)
        throw UsageError("malformed " + what + " \"" + text + "\"");
    return value;
}

void add_budget(CLI::App* sub, BudgetFlags& flags)
{
    sub->add_option("--nodes", flags.nodes, "Node limit per solve");
    sub->add_option("--seconds", flags.seconds, "Time limit per solve (0 = unbounded)");
    sub->add_option("--workers", flags.workers, "Parallel search workers");
    sub->add_option("--symmetry", flags.symmetry, "none | reversal | parts")
        ->check(CLI::IsMember({"none", "reversal", "parts"}));
}

void add_output(CLI::App* sub, BudgetFlags& flags, RunConfig& config, std::vector<std::string> allowed)
{
    sub->add_option("--format", flags.format, "Output format")->check(CLI::IsMember(std::move(allowed)));
    sub->add_option("--output,-o", config.output_path, "Write the artifact to this file");
}

void apply(const BudgetFlags& flags, RunConfig& config)
{
    if (flags.nodes)
        config.budget.max_nodes = *flags.nodes;
    if (flags.seconds) {
        if (*flags.seconds > 0)
            config.budget.max_time = std::chrono::milliseconds(static_cast<long long>(*flags.seconds * 1000));
        else
            config.budget.max_time.reset();
    }
    if (flags.workers)
        config.budget.parallel_width = std::max(1u, *flags.workers);
    config.symmetry = symmetries.at(flags.symmetry);
    config.format = formats.at(flags.format);
}

std::string status_mark(const SearchOutcome& o)
{
    return std::to_string(o.value) + (o.exact() ? "" : "*");
}

std::string human_table(const MuTable& table)
{
    std::ostringstream out;
    std::optional<int> mu21_t;
    if (!table.rows.empty())
        mu21_t = mu_params(table).mu21.t;
    out << table.graph << '\n' << std::setw(5) << "t" << std::setw(7) << "mu1" << std::setw(7) << "mu2" << '\n';
    bool inexact = false;
    for (const auto& row : table.rows) {
        out << std::setw(5) << row.t << std::setw(7) << status_mark(row.mu1) << std::setw(7) << status_mark(row.mu2);
        if (mu21_t && row.t == *mu21_t)
            out << "   <- mu21";
        out << '\n';
        inexact = inexact || !row.mu1.exact() || !row.mu2.exact();
    }
    if (inexact)
        out << "* budget exhausted: best value found\n";
    return out.str();
}

std::string human_params(const MuParams& p)
{
    std::ostringstream out;
    auto line = [&](const char* name, const MuParam& v) {
        out << name << " = " << v.value << " (t=" << v.t << (v.exact ? "" : ", budget exhausted") << ")\n";
    };
    line("mu11", p.mu11);
    line("mu12", p.mu12);
    line("mu21", p.mu21);
    line("mu22", p.mu22);
    return out.str();
}

std::string human_coloring(const Graph& g, const EdgeColoring& c)
{
    std::ostringstream out;
    const auto s = summarize(g, c);
    out << g.describe() << ", t = " << c.t << ", f = " << s.f << '\n';
    for (int e = 0; e < g.edge_count(); ++e)
        out << "  edge " << e << " (" << g.edge(e).u << "," << g.edge(e).v << ") -> " << c.colors[e] << '\n';
    return out.str();
}

std::string human_report(const VerificationReport& report)
{
    std::ostringstream out;
    for (const auto& c : report.claims) {
        out << std::left << std::setw(8) << to_string(c.status) << std::setw(44) << c.claim << "K_{" << c.m << ','
            << c.n << '}';
        if (c.t)
            out << " t=" << *c.t;
        out << " expected=" << c.expected;
        if (c.got)
            out << " got=" << *c.got;
        out << '\n';
    }
    out << report.count(ClaimStatus::Pass) << " passed, " << report.count(ClaimStatus::Fail) << " failed, "
        << report.count(ClaimStatus::Skipped) << " skipped\n";
    return out.str();
}

class Session {
public:
    Session(RunConfig config, std::ostream& out, std::ostream& err) : config_(std::move(config)), out_(out), err_(err) {}

    void emit(const std::string& text)
    {
        if (config_.output_path.empty()) {
            out_ << text;
            return;
        }
        std::ofstream file(config_.output_path);
        if (!file)
            throw UsageError("cannot write " + config_.output_path);
        file << text;
    }

    void emit(const nlohmann::json& j) { emit(j.dump(2) + "\n"); }

    int finish(bool exact)
    {
        if (!exact && config_.require_exact) {
            err_ << "budget exhausted before an exact answer\n";
            return exit_budget;
        }
        return exit_ok;
    }

    const RunConfig& config() const { return config_; }
    Graph graph() const
    {
        if (config_.graph_spec.empty())
            throw UsageError("--graph is required");
        return parse_graph_spec(config_.graph_spec);
    }
    int t() const
    {
        if (!config_.t)
            throw UsageError("--t is required");
        return *config_.t;
    }

private:
    RunConfig config_;
    std::ostream& out_;
    std::ostream& err_;
};

}  // namespace

Graph parse_graph_spec(const std::string& spec)
{
    const auto colon = spec.find(':');
    if (colon == std::string::npos)
        throw UsageError("graph spec \"" + spec + "\" must look like kmn:M,N, cycle:K, path:K or file:PATH");
    const std::string kind = spec.substr(0, colon);
    const std::string rest = spec.substr(colon + 1);

    try {
        if (kind == "kmn") {
            const auto comma = rest.find(',');
            if (comma == std::string::npos)
                throw UsageError("kmn spec needs two sizes: kmn:M,N");
            return build_complete_bipartite(parse_positive(rest.substr(0, comma), "m"),
                                            parse_positive(rest.substr(comma + 1), "n"));
        }
        if (kind == "cycle")
            return build_cycle(parse_positive(rest, "cycle length"));
        if (kind == "path")
            return build_path(parse_positive(rest, "path length"));
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    if (kind == "file") {
        std::ifstream file(rest);
        if (!file)
            throw UsageError("cannot read graph file " + rest);
        std::stringstream buffer;
        buffer << file.rdbuf();
        try {
            return parse_graph_json(buffer.str());
        } catch (const ParseError& e) {
            throw UsageError(rest + ": " + e.what());
        }
    }
    throw UsageError("unknown graph family \"" + kind + "\"");
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact laboratory for interval spectra of proper edge colorings", "intspec"};
    app.require_subcommand(1);

    RunConfig config;
    BudgetFlags flags;
    std::string objective = "mu21";
    std::string part = "V";
    std::string construction;
    std::string form;
    int m = 0, n = 0, k = -1, q = 0, max_m = 3, max_n = 3;

    auto with_graph = [&](CLI::App* sub, std::vector<std::string> allowed) {
        sub->add_option("--graph,-g", config.graph_spec, "kmn:M,N | cycle:K | path:K | file:PATH")->required();
        sub->add_flag("--require-exact", config.require_exact, "Exit 3 if any solve runs out of budget");
        add_budget(sub, flags);
        add_output(sub, flags, config, std::move(allowed));
    };

    auto* mu = app.add_subcommand("mu", "mu1 and mu2 at one t");
    with_graph(mu, {"human", "json"});
    mu->add_option("--t", config.t, "Number of colors")->required();

    auto* table = app.add_subcommand("mu-table", "mu1 and mu2 for every t");
    with_graph(table, {"human", "json", "csv"});

    auto* params = app.add_subcommand("mu-params", "mu11, mu12, mu21, mu22");
    with_graph(params, {"human", "json"});

    auto* game = app.add_subcommand("game", "Solve the Alice-Bob coloring game");
    with_graph(game, {"human", "json"});
    game->add_option("--objective", objective, "mu21 | mu12")->check(CLI::IsMember({"mu21", "mu12"}));

    auto* wrange = app.add_subcommand("wrange", "Least and greatest t with a coloring interval on a vertex set");
    with_graph(wrange, {"human", "json"});
    wrange->add_option("--part", part, "X | Y | V")->check(CLI::IsMember({"X", "Y", "V"}));

    auto* construct = app.add_subcommand("construct", "Build an explicit coloring of K_{m,n}");
    construct->add_option("kind", construction, "staircase | collapse | block-y")
        ->required()
        ->check(CLI::IsMember({"staircase", "collapse", "block-y"}));
    construct->add_option("--m", m, "|Y|")->required();
    construct->add_option("--n", n, "|X|")->required();
    construct->add_option("--k", k, "Collapse steps (default: all)");
    construct->add_option("--q", q, "Number of Y groups (default: ceil(m/n))");
    add_output(construct, flags, config, {"human", "json", "dot"});

    auto* closed = app.add_subcommand("closed-form", "Closed-form values for K_{m,n}");
    closed->add_option("form", form, "mu21 | w | W | wY")->required()->check(CLI::IsMember({"mu21", "w", "W", "wY"}));
    closed->add_option("--m", m)->required();
    closed->add_option("--n", n)->required();
    add_output(closed, flags, config, {"human", "json"});

    auto* verify = app.add_subcommand("verify", "Check every closed form against the exhaustive solver");
    verify->add_option("--max-m", max_m);
    verify->add_option("--max-n", max_n);
    add_budget(verify, flags);
    add_output(verify, flags, config, {"human", "json"});

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        apply(flags, config);
        Session session(config, out, err);
        const auto fmt = session.config().format;
        const auto& budget = session.config().budget;
        const auto symmetry = session.config().symmetry;

        if (mu->parsed()) {
            const Graph g = session.graph();
            const int t = session.t();
            const auto low = mu1(g, t, budget, symmetry);
            const auto high = mu2(g, t, budget, symmetry);
            if (fmt == Format::Json)
                session.emit(nlohmann::json{{"graph", g.describe()},
                                            {"t", t},
                                            {"mu1", outcome_to_json(low)},
                                            {"mu2", outcome_to_json(high)}});
            else
                session.emit(g.describe() + " t=" + std::to_string(t) + ": mu1 = " + status_mark(low) +
                             ", mu2 = " + status_mark(high) + "\n");
            return session.finish(low.exact() && high.exact());
        }
        if (table->parsed() || params->parsed()) {
            const Graph g = session.graph();
            const auto tab = mu_table(g, budget, symmetry);
            bool exact = true;
            for (const auto& row : tab.rows)
                exact = exact && row.mu1.exact() && row.mu2.exact();
            if (table->parsed()) {
                if (fmt == Format::Json)
                    session.emit(table_to_json(tab));
                else if (fmt == Format::Csv)
                    session.emit(table_to_csv(tab));
                else
                    session.emit(human_table(tab));
            } else {
                const auto p = mu_params(tab);
                if (fmt == Format::Json)
                    session.emit(params_to_json(p));
                else
                    session.emit(human_params(p));
            }
            return session.finish(exact);
        }
        if (game->parsed()) {
            const Graph g = session.graph();
            const auto result =
                game_solve(g, objective == "mu21" ? GameObjective::Mu21 : GameObjective::Mu12, budget, symmetry);
            if (fmt == Format::Json)
                session.emit(game_to_json(result));
            else
                session.emit(g.describe() + " " + objective + ": Alice picks t = " + std::to_string(result.alice_t) +
                             ", value = " + std::to_string(result.value) + (result.exact ? "" : " (budget exhausted)") +
                             "\n");
            return session.finish(result.exact);
        }
        if (wrange->parsed()) {
            const Graph g = session.graph();
            std::vector<int> vertices;
            if (part == "V")
                vertices = g.all_vertices();
            else if (!g.has_parts())
                throw UsageError("--part " + part + " needs a graph with part labels");
            else
                vertices = g.vertices_in(part == "X" ? Part::X : Part::Y);
            const auto range = w_range(g, vertices, budget, symmetry);
            if (fmt == Format::Json) {
                session.emit(wrange_to_json(range));
            } else {
                auto show = [](const std::optional<int>& v) { return v ? std::to_string(*v) : std::string("none"); };
                session.emit(g.describe() + " part " + part + ": w = " + show(range.w) + ", W = " + show(range.W) +
                             (range.contiguous ? ", contiguous" : ", NOT contiguous") +
                             (range.status == SearchStatus::Exact ? "" : " (budget exhausted)") + "\n");
            }
            return session.finish(range.status == SearchStatus::Exact);
        }
        if (construct->parsed()) {
            const Graph g = build_complete_bipartite(m, n);
            if (construction == "collapse") {
                const auto xi = staircase_coloring(m, n);
                const auto trace = collapse_sequence(g, xi, k < 0 ? xi.t - g.max_degree() : k);
                if (fmt == Format::Json) {
                    session.emit(trace_to_json(g, trace));
                } else if (fmt == Format::Dot) {
                    session.emit(to_dot(g, trace.stages.back()));
                } else {
                    std::string text;
                    for (std::size_t j = 0; j < trace.stages.size(); ++j)
                        text += "stage " + std::to_string(j) + ": " + human_coloring(g, trace.stages[j]);
                    session.emit(text);
                }
                return exit_ok;
            }
            const EdgeColoring c =
                construction == "staircase" ? staircase_coloring(m, n) : block_interval_on_Y(m, n, q ? q : (m + n - 1) / n);
            if (fmt == Format::Json)
                session.emit(nlohmann::json{{"graph", graph_to_json(g)}, {"coloring", coloring_to_json(c)}});
            else if (fmt == Format::Dot)
                session.emit(to_dot(g, c));
            else
                session.emit(human_coloring(g, c));
            return exit_ok;
        }
        if (closed->parsed()) {
            int value = 0;
            if (form == "mu21")
                value = mu21_closed_form(m, n);
            else if (form == "w")
                value = w_closed(m, n);
            else if (form == "W")
                value = W_closed(m, n);
            else
                value = wY_closed(m, n);
            if (fmt == Format::Json)
                session.emit(nlohmann::json{{"form", form}, {"m", m}, {"n", n}, {"value", value}});
            else
                session.emit(std::to_string(value) + "\n");
            return exit_ok;
        }
        if (verify->parsed()) {
            const auto report = verify_suite(max_m, max_n, budget);
            if (fmt == Format::Json)
                session.emit(report_to_json(report));
            else
                session.emit(human_report(report));
            return report.passed() ? exit_ok : exit_claim_failed;
        }
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }
    return exit_usage;
}

}  // namespace intspec::cli
