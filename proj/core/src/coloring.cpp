#include "intspec/coloring.hpp"

#include <algorithm>
#include <sstream>

namespace intspec {

namespace {

void require_matching_length(const Graph& g, const EdgeColoring& c)
{
    if (static_cast<int>(c.colors.size()) != g.edge_count())
        throw std::invalid_argument("coloring has " + std::to_string(c.colors.size()) +
                                    " entries for a graph with " +
                                    std::to_string(g.edge_count()) + " edges");
    if (c.t < 1)
        throw std::invalid_argument("coloring must declare t >= 1");
}

}  // namespace

std::string Violation::describe() const
{
    switch (kind) {
    case ViolationKind::AdjacentClash:
        return "edges " + std::to_string(edge_a) + " and " + std::to_string(edge_b) +
               " share a vertex and color " + std::to_string(color);
    case ViolationKind::UnusedColor:
        return "color " + std::to_string(color) + " is unused";
    case ViolationKind::ColorOutOfRange:
        return "edge " + std::to_string(edge_a) + " has out-of-range color " + std::to_string(color);
    }
    return {};
}

std::string ValidationReport::describe() const
{
    if (ok())
        return "ok";
    std::ostringstream out;
    for (std::size_t i = 0; i < violations.size(); ++i)
        out << (i ? "; " : "") << violations[i].describe();
    return out.str();
}

InvalidColoring::InvalidColoring(ValidationReport report)
    : std::invalid_argument("invalid edge coloring: " + report.describe()), report_(std::move(report))
{
}

ValidationReport validate(const Graph& g, const EdgeColoring& c)
{
    require_matching_length(g, c);
    ValidationReport report;

    std::vector<char> used(c.t + 1, 0);
    for (int e = 0; e < g.edge_count(); ++e) {
        const int color = c.colors[e];
        if (color < 1 || color > c.t)
            report.violations.push_back({ViolationKind::ColorOutOfRange, e, -1, color});
        else
            used[color] = 1;
    }

    // Each clashing pair is reported once, from its shared vertex.
    for (int v = 0; v < g.vertex_count(); ++v) {
        const auto inc = g.incident(v);
        for (std::size_t a = 0; a < inc.size(); ++a)
            for (std::size_t b = a + 1; b < inc.size(); ++b)
                if (c.colors[inc[a]] == c.colors[inc[b]])
                    report.violations.push_back({ViolationKind::AdjacentClash, std::min(inc[a], inc[b]),
                                                 std::max(inc[a], inc[b]), c.colors[inc[a]]});
    }

    for (int color = 1; color <= c.t; ++color)
        if (!used[color])
            report.violations.push_back({ViolationKind::UnusedColor, -1, -1, color});
    return report;
}

std::vector<int> spectrum(const Graph& g, const EdgeColoring& c, int x)
{
    require_matching_length(g, c);
    std::vector<int> out;
    for (int e : g.incident(x))
        out.push_back(c.colors[e]);
    std::sort(out.begin(), out.end());
    return out;
}

bool is_interval(std::span<const int> colors)
{
    if (colors.empty())
        throw std::invalid_argument("is_interval requires a nonempty color set");
    const auto [lo, hi] = std::minmax_element(colors.begin(), colors.end());
    return *hi - *lo + 1 == static_cast<int>(colors.size());
}

SpectrumSummary summarize(const Graph& g, const EdgeColoring& c)
{
    if (auto report = validate(g, c); !report.ok())
        throw InvalidColoring(std::move(report));

    SpectrumSummary s;
    s.spectra.reserve(g.vertex_count());
    s.interval.reserve(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) {
        s.spectra.push_back(spectrum(g, c, v));
        const bool flag = is_interval(s.spectra.back());
        s.interval.push_back(flag);
        if (flag)
            s.interval_vertices.push_back(v);
    }
    s.f = static_cast<int>(s.interval_vertices.size());
    return s;
}

bool is_interval_on(const Graph& g, const EdgeColoring& c, std::span<const int> vertices)
{
    const auto s = summarize(g, c);
    return std::all_of(vertices.begin(), vertices.end(), [&](int v) {
        if (v < 0 || v >= g.vertex_count())
            throw std::out_of_range("vertex index " + std::to_string(v) + " out of range");
        return static_cast<bool>(s.interval[v]);
    });
}

std::vector<int> color_class(const Graph& g, const EdgeColoring& c, int color)
{
    require_matching_length(g, c);
    if (color < 1 || color > c.t)
        throw std::out_of_range("color " + std::to_string(color) + " outside [1," + std::to_string(c.t) + "]");
    std::vector<int> out;
    for (int e = 0; e < g.edge_count(); ++e)
        if (c.colors[e] == color)
            out.push_back(e);
    return out;
}

bool is_harmonic(const Graph& g, const EdgeColoring& c)
{
    const int delta = g.max_degree();
    const auto chi = chromatic_index(g);
    if (!chi)
        throw std::invalid_argument("harmonicity needs chi'(G) = Delta(G), which could not be decided");
    if (*chi != delta)
        throw std::invalid_argument("harmonicity is defined only when chi'(G) = Delta(G)");
    if (auto report = validate(g, c); !report.ok())
        throw InvalidColoring(std::move(report));

    std::vector<char> seen(delta, 0);
    for (int v = 0; v < g.vertex_count(); ++v) {
        std::fill(seen.begin(), seen.end(), 0);
        for (int e : g.incident(v)) {
            const int residue = (c.colors[e] - 1) % delta;
            if (seen[residue])
                return false;
            seen[residue] = 1;
        }
    }
    return true;
}

}  // namespace intspec
