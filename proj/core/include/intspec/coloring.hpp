#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "intspec/graph.hpp"

namespace intspec {

// Colors are 1-based: colors[e] in [1, t] for the edge with index e.
struct EdgeColoring {
    int t = 0;
    std::vector<int> colors;

    friend bool operator==(const EdgeColoring&, const EdgeColoring&) = default;
};

enum class ViolationKind { AdjacentClash, UnusedColor, ColorOutOfRange };

struct Violation {
    ViolationKind kind;
    int edge_a = -1;
    int edge_b = -1;
    int color = 0;

    std::string describe() const;
};

struct ValidationReport {
    std::vector<Violation> violations;

    bool ok() const { return violations.empty(); }
    std::string describe() const;
};

class InvalidColoring : public std::invalid_argument {
public:
    explicit InvalidColoring(ValidationReport report);
    const ValidationReport& report() const { return report_; }

private:
    ValidationReport report_;
};

struct SpectrumSummary {
    std::vector<std::vector<int>> spectra;  // sorted per vertex
    std::vector<bool> interval;
    std::vector<int> interval_vertices;
    int f = 0;
};

// Properness and surjectivity onto [1, t]. Throws std::invalid_argument when
// the color vector length does not match the edge count or t < 1.
ValidationReport validate(const Graph& g, const EdgeColoring& c);

// Sorted colors of the edges incident to x.
std::vector<int> spectrum(const Graph& g, const EdgeColoring& c, int x);

// Values are taken to be distinct. Throws on an empty set.
bool is_interval(std::span<const int> colors);

// Throws InvalidColoring when validate fails.
SpectrumSummary summarize(const Graph& g, const EdgeColoring& c);

bool is_interval_on(const Graph& g, const EdgeColoring& c, std::span<const int> vertices);

std::vector<int> color_class(const Graph& g, const EdgeColoring& c, int color);

// For every residue i mod Δ, the union of the color classes j ≡ i (mod Δ) is
// a matching. Throws std::invalid_argument when χ'(g) ≠ Δ(g) (or cannot be
// decided) and InvalidColoring for an invalid coloring.
bool is_harmonic(const Graph& g, const EdgeColoring& c);

}  // namespace intspec
