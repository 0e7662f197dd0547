#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace intspec {

struct SearchBudget;

enum class Part { X, Y };

struct Edge {
    int u = 0;
    int v = 0;

    int other(int w) const { return w == u ? v : u; }
    bool touches(int w) const { return u == w || v == w; }

    friend bool operator==(const Edge&, const Edge&) = default;
};

// Shape metadata of a complete bipartite graph laid out by
// build_complete_bipartite: X = {x_1..x_n} at indices 0..n-1, Y = {y_1..y_m}
// at n..n+m-1, edge (x_i, y_j) at index (i-1)*m + (j-1).
struct CompleteBipartiteShape {
    int m = 0;  // |Y|
    int n = 0;  // |X|

    int x_vertex(int i) const { return i - 1; }
    int y_vertex(int j) const { return n + j - 1; }
    int edge_index(int i, int j) const { return (i - 1) * m + (j - 1); }
};

// Immutable simple undirected graph. Construction enforces: no loops, no
// multi-edges, connected, at least one edge, and (when part labels are given)
// every edge joins X to Y.
class Graph {
public:
    Graph(int vertex_count, std::vector<Edge> edges,
          std::optional<std::vector<Part>> parts = std::nullopt);

    int vertex_count() const { return vertex_count_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(int e) const { return edges_.at(static_cast<std::size_t>(e)); }

    int degree(int v) const { return static_cast<int>(incident(v).size()); }
    std::span<const int> incident(int v) const;

    int max_degree() const { return max_degree_; }
    int min_degree() const { return min_degree_; }

    bool has_parts() const { return parts_.has_value(); }
    const std::optional<std::vector<Part>>& parts() const { return parts_; }
    std::optional<Part> part(int v) const;
    std::vector<int> vertices_in(Part p) const;
    std::vector<int> all_vertices() const;

    // Present when the vertex/edge layout is exactly the one produced by
    // build_complete_bipartite, whether built directly or parsed from JSON.
    const std::optional<CompleteBipartiteShape>& complete_bipartite_shape() const {
        return shape_;
    }

    std::string describe() const;

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.vertex_count_ == b.vertex_count_ && a.edges_ == b.edges_ &&
               a.parts_ == b.parts_;
    }

private:
    int vertex_count_;
    std::vector<Edge> edges_;
    std::optional<std::vector<Part>> parts_;
    std::vector<int> incidence_;
    std::vector<int> incidence_offset_;
    int max_degree_ = 0;
    int min_degree_ = 0;
    std::optional<CompleteBipartiteShape> shape_;
};

// A possibly disconnected, possibly edgeless graph. `vertices` holds the
// original vertex ids; edges use local indices into `vertices`.
struct Subgraph {
    std::vector<int> vertices;
    std::vector<Edge> edges;

    int vertex_count() const { return static_cast<int>(vertices.size()); }
};

// K_{m,n} with |Y| = m and |X| = n.
Graph build_complete_bipartite(int m, int n);
Graph build_cycle(int k);
Graph build_path(int k);

Subgraph induced_subgraph(const Graph& g, std::span<const int> vertices);

// True iff the graph is acyclic and every vertex has degree at most 2.
bool is_linear_forest(const Subgraph& g);
bool is_linear_forest(const Graph& g);

bool is_bipartite(const Graph& g);

// Exact chromatic index. Bipartite graphs answer Δ directly; otherwise a
// proper Δ-coloring is searched for. nullopt means the budget ran out.
std::optional<int> chromatic_index(const Graph& g);
std::optional<int> chromatic_index(const Graph& g, const SearchBudget& budget);

}  // namespace intspec
