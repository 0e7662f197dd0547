#include "intspec/graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>
#include <stdexcept>

namespace intspec {

namespace {

std::string edge_text(std::size_t index, const Edge& e)
{
    return "edge " + std::to_string(index) + " (" + std::to_string(e.u) + "," +
           std::to_string(e.v) + ")";
}

std::optional<CompleteBipartiteShape> detect_shape(int vertex_count, const std::vector<Edge>& edges,
                                                   const std::vector<Part>& parts)
{
    const auto n = static_cast<int>(std::count(parts.begin(), parts.end(), Part::X));
    const int m = vertex_count - n;
    if (n < 1 || m < 1 || static_cast<long>(edges.size()) != static_cast<long>(n) * m)
        return std::nullopt;
    for (int v = 0; v < vertex_count; ++v)
        if ((v < n) != (parts[v] == Part::X))
            return std::nullopt;

    const CompleteBipartiteShape shape{m, n};
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= m; ++j) {
            const Edge& e = edges[shape.edge_index(i, j)];
            const int x = shape.x_vertex(i);
            const int y = shape.y_vertex(j);
            if (!((e.u == x && e.v == y) || (e.u == y && e.v == x)))
                return std::nullopt;
        }
    return shape;
}

}  // namespace

Graph::Graph(int vertex_count, std::vector<Edge> edges, std::optional<std::vector<Part>> parts)
    : vertex_count_(vertex_count), edges_(std::move(edges)), parts_(std::move(parts))
{
    if (vertex_count_ < 1)
        throw std::invalid_argument("graph must have at least one vertex");
    if (edges_.empty())
        throw std::invalid_argument("graph must have at least one edge");
    if (parts_ && static_cast<int>(parts_->size()) != vertex_count_)
        throw std::invalid_argument("part labels must cover every vertex");

    std::set<std::pair<int, int>> seen;
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        const Edge& e = edges_[i];
        if (e.u < 0 || e.u >= vertex_count_ || e.v < 0 || e.v >= vertex_count_)
            throw std::invalid_argument(edge_text(i, e) + ": vertex index out of range");
        if (e.u == e.v)
            throw std::invalid_argument(edge_text(i, e) + ": loop");
        if (!seen.emplace(std::min(e.u, e.v), std::max(e.u, e.v)).second)
            throw std::invalid_argument(edge_text(i, e) + ": repeated edge");
        if (parts_ && (*parts_)[e.u] == (*parts_)[e.v])
            throw std::invalid_argument(edge_text(i, e) + ": joins two vertices of the same part");
    }

    std::vector<int> degree(vertex_count_, 0);
    for (const Edge& e : edges_) {
        ++degree[e.u];
        ++degree[e.v];
    }
    incidence_offset_.assign(vertex_count_ + 1, 0);
    for (int v = 0; v < vertex_count_; ++v)
        incidence_offset_[v + 1] =
            incidence_offset_[v] + degree[v];
    incidence_.resize(edges_.size() * 2);
    std::vector<int> fill(incidence_offset_.begin(), incidence_offset_.end() - 1);
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        incidence_[fill[edges_[i].u]++] = static_cast<int>(i);
        incidence_[fill[edges_[i].v]++] = static_cast<int>(i);
    }

    max_degree_ = *std::max_element(degree.begin(), degree.end());
    min_degree_ = *std::min_element(degree.begin(), degree.end());

    // connectivity
    std::vector<char> reached(vertex_count_, 0);
    std::queue<int> frontier;
    frontier.push(0);
    reached[0] = 1;
    int reached_count = 1;
    while (!frontier.empty()) {
        const int v = frontier.front();
        frontier.pop();
        for (int e : incident(v)) {
            const int w = edges_[e].other(v);
            if (!reached[w]) {
                reached[w] = 1;
                ++reached_count;
                frontier.push(w);
            }
        }
    }
    if (reached_count != vertex_count_)
        throw std::invalid_argument("graph is not connected");

    if (parts_)
        shape_ = detect_shape(vertex_count_, edges_, *parts_);
}

std::span<const int> Graph::incident(int v) const
{
    if (v < 0 || v >= vertex_count_)
        throw std::out_of_range("vertex index " + std::to_string(v) + " out of range");
    const auto begin = incidence_offset_[v];
    const auto end = incidence_offset_[v + 1];
    return std::span<const int>(incidence_).subspan(begin, end - begin);
}

std::optional<Part> Graph::part(int v) const
{
    if (v < 0 || v >= vertex_count_)
        throw std::out_of_range("vertex index " + std::to_string(v) + " out of range");
    if (!parts_)
        return std::nullopt;
    return (*parts_)[v];
}

std::vector<int> Graph::vertices_in(Part p) const
{
    if (!parts_)
        throw std::logic_error("graph has no part labels");
    std::vector<int> out;
    for (int v = 0; v < vertex_count_; ++v)
        if ((*parts_)[v] == p)
            out.push_back(v);
    return out;
}

std::vector<int> Graph::all_vertices() const
{
    std::vector<int> out(vertex_count_);
    std::iota(out.begin(), out.end(), 0);
    return out;
}

std::string Graph::describe() const
{
    if (shape_)
        return "K_{" + std::to_string(shape_->m) + "," + std::to_string(shape_->n) + "}";
    return "G(V=" + std::to_string(vertex_count_) + ",E=" + std::to_string(edge_count()) + ")";
}

Graph build_complete_bipartite(int m, int n)
{
    if (m < 1 || n < 1)
        throw std::invalid_argument("K_{m,n} requires m >= 1 and n >= 1");
    const CompleteBipartiteShape shape{m, n};
    std::vector<Edge> edges;
    edges.reserve(m * n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= m; ++j)
            edges.push_back({shape.x_vertex(i), shape.y_vertex(j)});
    std::vector<Part> parts(n + m, Part::Y);
    std::fill_n(parts.begin(), n, Part::X);
    return Graph(n + m, std::move(edges), std::move(parts));
}

Graph build_cycle(int k)
{
    if (k < 3)
        throw std::invalid_argument("cycle requires at least 3 vertices");
    std::vector<Edge> edges;
    for (int i = 0; i < k; ++i)
        edges.push_back({i, (i + 1) % k});
    return Graph(k, std::move(edges));
}

Graph build_path(int k)
{
    if (k < 2)
        throw std::invalid_argument("path requires at least 2 vertices");
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < k; ++i)
        edges.push_back({i, i + 1});
    return Graph(k, std::move(edges));
}

Subgraph induced_subgraph(const Graph& g, std::span<const int> vertices)
{
    std::vector<int> local(g.vertex_count(), -1);
    Subgraph out;
    for (int v : vertices) {
        if (v < 0 || v >= g.vertex_count())
            throw std::out_of_range("vertex index " + std::to_string(v) + " out of range");
        if (local[v] >= 0)
            continue;
        local[v] = out.vertex_count();
        out.vertices.push_back(v);
    }
    for (const Edge& e : g.edges()) {
        const int a = local[e.u];
        const int b = local[e.v];
        if (a >= 0 && b >= 0)
            out.edges.push_back({a, b});
    }
    return out;
}

bool is_linear_forest(const Subgraph& g)
{
    const auto n = g.vertex_count();
    std::vector<int> degree(n, 0);
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int v) {
        while (parent[v] != v) {
            parent[v] = parent[parent[v]];
            v = parent[v];
        }
        return v;
    };
    for (const Edge& e : g.edges) {
        if (++degree[e.u] > 2 || ++degree[e.v] > 2)
            return false;
        const int a = find(e.u);
        const int b = find(e.v);
        if (a == b)
            return false;
        parent[a] = b;
    }
    return true;
}

bool is_linear_forest(const Graph& g)
{
    const auto all = g.all_vertices();
    return is_linear_forest(induced_subgraph(g, all));
}

bool is_bipartite(const Graph& g)
{
    std::vector<int> side(g.vertex_count(), -1);
    std::queue<int> frontier;
    side[0] = 0;
    frontier.push(0);
    while (!frontier.empty()) {
        const int v = frontier.front();
        frontier.pop();
        for (int e : g.incident(v)) {
            const int w = g.edge(e).other(v);
            if (side[w] < 0) {
                side[w] = 1 - side[v];
                frontier.push(w);
            } else if (side[w] == side[v]) {
                return false;
            }
        }
    }
    return true;
}

}  // namespace intspec
