#include "search_engine.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <limits>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <thread>

namespace intspec::detail {

namespace {

using Mask = std::uint64_t;
using Clock = std::chrono::steady_clock;

Mask bit(int color) { return Mask{1} << color; }

// Width of [min, max] of a nonempty color mask.
int span(Mask m) { return 64 - std::countl_zero(m) - std::countr_zero(m); }

enum class ConstraintKind { GreaterThanOther, LessThanOther, SumAtMostWithOther };

// Checked when the later of the two edges (in branching order) is colored.
struct Constraint {
    ConstraintKind kind;
    int other;  // position of the other edge; may equal the own position for sums
};

struct Problem {
    const Graph& graph;
    Mode mode;
    int t;
    int vertex_count;
    int edge_count;
    std::vector<int> order;  // position -> edge index
    std::vector<int> head;   // position -> endpoint
    std::vector<int> tail;
    std::vector<int> degree;
    std::vector<char> required;
    bool lex_reversal = false;
    int multiplicity = 1;
    std::vector<std::vector<Constraint>> constraints;  // per position
};

std::vector<int> branching_order(const Graph& g)
{
    std::vector<int> order(g.edge_count());
    std::iota(order.begin(), order.end(), 0);
    auto key = [&](int e) {
        const int du = g.degree(g.edge(e).u);
        const int dv = g.degree(g.edge(e).v);
        return std::pair{std::max(du, dv), du + dv};
    };
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return key(a) > key(b); });
    return order;
}

void add_constraint(Problem& p, const std::vector<int>& position, int earlier_edge, int later_edge,
                    bool sum)
{
    // the requested relation is color(earlier_edge) < color(later_edge), or a sum bound
    int a = position[earlier_edge];
    int b = position[later_edge];
    if (sum) {
        p.constraints[std::max(a, b)].push_back({ConstraintKind::SumAtMostWithOther, std::min(a, b)});
        return;
    }
    if (a < b)
        p.constraints[b].push_back({ConstraintKind::GreaterThanOther, a});
    else
        p.constraints[a].push_back({ConstraintKind::LessThanOther, b});
}

void setup_part_permutations(Problem& p, const std::vector<int>& position)
{
    const auto& shape = p.graph.complete_bipartite_shape();
    if (!shape)
        throw std::invalid_argument("part-permutation symmetry needs a complete bipartite layout");
    if (!p.required.empty()) {
        auto uniform = [&](int first, int last) {
            for (int v = first + 1; v < last; ++v)
                if (p.required[v] != p.required[first])
                    return false;
            return true;
        };
        if (!uniform(0, shape->n) || !uniform(shape->n, shape->n + shape->m))
            throw std::invalid_argument("part-permutation symmetry needs a union of whole parts");
    }
    const int m = shape->m;
    const int n = shape->n;
    // row x_1 increasing along y_1..y_m
    for (int j = 1; j < m; ++j)
        add_constraint(p, position, shape->edge_index(1, j), shape->edge_index(1, j + 1), false);
    // column y_1 increasing along x_2..x_n
    for (int i = 2; i < n; ++i)
        add_constraint(p, position, shape->edge_index(i, 1), shape->edge_index(i + 1, 1), false);
    // reversal representative: first + last of row x_1 at most t+1
    add_constraint(p, position, shape->edge_index(1, 1), shape->edge_index(1, m), true);
}

Problem make_problem(const Graph& g, const EngineRequest& r)
{
    Problem p{g, r.mode, r.t, g.vertex_count(), g.edge_count(), branching_order(g), {}, {}, {}, r.required, false, 1, {}};
    p.head.resize(p.edge_count);
    p.tail.resize(p.edge_count);
    std::vector<int> position(p.edge_count);
    for (int pos = 0; pos < p.edge_count; ++pos) {
        p.head[pos] = g.edge(p.order[pos]).u;
        p.tail[pos] = g.edge(p.order[pos]).v;
        position[p.order[pos]] = pos;
    }
    p.degree.resize(p.vertex_count);
    for (int v = 0; v < p.vertex_count; ++v)
        p.degree[v] = g.degree(v);
    p.constraints.resize(p.edge_count);

    switch (r.symmetry) {
    case Symmetry::None:
        break;
    case Symmetry::Reversal:
        // t = 1 is the only case where a coloring is its own reversal
        p.lex_reversal = r.t >= 2;
        p.multiplicity = p.lex_reversal ? 2 : 1;
        break;
    case Symmetry::ReversalAndPartPermutations:
        if (r.mode == Mode::Enumerate)
            throw std::invalid_argument("part-permutation symmetry is not available for enumeration");
        setup_part_permutations(p, position);
        break;
    }
    return p;
}

struct Shared {
    std::atomic<bool> stop{false};
    std::atomic<bool> exhausted{false};
    std::atomic<bool> found{false};
    std::atomic<std::uint64_t> nodes{0};
    std::atomic<int> incumbent{0};
    std::optional<std::uint64_t> max_nodes;
    std::optional<Clock::time_point> deadline;
    std::uint64_t flush_every = 1024;
};

class Worker {
public:
    Worker(const Problem& p, Shared& s, unsigned id, const VisitSink* sink)
        : p_(p), s_(s), id_(id), sink_(sink), color_(p.edge_count, 0), vmask_(p.vertex_count, 0),
          remaining_(p.degree), used_(p.t + 1, 0), unused_(p.t)
    {
    }

    void search_from(int pos) { dfs(pos); }

    void collect(int pos, int depth, std::vector<std::vector<int>>& out)
    {
        if (pos == depth) {
            out.emplace_back(color_.begin(), color_.begin() + depth);
            return;
        }
        for (int c = 1; c <= p_.t; ++c) {
            if (!legal(pos, c))
                continue;
            apply(pos, c);
            if (!prune(pos))
                collect(pos + 1, depth, out);
            undo(pos);
        }
    }

    void replay(const std::vector<int>& prefix)
    {
        for (int pos = 0; pos < static_cast<int>(prefix.size()); ++pos)
            apply(pos, prefix[pos]);
    }

    void rewind(const std::vector<int>& prefix)
    {
        for (int pos = static_cast<int>(prefix.size()) - 1; pos >= 0; --pos)
            undo(pos);
    }

    void finish() { s_.nodes.fetch_add(unflushed_, std::memory_order_relaxed); unflushed_ = 0; }

    bool has_best() const { return has_best_; }
    int best_value() const { return best_value_; }
    const std::vector<int>& best_colors() const { return best_colors_; }

private:
    bool legal(int pos, int c) const
    {
        if ((vmask_[p_.head[pos]] | vmask_[p_.tail[pos]]) & bit(c))
            return false;
        if (p_.lex_reversal && !decided_ && 2 * c > p_.t + 1)
            return false;
        for (const Constraint& k : p_.constraints[pos]) {
            const int other = k.other == pos ? c : color_[k.other];
            switch (k.kind) {
            case ConstraintKind::GreaterThanOther:
                if (c <= other)
                    return false;
                break;
            case ConstraintKind::LessThanOther:
                if (c >= other)
                    return false;
                break;
            case ConstraintKind::SumAtMostWithOther:
                if (c + other > p_.t + 1)
                    return false;
                break;
            }
        }
        return true;
    }

    bool dead(Mask m, int v) const { return m != 0 && span(m) > p_.degree[v]; }

    void touch(int v, int c)
    {
        const Mask before = vmask_[v];
        const Mask after = before | bit(c);
        vmask_[v] = after;
        const bool now_dead = dead(after, v);
        if (now_dead && !dead(before, v)) {
            ++dead_;
            if (!p_.required.empty() && p_.required[v])
                ++required_dead_;
        }
        if (--remaining_[v] == 0 && !now_dead)
            ++done_interval_;
    }

    void untouch(int v, int c)
    {
        const Mask after = vmask_[v];
        const Mask before = after & ~bit(c);
        const bool now_dead = dead(after, v);
        if (remaining_[v]++ == 0 && !now_dead)
            --done_interval_;
        if (now_dead && !dead(before, v)) {
            --dead_;
            if (!p_.required.empty() && p_.required[v])
                --required_dead_;
        }
        vmask_[v] = before;
    }

    void apply(int pos, int c)
    {
        touch(p_.head[pos], c);
        touch(p_.tail[pos], c);
        if (used_[c]++ == 0)
            --unused_;
        color_[pos] = c;
        if (p_.lex_reversal && !decided_ && 2 * c < p_.t + 1) {
            decided_ = true;
            decided_at_ = pos;
        }
    }

    void undo(int pos)
    {
        const int c = color_[pos];
        untouch(p_.tail[pos], c);
        untouch(p_.head[pos], c);
        if (--used_[c] == 0)
            ++unused_;
        color_[pos] = 0;
        if (decided_ && decided_at_ == pos)
            decided_ = false;
    }

    // Called after coloring position `pos`.
    bool prune(int pos) const
    {
        if (unused_ > p_.edge_count - (pos + 1))
            return true;
        switch (p_.mode) {
        case Mode::Feasible:
            return required_dead_ > 0;
        case Mode::Maximize:
            return p_.vertex_count - dead_ <= s_.incumbent.load(std::memory_order_relaxed);
        case Mode::Minimize:
            return done_interval_ >= s_.incumbent.load(std::memory_order_relaxed);
        case Mode::Enumerate:
            return false;
        }
        return false;
    }

    void count_node()
    {
        if (++unflushed_ < s_.flush_every)
            return;
        const auto total = s_.nodes.fetch_add(unflushed_, std::memory_order_relaxed) + unflushed_;
        unflushed_ = 0;
        if ((s_.max_nodes && total >= *s_.max_nodes) || (s_.deadline && Clock::now() >= *s_.deadline)) {
            s_.exhausted.store(true);
            s_.stop.store(true);
        }
    }

    void dfs(int pos)
    {
        count_node();
        if (s_.stop.load(std::memory_order_relaxed))
            return;
        if (pos == p_.edge_count) {
            leaf();
            return;
        }
        for (int c = 1; c <= p_.t; ++c) {
            if (!legal(pos, c))
                continue;
            apply(pos, c);
            if (!prune(pos))
                dfs(pos + 1);
            undo(pos);
            if (s_.stop.load(std::memory_order_relaxed))
                return;
        }
    }

    void record_best(int value)
    {
        has_best_ = true;
        best_value_ = value;
        best_colors_.assign(p_.edge_count, 0);
        for (int pos = 0; pos < p_.edge_count; ++pos)
            best_colors_[p_.order[pos]] = color_[pos];
    }

    void leaf()
    {
        switch (p_.mode) {
        case Mode::Maximize: {
            const int f = done_interval_;
            int current = s_.incumbent.load();
            while (f > current)
                if (s_.incumbent.compare_exchange_weak(current, f)) {
                    record_best(f);
                    break;
                }
            break;
        }
        case Mode::Minimize: {
            const int f = done_interval_;
            int current = s_.incumbent.load();
            while (f < current)
                if (s_.incumbent.compare_exchange_weak(current, f)) {
                    record_best(f);
                    break;
                }
            break;
        }
        case Mode::Feasible:
            if (!s_.found.exchange(true))
                record_best(done_interval_);
            s_.stop.store(true);
            break;
        case Mode::Enumerate:
            visit();
            break;
        }
    }

    void visit()
    {
        coloring_.t = p_.t;
        coloring_.colors.resize(p_.edge_count);
        for (int pos = 0; pos < p_.edge_count; ++pos)
            coloring_.colors[p_.order[pos]] = color_[pos];

        summary_.spectra.resize(p_.vertex_count);
        summary_.interval.assign(p_.vertex_count, false);
        summary_.interval_vertices.clear();
        for (int v = 0; v < p_.vertex_count; ++v) {
            auto& spec = summary_.spectra[v];
            spec.clear();
            for (Mask m = vmask_[v]; m; m &= m - 1)
                spec.push_back(std::countr_zero(m));
            if (!dead(vmask_[v], v)) {
                summary_.interval[v] = true;
                summary_.interval_vertices.push_back(v);
            }
        }
        summary_.f = static_cast<int>(summary_.interval_vertices.size());
        (*sink_)(id_, ColoringVisit{coloring_, summary_, p_.multiplicity});
    }

    const Problem& p_;
    Shared& s_;
    unsigned id_;
    const VisitSink* sink_;

    std::vector<int> color_;  // by position
    std::vector<Mask> vmask_;
    std::vector<int> remaining_;
    std::vector<int> used_;
    int unused_;
    int dead_ = 0;
    int required_dead_ = 0;
    int done_interval_ = 0;
    bool decided_ = false;
    int decided_at_ = -1;
    std::uint64_t unflushed_ = 0;

    bool has_best_ = false;
    int best_value_ = 0;
    std::vector<int> best_colors_;

    EdgeColoring coloring_;
    SpectrumSummary summary_;
};

}  // namespace

EngineResult run_engine(const Graph& g, const EngineRequest& request)
{
    if (request.t < 1 || request.t > max_colors)
        throw std::invalid_argument("t must lie in [1, " + std::to_string(max_colors) + "]");
    if (!request.required.empty() && static_cast<int>(request.required.size()) != g.vertex_count())
        throw std::invalid_argument("required-vertex mask has the wrong size");

    const Problem problem = make_problem(g, request);

    Shared shared;
    shared.max_nodes = request.budget.max_nodes;
    if (request.budget.max_time)
        shared.deadline = Clock::now() + *request.budget.max_time;
    unsigned width = std::max(1u, request.budget.parallel_width);
    if (problem.edge_count < 3)
        width = 1;
    if (shared.max_nodes)
        shared.flush_every = std::clamp<std::uint64_t>(*shared.max_nodes / (4 * width), 1, 1024);
    if (request.mode == Mode::Maximize)
        shared.incumbent = -1;
    else if (request.mode == Mode::Minimize)
        shared.incumbent = problem.vertex_count + 1;

    if (request.prepare)
        request.prepare(width);
    const VisitSink* sink = request.mode == Mode::Enumerate ? &request.sink : nullptr;

    std::vector<Worker> workers;
    workers.reserve(width);
    for (unsigned id = 0; id < width; ++id)
        workers.emplace_back(problem, shared, id, sink);

    if (width == 1) {
        workers[0].search_from(0);
        workers[0].finish();
    } else {
        // Split the top of the tree into independent subproblems.
        std::vector<std::vector<int>> prefixes;
        const int max_depth = std::min(problem.edge_count - 1, 6);
        for (int depth = 1; depth <= max_depth; ++depth) {
            prefixes.clear();
            workers[0].collect(0, depth, prefixes);
            if (prefixes.size() >= 8 * width)
                break;
        }
        const int depth = prefixes.empty() ? 0 : static_cast<int>(prefixes.front().size());

        std::atomic<std::size_t> next{0};
        std::vector<std::thread> threads;
        threads.reserve(width);
        for (unsigned id = 0; id < width; ++id)
            threads.emplace_back([&, id] {
                Worker& w = workers[id];
                for (;;) {
                    const std::size_t index = next.fetch_add(1);
                    if (index >= prefixes.size() || shared.stop.load())
                        break;
                    w.replay(prefixes[index]);
                    w.search_from(depth);
                    w.rewind(prefixes[index]);
                }
                w.finish();
            });
        for (auto& th : threads)
            th.join();
    }

    EngineResult result;
    result.workers = width;
    result.nodes = shared.nodes.load();
    const bool found = shared.found.load();
    result.status = shared.exhausted.load() && !found ? SearchStatus::BudgetExhausted : SearchStatus::Exact;

    const Worker* best = nullptr;
    for (const Worker& w : workers) {
        if (!w.has_best())
            continue;
        const bool better = !best ||
                            (request.mode == Mode::Maximize && w.best_value() > best->best_value()) ||
                            (request.mode == Mode::Minimize && w.best_value() < best->best_value());
        if (better)
            best = &w;
    }
    if (best) {
        result.best = best->best_value();
        result.witness = EdgeColoring{request.t, best->best_colors()};
    }
    return result;
}

}  // namespace intspec::detail
