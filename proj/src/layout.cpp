#include "sq/layout.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>

namespace sq {

LinearOrder::LinearOrder(std::vector<VertexId> sequence) : sequence_(std::move(sequence))
{
    position_.assign(sequence_.size(), -1);
    for (std::size_t i = 0; i < sequence_.size(); ++i) {
        const VertexId v = sequence_[i];
        if (v < 0 || v >= static_cast<VertexId>(sequence_.size()) || position_[v] != -1)
            throw InvalidParameter("order is not a permutation (bad entry " + std::to_string(v) +
                                   " at position " + std::to_string(i) + ")");
        position_[v] = static_cast<int>(i);
    }
}

LinearOrder LinearOrder::identity(int size)
{
    std::vector<VertexId> seq(size);
    std::iota(seq.begin(), seq.end(), 0);
    return LinearOrder(std::move(seq));
}

LinearOrder LinearOrder::reversed() const
{
    return LinearOrder(std::vector<VertexId>(sequence_.rbegin(), sequence_.rend()));
}

namespace {

void check_edge(const LinearOrder& order, const Edge& e)
{
    if (!order.contains(e.u) || !order.contains(e.v) || e.u == e.v)
        throw InvalidParameter("edge " + std::to_string(e.u) + "-" + std::to_string(e.v) +
                               " is not on the ordered vertex set");
}

// Endpoint positions sorted so that first < second.
std::pair<int, int> span_of(const LinearOrder& order, const Edge& e)
{
    int x = order.position(e.u);
    int y = order.position(e.v);
    return x < y ? std::pair{x, y} : std::pair{y, x};
}

bool spans_cross(std::pair<int, int> e, std::pair<int, int> f)
{
    return (e.first < f.first && f.first < e.second && e.second < f.second) ||
           (f.first < e.first && e.first < f.second && f.second < e.second);
}

bool spans_nest(std::pair<int, int> e, std::pair<int, int> f)
{
    return (e.first < f.first && f.second < e.second) ||
           (f.first < e.first && e.second < f.second);
}

} // namespace

bool crosses(const LinearOrder& order, const Edge& e, const Edge& f)
{
    check_edge(order, e);
    check_edge(order, f);
    return spans_cross(span_of(order, e), span_of(order, f));
}

bool nests(const LinearOrder& order, const Edge& e, const Edge& f)
{
    check_edge(order, e);
    check_edge(order, f);
    return spans_nest(span_of(order, e), span_of(order, f));
}

VerifyReport verify_layout(const Graph& g, const Layout& layout)
{
    if (layout.order.size() != g.vertex_count())
        throw InvalidParameter("order covers " + std::to_string(layout.order.size()) +
                               " vertices, graph has " + std::to_string(g.vertex_count()));
    for (const auto& [e, c] : layout.coloring.colors) {
        if (!g.edge_index(e))
            throw InvalidParameter("colouring names a non-edge " + std::to_string(e.u) + "-" +
                                   std::to_string(e.v));
        if (c < 0)
            throw InvalidParameter("negative colour");
    }

    const auto& edges = g.edges();
    std::vector<int> color(edges.size());
    std::vector<std::pair<int, int>> spans(edges.size());
    for (std::size_t i = 0; i < edges.size(); ++i) {
        auto c = layout.coloring.color_of(edges[i]);
        if (!c)
            throw InvalidParameter("colouring is not total: edge " + std::to_string(edges[i].u) +
                                   "-" + std::to_string(edges[i].v) + " uncoloured");
        color[i] = *c;
        spans[i] = span_of(layout.order, edges[i]);
    }

    VerifyReport report;
    const bool stack = layout.kind == LayoutKind::stack;
    for (std::size_t i = 0; i < edges.size(); ++i) {
        for (std::size_t j = i + 1; j < edges.size(); ++j) {
            if (color[i] != color[j])
                continue;
            const bool bad = stack ? spans_cross(spans[i], spans[j]) : spans_nest(spans[i], spans[j]);
            if (bad)
                report.violations.emplace_back(edges[i], edges[j]);
        }
    }
    report.valid = report.violations.empty();
    return report;
}

namespace {

using Mask = std::uint64_t;

// Crossing conflict graph over edge indices, as adjacency bitsets.
std::vector<Mask> crossing_conflicts(const Graph& g, const LinearOrder& order)
{
    const auto& edges = g.edges();
    std::vector<std::pair<int, int>> spans(edges.size());
    for (std::size_t i = 0; i < edges.size(); ++i)
        spans[i] = span_of(order, edges[i]);
    std::vector<Mask> adj(edges.size(), 0);
    for (std::size_t i = 0; i < edges.size(); ++i)
        for (std::size_t j = i + 1; j < edges.size(); ++j)
            if (spans_cross(spans[i], spans[j])) {
                adj[i] |= Mask{1} << j;
                adj[j] |= Mask{1} << i;
            }
    return adj;
}

int greedy_clique(const std::vector<Mask>& adj)
{
    int best = adj.empty() ? 0 : 1;
    for (std::size_t start = 0; start < adj.size(); ++start) {
        Mask candidates = adj[start];
        int size = 1;
        while (candidates) {
            // Grow by the candidate keeping the most candidates alive.
            int pick = -1;
            int pick_score = -1;
            for (Mask rest = candidates; rest; rest &= rest - 1) {
                const int w = std::countr_zero(rest);
                const int score = std::popcount(candidates & adj[w]);
                if (score > pick_score) {
                    pick = w;
                    pick_score = score;
                }
            }
            candidates &= adj[pick];
            ++size;
        }
        best = std::max(best, size);
    }
    return best;
}

// Exact maximum clique by branch and bound, pruning with greedy colour classes.
class CliqueSearch {
public:
    explicit CliqueSearch(const std::vector<Mask>& adj) : adj_(adj) {}

    std::vector<int> run()
    {
        const int m = static_cast<int>(adj_.size());
        if (m > 0) {
            std::vector<int> current;
            expand(m == 64 ? ~Mask{0} : (Mask{1} << m) - 1, current);
        }
        return best_;
    }

private:
    void expand(Mask candidates, std::vector<int>& current)
    {
        std::array<int, 64> verts{};
        std::array<int, 64> bound{};
        int count = 0;
        int color = 0;
        for (Mask left = candidates; left;) {
            ++color;
            for (Mask q = left; q;) {
                const int v = std::countr_zero(q);
                q &= ~adj_[v] & ~(Mask{1} << v);
                left &= ~(Mask{1} << v);
                verts[count] = v;
                bound[count] = color;
                ++count;
            }
        }
        for (int i = count - 1; i >= 0; --i) {
            if (current.size() + bound[i] <= best_.size())
                return;
            const int v = verts[i];
            current.push_back(v);
            const Mask next = candidates & adj_[v];
            if (next)
                expand(next, current);
            else if (current.size() > best_.size())
                best_ = current;
            current.pop_back();
            candidates &= ~(Mask{1} << v);
        }
    }

    const std::vector<Mask>& adj_;
    std::vector<int> best_;
};

// Is the conflict graph k-colourable? DSATUR backtracking with the given
// clique precoloured 0, 1, ..., and a dead end as soon as some uncoloured
// vertex sees all k colours.
class KColoring {
public:
    KColoring(const std::vector<Mask>& adj, int k)
        : adj_(adj), k_(k), color_(adj.size(), -1), counts_(adj.size()), sat_(adj.size(), 0)
    {
        for (auto& c : counts_)
            c.fill(0);
        const int m = static_cast<int>(adj.size());
        uncolored_ = m == 64 ? ~Mask{0} : (Mask{1} << m) - 1;
    }

    std::optional<std::vector<int>> run(const std::vector<int>& clique)
    {
        if (static_cast<int>(clique.size()) > k_)
            return std::nullopt;
        for (std::size_t i = 0; i < clique.size(); ++i)
            assign(clique[i], static_cast<int>(i));
        if (search(static_cast<int>(clique.size())))
            return color_;
        return std::nullopt;
    }

private:
    void assign(int v, int c)
    {
        color_[v] = c;
        uncolored_ &= ~(Mask{1} << v);
        for (Mask rest = adj_[v]; rest; rest &= rest - 1) {
            const int w = std::countr_zero(rest);
            if (counts_[w][c]++ == 0)
                ++sat_[w];
        }
    }

    void unassign(int v)
    {
        const int c = color_[v];
        color_[v] = -1;
        uncolored_ |= Mask{1} << v;
        for (Mask rest = adj_[v]; rest; rest &= rest - 1) {
            const int w = std::countr_zero(rest);
            if (--counts_[w][c] == 0)
                --sat_[w];
        }
    }

    bool search(int used)
    {
        if (uncolored_ == 0)
            return true;
        int v = -1;
        int v_sat = -1;
        int v_deg = -1;
        for (Mask rest = uncolored_; rest; rest &= rest - 1) {
            const int w = std::countr_zero(rest);
            if (sat_[w] >= k_)
                return false;
            const int deg = std::popcount(adj_[w] & uncolored_);
            if (sat_[w] > v_sat || (sat_[w] == v_sat && deg > v_deg)) {
                v = w;
                v_sat = sat_[w];
                v_deg = deg;
            }
        }
        // Colours above `used` are interchangeable, so only the first is tried.
        const int top = std::min(used, k_ - 1);
        for (int c = 0; c <= top; ++c) {
            if (counts_[v][c] != 0)
                continue;
            assign(v, c);
            if (search(std::max(used, c + 1)))
                return true;
            unassign(v);
        }
        return false;
    }

    const std::vector<Mask>& adj_;
    int k_;
    Mask uncolored_ = 0;
    std::vector<int> color_;
    std::vector<std::array<std::uint8_t, 64>> counts_;
    std::vector<int> sat_;
};

OrderColoring to_order_coloring(const Graph& g, const std::vector<int>& color)
{
    OrderColoring out;
    for (std::size_t i = 0; i < color.size(); ++i) {
        out.coloring.colors.emplace(g.edges()[i], color[i]);
        out.k = std::max(out.k, color[i] + 1);
    }
    out.coloring.k = out.k;
    return out;
}

std::optional<OrderColoring> exact_stack_coloring(const Graph& g, const LinearOrder& order,
                                                  int cap, int edge_limit)
{
    if (order.size() != g.vertex_count())
        throw InvalidParameter("order does not cover the graph");
    edge_limit = std::min(edge_limit, 64);
    if (g.edge_count() > edge_limit)
        throw ResourceLimit("stack colouring limited to " + std::to_string(edge_limit) +
                                " edges, graph has " + std::to_string(g.edge_count()),
                            g.edge_count() > 0 ? 1 : 0, g.edge_count());
    if (g.edge_count() == 0)
        return cap > 0 ? std::optional<OrderColoring>(OrderColoring{}) : std::nullopt;

    const auto adj = crossing_conflicts(g, order);
    const auto clique = CliqueSearch(adj).run();
    for (int k = static_cast<int>(clique.size()); k < cap; ++k)
        if (auto color = KColoring(adj, k).run(clique))
            return to_order_coloring(g, *color);
    return std::nullopt;
}

} // namespace

OrderColoring min_stack_colors_for_order(const Graph& g, const LinearOrder& order, int edge_limit)
{
    // Every edge on its own stack always works, so cap = m + 1 cannot fail.
    auto result = exact_stack_coloring(g, order, g.edge_count() + 1, edge_limit);
    return *result;
}

std::optional<OrderColoring> stack_coloring_below(const Graph& g, const LinearOrder& order,
                                                  int cap, int edge_limit)
{
    return exact_stack_coloring(g, order, cap, edge_limit);
}

OrderColoring min_queue_colors_for_order(const Graph& g, const LinearOrder& order)
{
    if (order.size() != g.vertex_count())
        throw InvalidParameter("order does not cover the graph");
    const auto& edges = g.edges();
    const std::size_t m = edges.size();
    std::vector<std::pair<int, int>> spans(m);
    for (std::size_t i = 0; i < m; ++i)
        spans[i] = span_of(order, edges[i]);

    // Anything nested inside e has a strictly shorter span, so processing by
    // span length sees every nested edge before its container.
    std::vector<std::size_t> by_span(m);
    std::iota(by_span.begin(), by_span.end(), 0);
    std::stable_sort(by_span.begin(), by_span.end(), [&](std::size_t x, std::size_t y) {
        return spans[x].second - spans[x].first < spans[y].second - spans[y].first;
    });

    std::vector<int> height(m, 0);
    for (std::size_t xi = 0; xi < m; ++xi) {
        const std::size_t e = by_span[xi];
        int h = 0;
        for (std::size_t yi = 0; yi < xi; ++yi) {
            const std::size_t f = by_span[yi];
            if (spans[e].first < spans[f].first && spans[f].second < spans[e].second)
                h = std::max(h, height[f]);
        }
        height[e] = h + 1;
    }

    OrderColoring out;
    for (std::size_t i = 0; i < m; ++i) {
        out.coloring.colors.emplace(edges[i], height[i] - 1);
        out.k = std::max(out.k, height[i]);
    }
    out.coloring.k = out.k;
    return out;
}

bool is_pairwise_crossing(const LinearOrder& order, std::span<const Edge> edges)
{
    for (std::size_t i = 0; i < edges.size(); ++i)
        for (std::size_t j = i + 1; j < edges.size(); ++j)
            if (!crosses(order, edges[i], edges[j]))
                return false;
    return true;
}

int greedy_conflict_clique(const Graph& g, const LinearOrder& order, LayoutKind kind)
{
    const auto& edges = g.edges();
    if (edges.empty())
        return 0;
    if (kind == LayoutKind::stack && edges.size() <= 64)
        return greedy_clique(crossing_conflicts(g, order));

    // General path: greedy over plain vectors (no 64-edge limit).
    std::vector<std::pair<int, int>> spans(edges.size());
    for (std::size_t i = 0; i < edges.size(); ++i)
        spans[i] = span_of(order, edges[i]);
    auto bad = [&](std::size_t i, std::size_t j) {
        return kind == LayoutKind::stack ? spans_cross(spans[i], spans[j])
                                         : spans_nest(spans[i], spans[j]);
    };
    int best = 1;
    for (std::size_t start = 0; start < edges.size(); ++start) {
        std::vector<std::size_t> clique{start};
        for (std::size_t w = 0; w < edges.size(); ++w) {
            if (w == start)
                continue;
            if (std::all_of(clique.begin(), clique.end(), [&](std::size_t c) { return bad(c, w); }))
                clique.push_back(w);
        }
        best = std::max(best, static_cast<int>(clique.size()));
    }
    return best;
}

} // namespace sq
