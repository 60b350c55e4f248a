#include "sq/exact_solver.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace sq {

namespace {

void check_budget(const Graph& g, const SolveBudget& budget, LayoutKind kind)
{
    if (budget.max_vertices < 1)
        throw InvalidParameter("max_vertices must be >= 1");
    if (g.vertex_count() <= budget.max_vertices)
        return;
    // Upper bound from the identity order; one colour per edge if even that is too big.
    int upper = g.edge_count();
    const auto identity = LinearOrder::identity(g.vertex_count());
    if (kind == LayoutKind::queue)
        upper = min_queue_colors_for_order(g, identity).k;
    else if (g.edge_count() <= default_stack_edge_limit)
        upper = min_stack_colors_for_order(g, identity).k;
    throw ResourceLimit("graph has " + std::to_string(g.vertex_count()) +
                            " vertices, budget allows " + std::to_string(budget.max_vertices),
                        g.edge_count() > 0 ? 1 : 0, upper);
}

SolveResult trivial(const Graph& g, LayoutKind kind)
{
    SolveResult r;
    r.layout.kind = kind;
    r.layout.order = LinearOrder::identity(g.vertex_count());
    for (const Edge& e : g.edges())
        r.layout.coloring.colors.emplace(e, 0);
    r.k = g.edge_count() > 0 ? 1 : 0;
    r.layout.coloring.k = r.k;
    r.lower_bound = r.k;
    return r;
}

template <typename Inner>
SolveResult enumerate(const Graph& g, const SolveBudget& budget, LayoutKind kind, Inner&& inner)
{
    const int n = g.vertex_count();
    const int floor_k = g.edge_count() > 0 ? 1 : 0;
    SolveResult best;
    best.layout.kind = kind;
    best.k = g.edge_count() + 1;
    best.lower_bound = floor_k;

    std::vector<VertexId> seq(n);
    std::iota(seq.begin(), seq.end(), 0);
    // Stacks: position 0 stays pinned to vertex 0; permute the tail.
    const auto first = kind == LayoutKind::stack ? seq.begin() + 1 : seq.begin();
    const int lead = kind == LayoutKind::stack ? 1 : 0;

    bool exhausted = true;
    do {
        if (n - lead >= 2 && seq[lead] > seq[n - 1])
            continue;
        if (best.orders_examined == budget.max_orders) {
            exhausted = false;
            break;
        }
        ++best.orders_examined;
        LinearOrder order(seq);
        if (auto found = inner(order, best.k)) {
            best.k = found->k;
            best.layout.order = std::move(order);
            best.layout.coloring = std::move(found->coloring);
        }
        if (best.k <= floor_k)
            break;
    } while (std::next_permutation(first, seq.end()));

    best.exact = exhausted || best.k <= floor_k;
    if (best.exact)
        best.lower_bound = best.k;
    return best;
}

} // namespace

SolveResult stack_number(const Graph& g, const SolveBudget& budget)
{
    check_budget(g, budget, LayoutKind::stack);
    if (g.edge_count() == 0 || g.vertex_count() <= 3)
        return trivial(g, LayoutKind::stack);
    return enumerate(g, budget, LayoutKind::stack,
                     [&](const LinearOrder& order, int incumbent) -> std::optional<OrderColoring> {
                         // stack_coloring_below already abandons the order when
                         // its greedy twist reaches the incumbent.
                         return stack_coloring_below(g, order, incumbent);
                     });
}

SolveResult queue_number(const Graph& g, const SolveBudget& budget)
{
    check_budget(g, budget, LayoutKind::queue);
    if (g.edge_count() == 0 || g.vertex_count() <= 3)
        return trivial(g, LayoutKind::queue);
    return enumerate(g, budget, LayoutKind::queue,
                     [&](const LinearOrder& order, int incumbent) -> std::optional<OrderColoring> {
                         auto c = min_queue_colors_for_order(g, order);
                         if (c.k >= incumbent)
                             return std::nullopt;
                         return c;
                     });
}

} // namespace sq
