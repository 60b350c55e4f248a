#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "sq/exact_solver.hpp"
#include "sq/random.hpp"

using namespace sq;

namespace {

Graph random_tree(int nv, Rng& rng)
{
    std::vector<Edge> edges;
    for (int v = 1; v < nv; ++v)
        edges.emplace_back(static_cast<VertexId>(draw_below(rng, v)), v);
    return Graph::from_edges(nv, edges);
}

void check_layout(const Graph& g, const SolveResult& r, LayoutKind kind)
{
    CHECK(r.layout.kind == kind);
    auto report = verify_layout(g, r.layout);
    CHECK(report.valid);
    std::set<int> used;
    for (const auto& [e, c] : r.layout.coloring.colors)
        used.insert(c);
    CHECK(static_cast<int>(used.size()) <= r.k);
}

} // namespace

TEST_CASE("complete graphs")
{
    for (int n = 3; n <= 7; ++n) {
        auto g = make_complete(n);
        auto s = stack_number(g);
        auto q = queue_number(g);
        CHECK(s.exact);
        CHECK(q.exact);
        // A triangle fits on one page; the formula holds from n = 4.
        CHECK(s.k == (n == 3 ? 1 : (n + 1) / 2));
        CHECK(q.k == n / 2);
        check_layout(g, s, LayoutKind::stack);
        check_layout(g, q, LayoutKind::queue);
    }
}

TEST_CASE("complete graphs against exhaustive search")
{
    for (int n = 3; n <= 5; ++n) {
        auto g = make_complete(n);
        CHECK(stack_number(g).k == oracle::layout_number_exhaustive(g, true));
        CHECK(queue_number(g).k == oracle::layout_number_exhaustive(g, false));
    }
}

TEST_CASE("trees and stars need one colour")
{
    Rng rng(3);
    for (int t = 0; t < 20; ++t) {
        auto tree = random_tree(2 + static_cast<int>(draw_below(rng, 8)), rng);
        auto s = stack_number(tree);
        CHECK(s.k == 1);
        check_layout(tree, s, LayoutKind::stack);

        auto star = make_star(1 + static_cast<int>(draw_below(rng, 8)));
        auto q = queue_number(star);
        CHECK(q.k == 1);
        check_layout(star, q, LayoutKind::queue);
    }
}

TEST_CASE("small graphs against exhaustive search")
{
    Rng rng(21);
    for (int t = 0; t < 40; ++t) {
        const int nv = 4 + static_cast<int>(draw_below(rng, 3));
        std::vector<Edge> edges;
        for (int u = 0; u < nv; ++u)
            for (int v = u + 1; v < nv; ++v)
                if (draw_below(rng, 2))
                    edges.emplace_back(u, v);
        auto g = Graph::from_edges(nv, edges);
        CHECK(stack_number(g).k == oracle::layout_number_exhaustive(g, true));
        CHECK(queue_number(g).k == oracle::layout_number_exhaustive(g, false));
    }
}

TEST_CASE("edge cases")
{
    auto empty = Graph::from_edges(5, {});
    CHECK(stack_number(empty).k == 0);
    CHECK(queue_number(empty).k == 0);
    auto single = Graph::from_edges(1, {});
    CHECK(stack_number(single).k == 0);
    auto k2 = make_complete(2);
    CHECK(stack_number(k2).k == 1);
    CHECK(queue_number(k2).k == 1);
    CHECK(queue_number(make_complete(3)).k == 1);
}

TEST_CASE("hex grid H_3")
{
    auto h = make_hex_dual(3);
    auto q = queue_number(h);
    CHECK(q.exact);
    CHECK(q.k == 2);
    check_layout(h, q, LayoutKind::queue);
    auto s = stack_number(h);
    CHECK(s.exact);
    CHECK(s.k == 2);
    check_layout(h, s, LayoutKind::stack);
}

TEST_CASE("budgets")
{
    auto g = make_complete(10);
    SolveBudget budget;
    try {
        (void)stack_number(g, budget);
        FAIL("expected ResourceLimit");
    } catch (const ResourceLimit& e) {
        CHECK(e.lower_bound() <= 5);
        CHECK(e.upper_bound() >= 5);
    }
    CHECK_THROWS_AS(queue_number(g, budget), ResourceLimit);

    SolveBudget tight;
    tight.max_orders = 3;
    auto r = stack_number(make_complete(7), tight);
    CHECK_FALSE(r.exact);
    CHECK(r.orders_examined <= 3);
    CHECK(r.lower_bound <= 4);
    CHECK(r.k >= 4);
    check_layout(make_complete(7), r, LayoutKind::stack);
}
