#include "sq/queue_construct.hpp"

#include <algorithm>

namespace sq {

namespace {

enum class GridDirection { horizontal = 0, vertical = 1, diagonal = 2 };

GridDirection grid_direction(GridCoord p, GridCoord q)
{
    if (p.b == q.b)
        return GridDirection::horizontal;
    if (p.a == q.a)
        return GridDirection::vertical;
    return GridDirection::diagonal;
}

} // namespace

Layout hex_queue_layout(int n)
{
    const Graph hex = make_hex_dual(n);
    Layout layout;
    layout.kind = LayoutKind::queue;
    layout.order = LinearOrder::identity(hex.vertex_count());
    for (const Edge& e : hex.edges()) {
        const int c = static_cast<int>(grid_direction(hex_coord(n, e.u), hex_coord(n, e.v)));
        layout.coloring.colors.emplace(e, c);
    }
    layout.coloring.k = 3;
    return layout;
}

Layout product_queue_layout(int a, int n)
{
    if (a < 1 || n < 1)
        throw InvalidParameter("product layout needs a >= 1 and n >= 1");
    const Graph hex = make_hex_dual(n);
    const int block = a + 1;

    Layout layout;
    layout.kind = LayoutKind::queue;
    // Product ids are already block-major with the root first in each block.
    layout.order = LinearOrder::identity(block * n * n);
    layout.coloring.k = 4;
    auto add = [&](Edge e, int c) { layout.coloring.colors.emplace(e, c); };
    for (VertexId p = 0; p < n * n; ++p)
        for (int leaf = 1; leaf <= a; ++leaf)
            add(Edge(p * block, p * block + leaf), 0);
    for (const Edge& f : hex.edges()) {
        const int c = 1 + static_cast<int>(grid_direction(hex_coord(n, f.u), hex_coord(n, f.v)));
        for (int u = 0; u < block; ++u)
            add(Edge(f.u * block + u, f.v * block + u), c);
    }
    return layout;
}

bool weakly_nests(const LinearOrder& order, const Edge& e, const Edge& f)
{
    if (e == f)
        return false;
    auto span = [&](const Edge& x) {
        const int p = order.position(x.u);
        const int q = order.position(x.v);
        return std::pair{std::min(p, q), std::max(p, q)};
    };
    const auto [x, x2] = span(e);
    const auto [y, y2] = span(f);
    return (x <= y && y2 <= x2) || (y <= x && x2 <= y2);
}

bool is_strict_queue_layout(const Graph& g, const Layout& layout)
{
    const auto& edges = g.edges();
    std::vector<int> color(edges.size());
    for (std::size_t i = 0; i < edges.size(); ++i) {
        auto c = layout.coloring.color_of(edges[i]);
        if (!c)
            throw InvalidParameter("colouring is not total");
        color[i] = *c;
    }
    for (std::size_t i = 0; i < edges.size(); ++i)
        for (std::size_t j = i + 1; j < edges.size(); ++j)
            if (color[i] == color[j] && weakly_nests(layout.order, edges[i], edges[j]))
                return false;
    return true;
}

} // namespace sq
