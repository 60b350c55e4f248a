#include "sq/hex_path.hpp"

#include <algorithm>
#include <string>

namespace sq {

GridColoring::GridColoring(int n, Color fill) : n_(n), cells_(static_cast<std::size_t>(n) * n, fill)
{
    if (n < 1)
        throw InvalidParameter("grid colouring needs n >= 1");
}

GridColoring::GridColoring(int n, std::vector<Color> cells) : n_(n), cells_(std::move(cells))
{
    if (n < 1)
        throw InvalidParameter("grid colouring needs n >= 1");
    if (cells_.size() != static_cast<std::size_t>(n) * n)
        throw InvalidParameter("grid colouring must have n^2 cells");
}

namespace {

bool on_left(int, GridCoord p) { return p.a == 1; }
bool on_bottom(int, GridCoord p) { return p.b == 1; }
bool on_right(int n, GridCoord p) { return p.a == n; }
bool on_top(int n, GridCoord p) { return p.b == n; }

template <typename Pred>
bool meets(int n, std::span<const VertexId> set, Pred pred)
{
    return std::any_of(set.begin(), set.end(), [&](VertexId v) { return pred(n, hex_coord(n, v)); });
}

bool meets_far_path(int n, std::span<const VertexId> set)
{
    return meets(n, set, on_right) || meets(n, set, on_top);
}

std::vector<VertexId> complement(const Graph& g, std::span<const VertexId> x)
{
    std::vector<char> in(g.vertex_count(), 0);
    for (VertexId v : x)
        in[v] = 1;
    std::vector<VertexId> rest;
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        if (!in[v])
            rest.push_back(v);
    return rest;
}

std::vector<VertexId> color_class(const GridColoring& coloring, Color c)
{
    std::vector<VertexId> ids;
    for (VertexId v = 0; v < static_cast<VertexId>(coloring.cells().size()); ++v)
        if (coloring.at(v) == c)
            ids.push_back(v);
    return ids;
}

// Monochromatic component of H_n containing v.
std::vector<VertexId> component_of(const Graph& hex, const GridColoring& coloring, VertexId v)
{
    const auto cls = color_class(coloring, coloring.at(v));
    for (auto& comp : connected_components(hex, cls))
        if (std::binary_search(comp.begin(), comp.end(), v))
            return comp;
    throw InternalInvariant("vertex missing from its own colour class");
}

// Lexicographically smallest GridCoord in set satisfying pred.
template <typename Pred>
VertexId smallest_terminal(int n, std::span<const VertexId> set, Pred pred)
{
    VertexId best = -1;
    for (VertexId v : set) {
        const GridCoord p = hex_coord(n, v);
        if (pred(n, p) && (best == -1 || p < hex_coord(n, best)))
            best = v;
    }
    if (best == -1)
        throw InternalInvariant("boundary component misses a required side of the grid");
    return best;
}

} // namespace

std::vector<VertexId> far_boundary(const Graph& hex, std::span<const VertexId> x)
{
    if (hex.kind() != GraphKind::hex)
        throw InvalidParameter("far boundary is defined on the dual hexagonal grid");
    const int n = hex.param_n();
    const VertexId corner = hex_id(n, {n, n});
    if (x.empty())
        throw InvalidParameter("far boundary of an empty set");
    if (std::find(x.begin(), x.end(), corner) != x.end())
        throw InvalidParameter("set contains the far corner [n,n]");
    if (connected_components(hex, x).size() != 1)
        throw InvalidParameter("set is not connected");

    const auto rest = complement(hex, x);
    std::vector<VertexId> far_component;
    for (auto& comp : connected_components(hex, rest))
        if (std::binary_search(comp.begin(), comp.end(), corner))
            far_component = std::move(comp);

    std::vector<char> in_x(hex.vertex_count(), 0);
    for (VertexId v : x)
        in_x[v] = 1;
    std::vector<VertexId> boundary;
    for (VertexId z : far_component) {
        const auto nbrs = hex.neighbors(z);
        if (std::any_of(nbrs.begin(), nbrs.end(), [&](VertexId w) { return in_x[w] != 0; }))
            boundary.push_back(z);
    }

    // The grid is a plane quasi-triangulation, so the boundary is connected.
    if (connected_components(hex, boundary).size() != 1)
        throw InternalInvariant("far boundary is not connected");
    if (meets(n, x, on_left) && meets(n, x, on_bottom) && !meets_far_path(n, x) &&
        !(meets(n, boundary, on_left) && meets(n, boundary, on_bottom)))
        throw InternalInvariant("far boundary lost contact with the left or bottom path");
    return boundary;
}

std::vector<VertexId> far_boundary(int n, std::span<const VertexId> x)
{
    return far_boundary(make_hex_dual(n), x);
}

std::vector<BoundaryStep> boundary_sequence(const GridColoring& coloring)
{
    const int n = coloring.n();
    if (n < 1)
        throw InvalidParameter("grid colouring needs n >= 1");
    if (n == 1)
        return {BoundaryStep{{0}, coloring.at(VertexId{0}), {}}};

    const Graph hex = make_hex_dual(n);
    std::vector<BoundaryStep> steps;
    VertexId seed = hex_id(n, {1, 1});
    for (;;) {
        BoundaryStep step;
        step.color = coloring.at(seed);
        step.component = component_of(hex, coloring, seed);
        if (!steps.empty() && step.color == steps.back().color)
            throw InternalInvariant("boundary walk did not alternate colours");
        if (meets_far_path(n, step.component)) {
            steps.push_back(std::move(step));
            return steps;
        }
        step.far_boundary = far_boundary(hex, step.component);
        // Y_i is a maximal colour class component, so its far boundary is
        // entirely the other colour and (being connected) one component.
        for (VertexId v : step.far_boundary)
            if (coloring.at(v) == step.color)
                throw InternalInvariant("far boundary shares the component colour");
        seed = step.far_boundary.front();
        steps.push_back(std::move(step));
        if (steps.size() > static_cast<std::size_t>(n) * n)
            throw InternalInvariant("boundary walk failed to terminate");
    }
}

MonochromaticPath find_monochromatic_path(const GridColoring& coloring)
{
    const int n = coloring.n();
    if (n == 1)
        return {coloring.at(VertexId{0}), {0}};

    const auto steps = boundary_sequence(coloring);
    const BoundaryStep& last = steps.back();
    const std::span<const VertexId> y = last.component;

    VertexId from = 0;
    VertexId to = 0;
    if (meets(n, y, on_top)) {
        from = smallest_terminal(n, y, on_bottom);
        to = smallest_terminal(n, y, on_top);
    } else {
        from = smallest_terminal(n, y, on_left);
        to = smallest_terminal(n, y, on_right);
    }
    auto path = shortest_path(make_hex_dual(n), from, to, y);
    if (!path)
        throw InternalInvariant("terminals of one component are disconnected");
    // Each edge changes either coordinate by at most one.
    if (static_cast<int>(path->size()) < n)
        throw InternalInvariant("extracted path shorter than n");
    return {last.color, std::move(*path)};
}

} // namespace sq
