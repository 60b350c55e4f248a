#include "sq/graph.hpp"

#include <algorithm>
#include <deque>
#include <string>

namespace sq {

Graph Graph::from_edges(int vertex_count, std::vector<Edge> edges,
                        std::vector<VertexLabel> labels, GraphKind kind, int param_a,
                        int param_n)
{
    if (vertex_count < 0)
        throw InvalidParameter("negative vertex count");
    if (labels.empty()) {
        labels.reserve(vertex_count);
        for (int v = 0; v < vertex_count; ++v)
            labels.emplace_back(v);
    }
    if (static_cast<int>(labels.size()) != vertex_count)
        throw InvalidParameter("label count does not match vertex count");

    for (const Edge& e : edges) {
        if (e.u < 0 || e.v >= vertex_count)
            throw InvalidParameter("edge endpoint out of range: " + std::to_string(e.u) + "-" +
                                   std::to_string(e.v));
        if (e.u == e.v)
            throw InvalidParameter("self-loop at vertex " + std::to_string(e.u));
    }
    std::sort(edges.begin(), edges.end());
    if (auto dup = std::adjacent_find(edges.begin(), edges.end()); dup != edges.end())
        throw InvalidParameter("parallel edge " + std::to_string(dup->u) + "-" +
                               std::to_string(dup->v));

    {
        std::vector<VertexLabel> sorted = labels;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw InvalidParameter("vertex labels are not injective");
    }

    Graph g;
    g.labels_ = std::move(labels);
    g.edges_ = std::move(edges);
    g.adjacency_.assign(vertex_count, {});
    for (const Edge& e : g.edges_) {
        g.adjacency_[e.u].push_back(e.v);
        g.adjacency_[e.v].push_back(e.u);
    }
    for (auto& nbrs : g.adjacency_)
        std::sort(nbrs.begin(), nbrs.end());
    g.kind_ = kind;
    g.param_a_ = param_a;
    g.param_n_ = param_n;
    return g;
}

bool Graph::adjacent(VertexId u, VertexId v) const
{
    if (!contains(u) || !contains(v))
        return false;
    const auto& nbrs = adjacency_[u];
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::optional<std::size_t> Graph::edge_index(const Edge& e) const
{
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    if (it == edges_.end() || *it != e)
        return std::nullopt;
    return static_cast<std::size_t>(it - edges_.begin());
}

Graph make_hex_dual(int n)
{
    if (n < 1)
        throw InvalidParameter("hex grid side must be >= 1");
    std::vector<VertexLabel> labels;
    labels.reserve(n * n);
    for (VertexId id = 0; id < n * n; ++id)
        labels.emplace_back(hex_coord(n, id));

    // Only the three "forward" neighbours of each cell; the rest are symmetric.
    std::vector<Edge> edges;
    for (int b = 1; b <= n; ++b) {
        for (int a = 1; a <= n; ++a) {
            const VertexId id = hex_id(n, {a, b});
            if (a < n)
                edges.emplace_back(id, hex_id(n, {a + 1, b}));
            if (b < n)
                edges.emplace_back(id, hex_id(n, {a, b + 1}));
            if (a < n && b < n)
                edges.emplace_back(id, hex_id(n, {a + 1, b + 1}));
        }
    }
    return Graph::from_edges(n * n, std::move(edges), std::move(labels), GraphKind::hex, 0, n);
}

Graph make_star(int a)
{
    if (a < 1)
        throw InvalidParameter("star must have at least one leaf");
    std::vector<Edge> edges;
    for (VertexId leaf = 1; leaf <= a; ++leaf)
        edges.emplace_back(0, leaf);
    return Graph::from_edges(a + 1, std::move(edges), {}, GraphKind::star, a, 0);
}

Graph make_path(int vertices)
{
    if (vertices < 1)
        throw InvalidParameter("path needs at least one vertex");
    std::vector<Edge> edges;
    for (VertexId v = 0; v + 1 < vertices; ++v)
        edges.emplace_back(v, v + 1);
    return Graph::from_edges(vertices, std::move(edges));
}

Graph make_complete(int vertices)
{
    if (vertices < 1)
        throw InvalidParameter("complete graph needs at least one vertex");
    std::vector<Edge> edges;
    for (VertexId u = 0; u < vertices; ++u)
        for (VertexId v = u + 1; v < vertices; ++v)
            edges.emplace_back(u, v);
    return Graph::from_edges(vertices, std::move(edges));
}

Graph cartesian_product(const Graph& g, const Graph& h)
{
    if (g.vertex_count() == 0 || h.vertex_count() == 0)
        throw InvalidParameter("cartesian product of an empty graph");
    const int ng = g.vertex_count();
    const int nh = h.vertex_count();
    auto id = [ng](VertexId x, VertexId y) { return y * ng + x; };

    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(ng) * h.edge_count() +
                  static_cast<std::size_t>(nh) * g.edge_count());
    for (VertexId y = 0; y < nh; ++y)
        for (const Edge& e : g.edges())
            edges.emplace_back(id(e.u, y), id(e.v, y));
    for (VertexId x = 0; x < ng; ++x)
        for (const Edge& f : h.edges())
            edges.emplace_back(id(x, f.u), id(x, f.v));

    const bool star_by_hex = g.kind() == GraphKind::star && h.kind() == GraphKind::hex;
    std::vector<VertexLabel> labels;
    if (star_by_hex) {
        labels.reserve(static_cast<std::size_t>(ng) * nh);
        for (VertexId y = 0; y < nh; ++y)
            for (VertexId x = 0; x < ng; ++x)
                labels.emplace_back(ProductVertex{x, std::get<GridCoord>(h.label(y))});
    }
    return Graph::from_edges(ng * nh, std::move(edges), std::move(labels),
                             star_by_hex ? GraphKind::product : GraphKind::plain,
                             star_by_hex ? g.param_a() : 0, star_by_hex ? h.param_n() : 0);
}

namespace {

std::vector<char> membership(const Graph& g, std::span<const VertexId> restrict)
{
    std::vector<char> in(g.vertex_count(), 0);
    for (VertexId v : restrict) {
        if (!g.contains(v))
            throw InvalidParameter("vertex " + std::to_string(v) + " not in graph");
        in[v] = 1;
    }
    return in;
}

} // namespace

std::vector<std::vector<VertexId>> connected_components(const Graph& g,
                                                        std::span<const VertexId> restrict)
{
    std::vector<char> in = membership(g, restrict);
    std::vector<VertexId> roots(restrict.begin(), restrict.end());
    std::sort(roots.begin(), roots.end());

    std::vector<std::vector<VertexId>> components;
    std::vector<char> seen(g.vertex_count(), 0);
    std::vector<VertexId> stack;
    for (VertexId root : roots) {
        if (seen[root])
            continue;
        std::vector<VertexId> comp;
        seen[root] = 1;
        stack.push_back(root);
        while (!stack.empty()) {
            VertexId v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (VertexId w : g.neighbors(v)) {
                if (in[w] && !seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        components.push_back(std::move(comp));
    }
    return components;
}

std::optional<std::vector<VertexId>> shortest_path(const Graph& g, VertexId s, VertexId t,
                                                   std::span<const VertexId> restrict)
{
    std::vector<char> in = membership(g, restrict);
    if (!g.contains(s) || !g.contains(t) || !in[s] || !in[t])
        throw InvalidParameter("path endpoints must lie in the restricted vertex set");

    std::vector<VertexId> parent(g.vertex_count(), -1);
    std::vector<char> seen(g.vertex_count(), 0);
    std::deque<VertexId> queue{s};
    seen[s] = 1;
    while (!queue.empty() && !seen[t]) {
        VertexId v = queue.front();
        queue.pop_front();
        for (VertexId w : g.neighbors(v)) {
            if (in[w] && !seen[w]) {
                seen[w] = 1;
                parent[w] = v;
                queue.push_back(w);
            }
        }
    }
    if (!seen[t])
        return std::nullopt;
    std::vector<VertexId> path;
    for (VertexId v = t; v != -1; v = parent[v])
        path.push_back(v);
    std::reverse(path.begin(), path.end());
    return path;
}

std::vector<VertexId> all_vertices(const Graph& g)
{
    std::vector<VertexId> vs(g.vertex_count());
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        vs[v] = v;
    return vs;
}

} // namespace sq
