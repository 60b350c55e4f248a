#pragma once

#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "sq/core.hpp"

namespace sq {

/// Cell [a, b] of the n x n dual hexagonal grid, 1-based.
struct GridCoord {
    int a = 1;
    int b = 1;

    friend constexpr auto operator<=>(const GridCoord&, const GridCoord&) = default;
};

/// Vertex (u, p) of S_a x H_n. star_part 0 is the root t, 1..a are leaves.
struct ProductVertex {
    static constexpr int root = 0;

    int star_part = root;
    GridCoord grid;

    bool is_root() const { return star_part == root; }

    friend constexpr auto operator<=>(const ProductVertex&, const ProductVertex&) = default;
};

using VertexLabel = std::variant<int, GridCoord, ProductVertex>;

enum class GraphKind { plain, hex, star, product };

/// Immutable undirected simple graph on dense ids [0, vertex_count).
///
/// Edges are kept normalized (u < v) and sorted; adjacency lists are sorted.
class Graph {
public:
    Graph() = default;

    /// Validates and builds. Throws InvalidParameter on self-loops, parallel
    /// edges, out-of-range endpoints or non-injective labels. Empty labels
    /// means plain labels equal to the id.
    static Graph from_edges(int vertex_count, std::vector<Edge> edges,
                            std::vector<VertexLabel> labels = {},
                            GraphKind kind = GraphKind::plain, int param_a = 0,
                            int param_n = 0);

    int vertex_count() const { return static_cast<int>(labels_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    const std::vector<Edge>& edges() const { return edges_; }
    std::span<const VertexId> neighbors(VertexId v) const { return adjacency_[v]; }
    int degree(VertexId v) const { return static_cast<int>(adjacency_[v].size()); }
    bool adjacent(VertexId u, VertexId v) const;
    bool contains(VertexId v) const { return v >= 0 && v < vertex_count(); }

    /// Index of e in edges(), if present.
    std::optional<std::size_t> edge_index(const Edge& e) const;

    const VertexLabel& label(VertexId v) const { return labels_[v]; }
    const std::vector<VertexLabel>& labels() const { return labels_; }

    GraphKind kind() const { return kind_; }
    /// Star leaf count for star/product graphs, 0 otherwise.
    int param_a() const { return param_a_; }
    /// Grid side for hex/product graphs, 0 otherwise.
    int param_n() const { return param_n_; }

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    std::vector<VertexLabel> labels_;
    std::vector<Edge> edges_;
    std::vector<std::vector<VertexId>> adjacency_;
    GraphKind kind_ = GraphKind::plain;
    int param_a_ = 0;
    int param_n_ = 0;
};

/// Row-major id of [a, b] in H_n: (b - 1) * n + (a - 1).
constexpr VertexId hex_id(int n, GridCoord p) { return (p.b - 1) * n + (p.a - 1); }
constexpr GridCoord hex_coord(int n, VertexId id) { return {id % n + 1, id / n + 1}; }

/// True iff [a,b] ~ [c,d] in H_n: |a-c|+|b-d| = 1 or a-c = b-d = +-1.
constexpr bool hex_adjacent(GridCoord p, GridCoord q)
{
    const int da = p.a - q.a;
    const int db = p.b - q.b;
    const int manhattan = (da < 0 ? -da : da) + (db < 0 ? -db : db);
    return manhattan == 1 || (da == db && (da == 1 || da == -1));
}

/// Id of (u, p) in S_a x H_n as built by cartesian_product(make_star(a),
/// make_hex_dual(n)): grid_id * (a + 1) + star_part.
constexpr VertexId product_id(int a, int n, ProductVertex v)
{
    return hex_id(n, v.grid) * (a + 1) + v.star_part;
}

Graph make_hex_dual(int n);
Graph make_star(int a);
Graph make_path(int vertices);
Graph make_complete(int vertices);

/// G x H with id(x, y) = y * |V(g)| + x. Star x hex yields ProductVertex labels.
Graph cartesian_product(const Graph& g, const Graph& h);

/// Components of the subgraph induced on restrict, each sorted ascending,
/// listed by smallest member.
std::vector<std::vector<VertexId>> connected_components(const Graph& g,
                                                        std::span<const VertexId> restrict);

/// BFS shortest path inside the induced subgraph on restrict; neighbors are
/// expanded in ascending id order so the result is deterministic.
std::optional<std::vector<VertexId>> shortest_path(const Graph& g, VertexId s, VertexId t,
                                                   std::span<const VertexId> restrict);

/// All ids 0..|V|-1.
std::vector<VertexId> all_vertices(const Graph& g);

} // namespace sq
