#pragma once

#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "sq/graph.hpp"

namespace sq {

/// A strict total order on vertex ids, stored both ways.
class LinearOrder {
public:
    LinearOrder() = default;

    /// sequence must be a permutation of 0..size-1; throws InvalidParameter otherwise.
    explicit LinearOrder(std::vector<VertexId> sequence);

    static LinearOrder identity(int size);

    int size() const { return static_cast<int>(sequence_.size()); }
    const std::vector<VertexId>& sequence() const { return sequence_; }
    int position(VertexId v) const { return position_[v]; }
    VertexId at(int index) const { return sequence_[index]; }
    bool contains(VertexId v) const { return v >= 0 && v < size(); }
    bool before(VertexId x, VertexId y) const { return position_[x] < position_[y]; }

    LinearOrder reversed() const;

    friend bool operator==(const LinearOrder& l, const LinearOrder& r)
    {
        return l.sequence_ == r.sequence_;
    }

private:
    std::vector<VertexId> sequence_;
    std::vector<int> position_;
};

struct EdgeColoring {
    std::map<Edge, int> colors;
    int k = 0;

    std::optional<int> color_of(const Edge& e) const
    {
        auto it = colors.find(e);
        if (it == colors.end())
            return std::nullopt;
        return it->second;
    }

    friend bool operator==(const EdgeColoring&, const EdgeColoring&) = default;
};

enum class LayoutKind { stack, queue };

struct Layout {
    LayoutKind kind = LayoutKind::stack;
    LinearOrder order;
    EdgeColoring coloring;

    friend bool operator==(const Layout&, const Layout&) = default;
};

// Both predicates are strict: edges sharing an endpoint never cross or nest,
// and an edge neither crosses nor nests itself.
bool crosses(const LinearOrder& order, const Edge& e, const Edge& f);
bool nests(const LinearOrder& order, const Edge& e, const Edge& f);

/// Conflict predicate for the given layout kind.
inline bool conflicts(LayoutKind kind, const LinearOrder& order, const Edge& e, const Edge& f)
{
    return kind == LayoutKind::stack ? crosses(order, e, f) : nests(order, e, f);
}

struct VerifyReport {
    bool valid = true;
    /// Every same-coloured conflicting pair, in edge-index order.
    std::vector<std::pair<Edge, Edge>> violations;
};

/// Checks that no two edges of one colour cross (stack) or nest (queue).
/// Throws InvalidParameter if the order or colouring is not total on g, or
/// the colouring names an edge g does not have.
VerifyReport verify_layout(const Graph& g, const Layout& layout);

struct OrderColoring {
    int k = 0;
    EdgeColoring coloring;
};

inline constexpr int default_stack_edge_limit = 64;

/// Fewest stacks for a fixed order: exact chromatic number of the crossing
/// conflict graph. A maximum clique is found and precoloured, then DSATUR
/// backtracking decides k-colourability for k = clique size, clique size + 1,
/// and so on. Throws ResourceLimit when g has
/// more than edge_limit edges (edge_limit is clamped to 64).
OrderColoring min_stack_colors_for_order(const Graph& g, const LinearOrder& order,
                                         int edge_limit = default_stack_edge_limit);

/// Same search, but only reports an optimal colouring if it uses fewer than
/// cap colours. Used by the exact solver to prune against its incumbent.
std::optional<OrderColoring> stack_coloring_below(const Graph& g, const LinearOrder& order,
                                                  int cap,
                                                  int edge_limit = default_stack_edge_limit);

/// Fewest queues for a fixed order. Nesting is a strict partial order on the
/// edges, so the minimum equals the longest chain of pairwise nested edges
/// and colouring each edge by its chain height achieves it.
OrderColoring min_queue_colors_for_order(const Graph& g, const LinearOrder& order);

bool is_pairwise_crossing(const LinearOrder& order, std::span<const Edge> edges);

/// Size of a greedily grown pairwise-conflicting set (a twist for stacks, a
/// rainbow for queues). Always a lower bound on the per-order minimum.
int greedy_conflict_clique(const Graph& g, const LinearOrder& order, LayoutKind kind);

} // namespace sq
