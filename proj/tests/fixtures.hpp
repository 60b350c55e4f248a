#pragma once

// Random instances shared by the unit and acceptance tests.

#include <algorithm>
#include <vector>

#include "sq/order_poset.hpp"
#include "sq/random.hpp"

namespace sq::fixture {

/// A grid path of length len in H_n starting at [1,1]: a random monotone
/// staircase (steps right, up or diagonal) while it stays inside the grid.
inline std::vector<VertexId> random_grid_path(int n, int len, Rng& rng)
{
    std::vector<VertexId> q{hex_id(n, {1, 1})};
    GridCoord p{1, 1};
    while (static_cast<int>(q.size()) < len) {
        std::vector<GridCoord> next;
        if (p.a < n)
            next.push_back({p.a + 1, p.b});
        if (p.b < n)
            next.push_back({p.a, p.b + 1});
        if (p.a < n && p.b < n)
            next.push_back({p.a + 1, p.b + 1});
        if (next.empty())
            break;
        p = next[draw_below(rng, next.size())];
        q.push_back(hex_id(n, p));
    }
    return q;
}

/// A path family of b paths along a random path Q of n cells in S_b x H_n,
/// under a random order that is then adjusted so that at every cell of Q the
/// copies of leaves 1..b appear in increasing order.
inline PathFamily random_consistent_family(int b, int n, Rng& rng)
{
    const int nv = (b + 1) * n * n;
    auto order = random_order(nv, rng);
    const auto q = random_grid_path(n, n, rng);
    std::vector<int> pos(nv);
    for (VertexId v = 0; v < nv; ++v)
        pos[v] = order.position(v);
    for (VertexId cell : q) {
        std::vector<int> slots;
        for (int leaf = 1; leaf <= b; ++leaf)
            slots.push_back(pos[product_id(b, n, {leaf, hex_coord(n, cell)})]);
        std::sort(slots.begin(), slots.end());
        for (int leaf = 1; leaf <= b; ++leaf)
            pos[product_id(b, n, {leaf, hex_coord(n, cell)})] = slots[leaf - 1];
    }
    std::vector<VertexId> seq(nv);
    for (VertexId v = 0; v < nv; ++v)
        seq[pos[v]] = v;
    std::vector<int> leaves(b);
    for (int i = 0; i < b; ++i)
        leaves[i] = i + 1;
    return make_path_family(LinearOrder(std::move(seq)), b, n, std::move(leaves), q);
}

/// Separated pairs blue, crossing pairs red.
inline PairColoring separation_coloring(const PathFamily& fam)
{
    PairColoring colors(fam.size(), Color::red);
    const auto m = classification_matrix(fam);
    for (int i = 0; i < fam.size(); ++i)
        for (int j = i + 1; j < fam.size(); ++j)
            if (m[i][j] == PairClass::separated_lt || m[i][j] == PairClass::separated_gt)
                colors.set(i, j, Color::blue);
    return colors;
}

/// Largest monochromatic clique of the given colour, via the clique search.
inline int max_clique(const PairColoring& colors, Color color)
{
    const int b = colors.size();
    int best = b > 0 ? 1 : 0;
    for (int k = 2; k <= b; ++k) {
        const auto found = color == Color::red ? find_monochromatic_clique(colors, k, b + 1)
                                               : find_monochromatic_clique(colors, b + 1, k);
        if (!found || found->color != color)
            break;
        best = k;
    }
    return best;
}

} // namespace sq::fixture
