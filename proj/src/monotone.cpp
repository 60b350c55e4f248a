#include "sq/monotone.hpp"

#include <string>

namespace sq {

namespace {

void check_product_order(const LinearOrder& order, int a, int n)
{
    if (a < 1 || n < 1)
        throw InvalidParameter("product needs a >= 1 and n >= 1");
    if (order.size() != (a + 1) * n * n)
        throw InvalidParameter("order has " + std::to_string(order.size()) +
                               " vertices, S_a x H_n has " + std::to_string((a + 1) * n * n));
}

int copy_position(const LinearOrder& order, int a, int n, int leaf, VertexId cell)
{
    return order.position(product_id(a, n, {leaf, hex_coord(n, cell)}));
}

} // namespace

LeafFamily consistent_leaf_family(const LinearOrder& order, int a, int n)
{
    check_product_order(order, a, n);
    const int cells = n * n;

    LeafFamily family;
    family.directions.assign(cells, Direction::increasing);
    family.leaves.resize(a);
    for (int i = 0; i < a; ++i)
        family.leaves[i] = i + 1;
    std::sort(family.leaves.begin(), family.leaves.end(), [&](int u, int w) {
        return copy_position(order, a, n, u, 0) < copy_position(order, a, n, w, 0);
    });
    family.step_sizes.push_back(family.leaves.size());

    std::vector<int> positions;
    for (VertexId cell = 1; cell < cells; ++cell) {
        positions.clear();
        for (int leaf : family.leaves)
            positions.push_back(copy_position(order, a, n, leaf, cell));
        const auto run = longest_monotone_subsequence(positions);
        std::vector<int> kept;
        kept.reserve(run.size());
        for (std::size_t idx : run.indices)
            kept.push_back(family.leaves[idx]);
        family.leaves = std::move(kept);
        family.directions[cell] = run.direction;
        family.step_sizes.push_back(family.leaves.size());
    }
    return family;
}

bool leaf_family_consistent(const LeafFamily& family, const LinearOrder& order, int a, int n)
{
    check_product_order(order, a, n);
    if (family.directions.size() != static_cast<std::size_t>(n) * n)
        return false;
    for (VertexId cell = 0; cell < n * n; ++cell) {
        const bool up = family.directions[cell] == Direction::increasing;
        for (std::size_t i = 1; i < family.leaves.size(); ++i) {
            const int prev = copy_position(order, a, n, family.leaves[i - 1], cell);
            const int cur = copy_position(order, a, n, family.leaves[i], cell);
            if (up ? !(prev < cur) : !(prev > cur))
                return false;
        }
    }
    return true;
}

} // namespace sq
