#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "sq/layout.hpp"

namespace sq {

enum class Direction { increasing, decreasing };

struct MonotoneSubsequence {
    Direction direction = Direction::increasing;
    std::vector<std::size_t> indices;

    std::size_t size() const { return indices.size(); }
};

namespace detail {

// Patience sorting: tails[len-1] holds the index ending the best run of that
// length found so far; pred links rebuild the run. O(len log len).
template <typename T, typename Less>
std::vector<std::size_t> longest_run(std::span<const T> seq, Less less)
{
    std::vector<std::size_t> tails;
    std::vector<std::ptrdiff_t> pred(seq.size(), -1);
    for (std::size_t i = 0; i < seq.size(); ++i) {
        auto slot = std::lower_bound(tails.begin(), tails.end(), i, [&](std::size_t t, std::size_t x) {
            return less(seq[t], seq[x]);
        });
        if (slot != tails.begin())
            pred[i] = static_cast<std::ptrdiff_t>(*(slot - 1));
        if (slot == tails.end())
            tails.push_back(i);
        else
            *slot = i;
    }
    std::vector<std::size_t> run;
    if (tails.empty())
        return run;
    for (auto at = static_cast<std::ptrdiff_t>(tails.back()); at != -1; at = pred[at])
        run.push_back(static_cast<std::size_t>(at));
    std::reverse(run.begin(), run.end());
    return run;
}

} // namespace detail

/// Longest strictly increasing or strictly decreasing subsequence of a
/// sequence of distinct elements, whichever is longer (increasing on ties).
/// For length L the result has at least ceil(sqrt(L)) elements.
template <typename T, typename Less = std::less<T>>
MonotoneSubsequence longest_monotone_subsequence(std::span<const T> seq, Less less = {})
{
    auto up = detail::longest_run(seq, less);
    auto down = detail::longest_run(seq, [&](const T& x, const T& y) { return less(y, x); });
    if (down.size() > up.size())
        return {Direction::decreasing, std::move(down)};
    return {Direction::increasing, std::move(up)};
}

template <typename T, typename Less = std::less<T>>
MonotoneSubsequence longest_monotone_subsequence(const std::vector<T>& seq, Less less = {})
{
    return longest_monotone_subsequence(std::span<const T>(seq), less);
}

/// Leaves (u_1, ..., u_b) of S_a ordered consistently at every grid cell of
/// S_a x H_n: for each p, the positions of (u_i, p) are strictly monotone in
/// directions[p].
struct LeafFamily {
    /// Leaf indices in 1..a, in the order u_1, ..., u_b.
    std::vector<int> leaves;
    /// Indexed by hex_id.
    std::vector<Direction> directions;
    /// Family size after each refinement, starting with a.
    std::vector<std::size_t> step_sizes;

    std::size_t size() const { return leaves.size(); }
};

/// Iterated Erdos-Szekeres extraction. Starts from all leaves sorted by the
/// position of their copy at the first grid cell, then for every further cell
/// (row-major) keeps the longest monotone subsequence of positions there.
/// Each step keeps at least the square root of the previous size.
LeafFamily consistent_leaf_family(const LinearOrder& order, int a, int n);

/// True iff family satisfies its monotonicity claim under order.
bool leaf_family_consistent(const LeafFamily& family, const LinearOrder& order, int a, int n);

} // namespace sq
