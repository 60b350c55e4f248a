#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "sq/hex_path.hpp"
#include "sq/layout.hpp"

namespace sq {

using Rng = std::mt19937_64;

// Draws use raw engine output only, so a seed fixes the output on every
// standard library.

inline std::uint64_t draw_below(Rng& rng, std::uint64_t bound) { return rng() % bound; }

inline LinearOrder random_order(int size, Rng& rng)
{
    std::vector<VertexId> seq(size);
    for (int i = 0; i < size; ++i)
        seq[i] = i;
    for (int i = size - 1; i > 0; --i)
        std::swap(seq[i], seq[draw_below(rng, static_cast<std::uint64_t>(i) + 1)]);
    return LinearOrder(std::move(seq));
}

inline GridColoring random_coloring(int n, Rng& rng)
{
    std::vector<Color> cells(static_cast<std::size_t>(n) * n);
    for (auto& c : cells)
        c = (rng() >> 63) ? Color::blue : Color::red;
    return GridColoring(n, std::move(cells));
}

} // namespace sq
