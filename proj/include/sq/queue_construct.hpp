#pragma once

#include "sq/layout.hpp"

namespace sq {

/// 3-queue layout of H_n: row-major order, horizontal edges in queue 0,
/// vertical in 1, diagonal in 2. All edges in one queue share a span, so the
/// layout is strict as well.
Layout hex_queue_layout(int n);

/// 4-queue layout of S_a x H_n on the block order: H_n cells row-major, each
/// block listing the root first and then leaves 1..a. Star edges go in queue
/// 0 and product edges over horizontal, vertical and diagonal grid edges in
/// queues 1, 2 and 3. Matches the edge set of
/// cartesian_product(make_star(a), make_hex_dual(n)).
Layout product_queue_layout(int a, int n);

/// x <= y < y' <= x' (or symmetric) with the two edges distinct.
bool weakly_nests(const LinearOrder& order, const Edge& e, const Edge& f);

/// No two same-coloured edges weakly nest. Informational only: it is stronger
/// than queue validity.
bool is_strict_queue_layout(const Graph& g, const Layout& layout);

} // namespace sq
