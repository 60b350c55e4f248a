#pragma once

#include <cstdint>
#include <limits>

#include "sq/layout.hpp"

namespace sq {

struct SolveBudget {
    int max_vertices = 9;
    /// Canonical orders to examine before giving up with bounds.
    std::uint64_t max_orders = std::numeric_limits<std::uint64_t>::max();
    /// Advisory only; the solvers never read a clock.
    double time_hint_seconds = 0.0;
};

struct SolveResult {
    /// Best colour count found; exact when `exact` is set.
    int k = 0;
    int lower_bound = 0;
    bool exact = true;
    Layout layout;
    std::uint64_t orders_examined = 0;
};

/// Exact stack number by enumerating vertex orders. Crossing only depends on
/// the circular order, so vertex 0 is pinned first and each circular order is
/// visited once up to reflection (second vertex < last vertex).
///
/// Throws ResourceLimit (with trivial bounds) if g exceeds max_vertices.
/// Running out of max_orders returns the incumbent with exact = false.
SolveResult stack_number(const Graph& g, const SolveBudget& budget = {});

/// Exact queue number. Nesting is only reflection invariant, so orders are
/// enumerated with first vertex < last vertex.
SolveResult queue_number(const Graph& g, const SolveBudget& budget = {});

} // namespace sq
