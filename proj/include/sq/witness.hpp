#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "sq/hex_path.hpp"
#include "sq/monotone.hpp"
#include "sq/order_poset.hpp"

namespace sq {

/// Parameters that make S_a x H_n need s stacks: n = 2s, c = 2s,
/// d = 4 n^2 s + 1, b = R(c, d) bounded by binomials, a = b^m with
/// m = 2^(n^2 - 1). a is kept as (base, exponent) plus its digit count.
struct ScaleParameters {
    int s = 0;
    int n = 0;
    std::int64_t c = 0;
    std::int64_t d = 0;
    BigNat m;
    BigNat b_bound;
    BigNat a_base;
    BigNat a_exponent;
    /// floor(m * log10(b_bound)) + 1
    BigNat a_digits;
};

inline constexpr int max_scale_s = 100;

/// Throws InvalidParameter for s < 1 or s > max_scale_s.
ScaleParameters required_parameters(int s);

enum class WitnessCase { separated_I_sub1, separated_I_sub2, crossing_II };

struct CaseResult {
    WitnessCase branch = WitnessCase::separated_I_sub1;
    std::vector<Edge> edges;
};

/// Separated branch. chain lists family indices with R_1 < ... < R_c. The
/// root copies are relabelled t_1 < ... < t_n by position; if
/// R_floor(c/2) < t_ceil(n/2) each R_i (i <= floor(c/2)) is joined to
/// t_{ceil(n/2)+i-1}, otherwise each t_i is joined to R_{floor(c/2)+i}.
CaseResult case_separated(const PathFamily& fam, std::span<const int> chain);

/// Crossing branch. crossing lists family indices of pairwise crossing
/// paths; R_0 is the first. Keeps one edge per other path crossing R_0, then
/// narrows to the largest group crossing one edge e of R_0 with inside
/// endpoints in one star copy, then outside endpoints in one copy on one side
/// of e. The survivors pairwise cross.
CaseResult case_crossing(const PathFamily& fam, std::span<const int> crossing);

enum class WitnessOutcome { witness, insufficient_scale };

/// Intermediate artefacts, kept for --trace output and assertions.
struct WitnessTrace {
    LeafFamily family;
    GridColoring grid_coloring;
    Color path_color = Color::red;
    /// Hex ids of Q (exactly n cells).
    std::vector<VertexId> q;
    /// Leaves as used for the path family (reversed when Q is blue).
    std::vector<int> oriented_leaves;
    std::vector<std::vector<PairClass>> classification;
    std::vector<int> selected;
};

struct WitnessReport {
    WitnessOutcome outcome = WitnessOutcome::witness;
    WitnessCase branch = WitnessCase::separated_I_sub1;
    /// Pairwise crossing under the input order.
    std::vector<Edge> edges;
    int family_size_b = 0;
    int chain_or_antichain_size = 0;
    int lower_bound = 0;
    int longest_chain = 0;
    int largest_antichain = 0;
    WitnessTrace trace;
};

/// Runs leaf-family extraction, grid colouring by direction, the
/// monochromatic path Q, path-family classification and the case split.
/// A family too small for (c, d) yields outcome insufficient_scale.
WitnessReport extract_crossing_witness(int a, int n, const LinearOrder& order, int c, int d);

} // namespace sq
