#pragma once

#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "sq/layout.hpp"

namespace sq {

using BigNat = boost::multiprecision::cpp_int;

/// The paths R_i = {u_i} x V(Q) of X = S_b x Q inside S_a x H_n, with the
/// ambient order. paths[i][k] is the id of (u_i, q_k); consecutive entries
/// form the edges of R_i.
struct PathFamily {
    LinearOrder order;
    int a = 0;
    int n = 0;
    std::vector<int> leaves;
    /// Hex ids of q_1, ..., q_len.
    std::vector<VertexId> q;
    std::vector<std::vector<VertexId>> paths;
    /// Ids of the root copies (t, q_k), indexed like q.
    std::vector<VertexId> roots;

    int size() const { return static_cast<int>(paths.size()); }
    int q_len() const { return static_cast<int>(q.size()); }
    std::vector<Edge> path_edges(int i) const;
};

/// Builds the family for leaves u_1..u_b and the grid path q. Throws
/// InvalidParameter if q is not a path of distinct adjacent cells of H_n or a
/// leaf index is outside 1..a.
PathFamily make_path_family(const LinearOrder& order, int a, int n, std::vector<int> leaves,
                            std::vector<VertexId> q);

enum class PairClass { separated_lt, separated_gt, crossing, neither };

/// separated_lt: every vertex of R_i precedes every vertex of R_j.
/// crossing: some edge of R_i crosses some edge of R_j.
/// neither: both fail, which the consistent leaf ordering rules out.
PairClass classify_pair(const PathFamily& fam, int i, int j);

/// Full matrix; diagonal entries are `neither`.
std::vector<std::vector<PairClass>> classification_matrix(const PathFamily& fam);

struct ChainOrAntichain {
    enum class Kind { chain, antichain, none };

    Kind kind = Kind::none;
    /// Family indices: the chain in order R_1 < ... < R_c, or the antichain ascending.
    std::vector<int> members;
    int longest_chain = 0;
    int largest_antichain = 0;
};

/// Pairwise separated paths form a strict partial order; returns a longest
/// chain if it reaches c, else the largest height layer (an antichain, hence
/// pairwise crossing) if it reaches d, else Kind::none with both sizes. A
/// family of (c-1)(d-1)+1 paths never yields none.
///
/// Throws PreconditionViolation if some pair is neither separated nor crossing.
ChainOrAntichain chain_or_antichain(const PathFamily& fam, int c, int d);

/// binomial(r+s-2, r-1), the classical upper bound on R(r, s).
BigNat ramsey_upper_bound(int r, int s);

/// 2-colouring of the edges of K_b.
class PairColoring {
public:
    PairColoring(int b, Color fill) : b_(b), colors_(static_cast<std::size_t>(b) * b, fill) {}

    int size() const { return b_; }
    Color at(int i, int j) const { return colors_[static_cast<std::size_t>(i) * b_ + j]; }
    void set(int i, int j, Color c)
    {
        colors_[static_cast<std::size_t>(i) * b_ + j] = c;
        colors_[static_cast<std::size_t>(j) * b_ + i] = c;
    }

private:
    int b_;
    std::vector<Color> colors_;
};

struct MonochromaticClique {
    Color color = Color::red;
    std::vector<int> vertices;
};

/// A red r-clique or, failing that, a blue s-clique, by exhaustive search.
std::optional<MonochromaticClique> find_monochromatic_clique(const PairColoring& colors, int r,
                                                             int s);

} // namespace sq
