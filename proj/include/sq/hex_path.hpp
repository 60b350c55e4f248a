#pragma once

#include <span>
#include <vector>

#include "sq/graph.hpp"

namespace sq {

/// Red/blue colouring of the n^2 cells of H_n, indexed by hex_id.
class GridColoring {
public:
    GridColoring() = default;
    GridColoring(int n, Color fill);
    GridColoring(int n, std::vector<Color> cells);

    int n() const { return n_; }
    Color at(GridCoord p) const { return cells_[hex_id(n_, p)]; }
    Color at(VertexId id) const { return cells_[id]; }
    void set(GridCoord p, Color c) { cells_[hex_id(n_, p)] = c; }
    const std::vector<Color>& cells() const { return cells_; }

    friend bool operator==(const GridColoring&, const GridColoring&) = default;

private:
    int n_ = 0;
    std::vector<Color> cells_;
};

/// One monochromatic component Y_i of the boundary walk and the far boundary
/// D_i that seeds Y_{i+1}. The last step has an empty far boundary.
struct BoundaryStep {
    std::vector<VertexId> component;
    Color color = Color::red;
    std::vector<VertexId> far_boundary;
};

struct MonochromaticPath {
    Color color = Color::red;
    std::vector<VertexId> vertices;
};

/// Neighbours of x that lie in the component of H_n - x containing [n,n].
///
/// hex must be make_hex_dual(n). x must be nonempty, connected and avoid
/// [n,n]; otherwise InvalidParameter. The result is always connected and an
/// InternalInvariant is thrown if it is not; likewise when x meets the left
/// and bottom paths, avoids the far path, and the result does not meet both.
std::vector<VertexId> far_boundary(const Graph& hex, std::span<const VertexId> x);
std::vector<VertexId> far_boundary(int n, std::span<const VertexId> x);

/// Y_1 is the component of [1,1]; Y_{i+1} is the component containing the
/// far boundary of Y_i; stops at the first Y_p touching the top or right path.
std::vector<BoundaryStep> boundary_sequence(const GridColoring& coloring);

/// A monochromatic path on at least n vertices, extracted from the last
/// boundary component: bottom-to-top if it reaches the top path, otherwise
/// left-to-right, between the lexicographically smallest terminals.
MonochromaticPath find_monochromatic_path(const GridColoring& coloring);

} // namespace sq
