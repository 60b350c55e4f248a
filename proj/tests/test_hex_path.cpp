#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "sq/hex_path.hpp"
#include "sq/random.hpp"

using namespace sq;

namespace {

std::vector<VertexId> ids(int n, std::initializer_list<GridCoord> cells)
{
    std::vector<VertexId> out;
    for (const auto& p : cells)
        out.push_back(hex_id(n, p));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<VertexId> sorted(std::vector<VertexId> v)
{
    std::sort(v.begin(), v.end());
    return v;
}

// Checks a path is simple, monochromatic, adjacent step by step and joins
// opposite sides of the grid.
void check_path(const GridColoring& coloring, const MonochromaticPath& path)
{
    const int n = coloring.n();
    REQUIRE(path.vertices.size() >= static_cast<std::size_t>(n));
    std::set<VertexId> seen(path.vertices.begin(), path.vertices.end());
    CHECK(seen.size() == path.vertices.size());
    for (std::size_t i = 0; i < path.vertices.size(); ++i) {
        CHECK(coloring.at(path.vertices[i]) == path.color);
        if (i > 0)
            CHECK(hex_adjacent(hex_coord(n, path.vertices[i - 1]), hex_coord(n, path.vertices[i])));
    }
    const auto first = hex_coord(n, path.vertices.front());
    const auto last = hex_coord(n, path.vertices.back());
    const bool vertical = first.b == 1 && last.b == n;
    const bool horizontal = first.a == 1 && last.a == n;
    CHECK((vertical || horizontal));
}

} // namespace

TEST_CASE("far boundary of a single corner")
{
    auto d = far_boundary(3, std::vector<VertexId>{hex_id(3, {1, 1})});
    CHECK(d == ids(3, {{2, 1}, {1, 2}, {2, 2}}));
}

TEST_CASE("far boundary of a staircase region")
{
    const int n = 6;
    auto x = ids(n, {{1, 1}, {1, 2}, {1, 3}, {2, 1}, {2, 2}, {2, 3}, {2, 4}, {2, 5}, {3, 1},
                     {3, 2}, {3, 3}, {4, 1}, {4, 2}, {4, 3}, {4, 4}, {5, 2}, {5, 3}});
    auto expected = ids(n, {{1, 4}, {1, 5}, {2, 6}, {3, 6}, {3, 5}, {3, 4}, {4, 5}, {5, 5},
                            {5, 4}, {6, 4}, {6, 3}, {6, 2}, {5, 1}});
    CHECK(far_boundary(n, x) == expected);
    CHECK(far_boundary(make_hex_dual(n), x) == expected);
}

TEST_CASE("far boundary rejects bad regions")
{
    CHECK_THROWS_AS(far_boundary(3, std::vector<VertexId>{}), InvalidParameter);
    CHECK_THROWS_AS(far_boundary(3, std::vector<VertexId>{hex_id(3, {3, 3})}), InvalidParameter);
    CHECK_THROWS_AS(far_boundary(3, ids(3, {{1, 1}, {3, 1}})), InvalidParameter);
}

TEST_CASE("far boundary is connected on random connected regions")
{
    Rng rng(4);
    for (int t = 0; t < 500; ++t) {
        const int n = 3 + static_cast<int>(draw_below(rng, 6));
        auto hex = make_hex_dual(n);
        // Grow a region from a random start by random neighbour additions.
        std::set<VertexId> region{static_cast<VertexId>(draw_below(rng, n * n - 1))};
        const int target = 1 + static_cast<int>(draw_below(rng, n * n / 2));
        for (int step = 0; step < 4 * target && static_cast<int>(region.size()) < target; ++step) {
            auto it = region.begin();
            std::advance(it, draw_below(rng, region.size()));
            auto nb = hex.neighbors(*it);
            VertexId w = nb[draw_below(rng, nb.size())];
            if (w != hex_id(n, {n, n}))
                region.insert(w);
        }
        std::vector<VertexId> x(region.begin(), region.end());
        auto d = far_boundary(hex, x);
        CHECK_FALSE(d.empty());
        CHECK(connected_components(hex, d).size() == 1);
        for (VertexId v : d)
            CHECK_FALSE(region.count(v));
    }
}

TEST_CASE("boundary sequence through three components")
{
    const int n = 6;
    GridColoring coloring(n, Color::blue);
    auto y1 = ids(n, {{1, 1}, {1, 2}, {2, 1}, {2, 2}});
    auto y2 = ids(n, {{3, 1}, {3, 2}, {3, 3}, {1, 3}, {2, 3}, {1, 4}, {2, 4}, {2, 5}});
    auto y3 = ids(n, {{1, 5}, {2, 6}, {3, 6}, {4, 6}, {3, 5}, {3, 4}, {4, 4}, {5, 4}, {4, 3},
                      {5, 3}, {4, 2}, {4, 1}});
    for (VertexId v : y1)
        coloring.set(hex_coord(n, v), Color::red);
    for (VertexId v : y3)
        coloring.set(hex_coord(n, v), Color::red);
    for (GridCoord p : {GridCoord{6, 1}, GridCoord{6, 2}, GridCoord{6, 6}})
        coloring.set(p, Color::red);

    auto steps = boundary_sequence(coloring);
    REQUIRE(steps.size() == 3);
    CHECK(sorted(steps[0].component) == y1);
    CHECK(steps[0].color == Color::red);
    CHECK(sorted(steps[1].component) == y2);
    CHECK(steps[1].color == Color::blue);
    CHECK(sorted(steps[2].component) == y3);
    CHECK(steps[2].color == Color::red);
    CHECK(steps[2].far_boundary.empty());

    auto path = find_monochromatic_path(coloring);
    CHECK(path.color == Color::red);
    check_path(coloring, path);
    for (VertexId v : path.vertices)
        CHECK(std::binary_search(y3.begin(), y3.end(), v));
    CHECK(hex_coord(n, path.vertices.front()).b == 1);
    CHECK(hex_coord(n, path.vertices.back()).b == n);
}

TEST_CASE("uniform colourings")
{
    for (int n = 1; n <= 6; ++n)
        for (Color c : {Color::red, Color::blue}) {
            GridColoring coloring(n, c);
            auto steps = boundary_sequence(coloring);
            CHECK(steps.size() == 1);
            auto path = find_monochromatic_path(coloring);
            CHECK(path.color == c);
            check_path(coloring, path);
        }
}

TEST_CASE("random colourings yield valid paths")
{
    Rng rng(99);
    for (int n = 2; n <= 10; ++n)
        for (int t = 0; t < 300; ++t) {
            auto coloring = random_coloring(n, rng);
            auto steps = boundary_sequence(coloring);
            for (std::size_t i = 1; i < steps.size(); ++i)
                CHECK(steps[i].color == opposite(steps[i - 1].color));
            auto path = find_monochromatic_path(coloring);
            CHECK(path.color == steps.back().color);
            check_path(coloring, path);
        }
}

TEST_CASE("path length against exhaustive search for n <= 4")
{
    Rng rng(1234);
    for (int n = 2; n <= 4; ++n)
        for (int t = 0; t < 200; ++t) {
            auto coloring = random_coloring(n, rng);
            auto path = find_monochromatic_path(coloring);
            const int longest = oracle::longest_monochromatic_path(coloring);
            CHECK(longest >= n);
            CHECK(static_cast<int>(path.vertices.size()) <= longest);
        }
}

TEST_CASE("grid colouring validation")
{
    CHECK_THROWS_AS(GridColoring(2, std::vector<Color>(3, Color::red)), InvalidParameter);
    CHECK_THROWS_AS(GridColoring(0, Color::red), InvalidParameter);
}
