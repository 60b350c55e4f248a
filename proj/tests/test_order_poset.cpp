#include <doctest.h>

#include "fixtures.hpp"
#include "sq/order_poset.hpp"

using namespace sq;

namespace {

void check_split(const PathFamily& fam, const ChainOrAntichain& r, int c, int d)
{
    const auto m = classification_matrix(fam);
    switch (r.kind) {
    case ChainOrAntichain::Kind::chain:
        CHECK(static_cast<int>(r.members.size()) >= c);
        CHECK(static_cast<int>(r.members.size()) == r.longest_chain);
        for (std::size_t i = 1; i < r.members.size(); ++i)
            CHECK(m[r.members[i - 1]][r.members[i]] == PairClass::separated_lt);
        break;
    case ChainOrAntichain::Kind::antichain:
        CHECK(r.longest_chain < c);
        CHECK(static_cast<int>(r.members.size()) >= d);
        CHECK(std::is_sorted(r.members.begin(), r.members.end()));
        for (std::size_t i = 0; i < r.members.size(); ++i)
            for (std::size_t j = i + 1; j < r.members.size(); ++j)
                CHECK(m[r.members[i]][r.members[j]] == PairClass::crossing);
        break;
    case ChainOrAntichain::Kind::none:
        CHECK(r.longest_chain < c);
        CHECK(r.largest_antichain < d);
        break;
    }
}

} // namespace

TEST_CASE("ramsey upper bound")
{
    CHECK(ramsey_upper_bound(1, 1) == 1);
    CHECK(ramsey_upper_bound(2, 7) == 7);
    CHECK(ramsey_upper_bound(3, 3) == 6);
    CHECK(ramsey_upper_bound(4, 4) == 20);
    CHECK(ramsey_upper_bound(2, 17) == 17);
    CHECK(ramsey_upper_bound(4, 129) == 366145);
    CHECK(ramsey_upper_bound(5, 9) == ramsey_upper_bound(9, 5));
    for (int r = 2; r <= 20; ++r)
        for (int s = 2; s <= 20; ++s)
            CHECK(ramsey_upper_bound(r, s) ==
                  ramsey_upper_bound(r - 1, s) + ramsey_upper_bound(r, s - 1));
    CHECK_THROWS_AS(ramsey_upper_bound(0, 3), InvalidParameter);
}

TEST_CASE("every 2-colouring of K_6 has a monochromatic triangle")
{
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < 6; ++i)
        for (int j = i + 1; j < 6; ++j)
            pairs.emplace_back(i, j);
    REQUIRE(pairs.size() == 15);
    int missing = 0;
    for (unsigned mask = 0; mask < (1u << 15); ++mask) {
        PairColoring colors(6, Color::red);
        for (int e = 0; e < 15; ++e)
            if (mask >> e & 1u)
                colors.set(pairs[e].first, pairs[e].second, Color::blue);
        auto clique = find_monochromatic_clique(colors, 3, 3);
        if (!clique) {
            ++missing;
            continue;
        }
        CHECK(clique->vertices.size() == 3);
        for (int x : clique->vertices)
            for (int y : clique->vertices)
                if (x != y)
                    CHECK(colors.at(x, y) == clique->color);
    }
    CHECK(missing == 0);
}

TEST_CASE("pentagon colouring of K_5 has no monochromatic triangle")
{
    PairColoring colors(5, Color::blue);
    for (int i = 0; i < 5; ++i)
        colors.set(i, (i + 1) % 5, Color::red);
    CHECK_FALSE(find_monochromatic_clique(colors, 3, 3));
}

TEST_CASE("path family construction")
{
    auto order = LinearOrder::identity(6 * 9);
    auto fam = make_path_family(order, 5, 3, {1, 2, 3}, {0, 1, 2});
    CHECK(fam.size() == 3);
    CHECK(fam.q_len() == 3);
    CHECK(fam.paths[0] == std::vector<VertexId>{1, 7, 13});
    CHECK(fam.roots == std::vector<VertexId>{0, 6, 12});
    CHECK(fam.path_edges(0) == std::vector<Edge>{Edge(1, 7), Edge(7, 13)});
    CHECK_THROWS_AS(make_path_family(order, 5, 3, {1}, {0, 2}), InvalidParameter);
    CHECK_THROWS_AS(make_path_family(order, 5, 3, {1}, {0, 1, 0}), InvalidParameter);
    CHECK_THROWS_AS(make_path_family(order, 5, 3, {6}, {0, 1}), InvalidParameter);
    CHECK_THROWS_AS(make_path_family(order, 4, 3, {1}, {0, 1}), InvalidParameter);
}

TEST_CASE("classification on the block order")
{
    // Leaf copies sit in disjoint blocks by cell, so R_1 and R_2 interleave.
    auto order = LinearOrder::identity(6 * 9);
    auto fam = make_path_family(order, 5, 3, {1, 2}, {0, 1, 2});
    CHECK(classify_pair(fam, 0, 1) == PairClass::crossing);
    CHECK_THROWS_AS(classify_pair(fam, 0, 0), InvalidParameter);
}

TEST_CASE("classification of separated paths")
{
    // Put every copy of leaf 1 first, then leaf 2, then the rest.
    const int a = 2, n = 2;
    std::vector<VertexId> seq;
    for (int leaf : {1, 2})
        for (VertexId cell = 0; cell < n * n; ++cell)
            seq.push_back(product_id(a, n, {leaf, hex_coord(n, cell)}));
    for (VertexId cell = 0; cell < n * n; ++cell)
        seq.push_back(product_id(a, n, {0, hex_coord(n, cell)}));
    auto fam = make_path_family(LinearOrder(seq), a, n, {1, 2}, {0, 1});
    CHECK(classify_pair(fam, 0, 1) == PairClass::separated_lt);
    CHECK(classify_pair(fam, 1, 0) == PairClass::separated_gt);
    auto r = chain_or_antichain(fam, 2, 2);
    CHECK(r.kind == ChainOrAntichain::Kind::chain);
    CHECK(r.members == std::vector<int>{0, 1});
}

TEST_CASE("random consistent families split into chains or antichains")
{
    Rng rng(31);
    for (int t = 0; t < 300; ++t) {
        const int c = 1 + static_cast<int>(draw_below(rng, 5));
        const int d = 1 + static_cast<int>(draw_below(rng, 5));
        const int b = (c - 1) * (d - 1) + 1;
        const int n = 2 + static_cast<int>(draw_below(rng, 3));
        auto fam = fixture::random_consistent_family(b, n, rng);
        const auto m = classification_matrix(fam);
        for (int i = 0; i < b; ++i)
            for (int j = i + 1; j < b; ++j)
                CHECK(m[i][j] != PairClass::neither);
        auto r = chain_or_antichain(fam, c, d);
        CHECK(r.kind != ChainOrAntichain::Kind::none);
        check_split(fam, r, c, d);

        if (b <= 12) {
            auto colors = fixture::separation_coloring(fam);
            CHECK(fixture::max_clique(colors, Color::blue) == r.longest_chain);
            CHECK(fixture::max_clique(colors, Color::red) >= r.largest_antichain);
        }
    }
}

TEST_CASE("too small a family reports none")
{
    Rng rng(8);
    auto fam = fixture::random_consistent_family(1, 3, rng);
    auto r = chain_or_antichain(fam, 2, 2);
    CHECK(r.kind == ChainOrAntichain::Kind::none);
    CHECK(r.longest_chain == 1);
    CHECK(r.largest_antichain == 1);
}

TEST_CASE("a neither pair is rejected")
{
    // R_1 = (1,q1)-(1,q2), R_2 = (2,q1)-(2,q2) with positions 0,3 and 1,2: nested.
    const int a = 2, n = 2;
    const int nv = (a + 1) * n * n;
    const VertexId r1a = product_id(a, n, {1, {1, 1}}), r1b = product_id(a, n, {1, {2, 1}});
    const VertexId r2a = product_id(a, n, {2, {1, 1}}), r2b = product_id(a, n, {2, {2, 1}});
    std::vector<VertexId> seq{r1a, r2a, r2b, r1b};
    for (VertexId v = 0; v < nv; ++v)
        if (std::find(seq.begin(), seq.end(), v) == seq.end())
            seq.push_back(v);
    auto fam = make_path_family(LinearOrder(seq), a, n, {1, 2}, {0, 1});
    CHECK(classify_pair(fam, 0, 1) == PairClass::neither);
    CHECK_THROWS_AS(chain_or_antichain(fam, 2, 2), PreconditionViolation);
}
