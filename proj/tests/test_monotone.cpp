#include <doctest.h>

#include <cmath>
#include <numeric>

#include "oracles.hpp"
#include "sq/graph.hpp"
#include "sq/monotone.hpp"
#include "sq/random.hpp"

using namespace sq;

namespace {

void check_monotone(const std::vector<int>& seq, const MonotoneSubsequence& m)
{
    for (std::size_t i = 1; i < m.indices.size(); ++i) {
        CHECK(m.indices[i - 1] < m.indices[i]);
        const int x = seq[m.indices[i - 1]], y = seq[m.indices[i]];
        if (m.direction == Direction::increasing)
            CHECK(x < y);
        else
            CHECK(x > y);
    }
}

std::size_t ceil_sqrt(std::size_t x)
{
    std::size_t r = 0;
    while (r * r < x)
        ++r;
    return r;
}

} // namespace

TEST_CASE("small sequences")
{
    std::vector<int> empty;
    CHECK(longest_monotone_subsequence(empty).size() == 0);
    std::vector<int> one{7};
    CHECK(longest_monotone_subsequence(one).size() == 1);

    std::vector<int> seq{3, 1, 4, 5, 9, 2, 6};
    auto m = longest_monotone_subsequence(seq);
    CHECK(m.direction == Direction::increasing);
    CHECK(m.size() == 4);
    check_monotone(seq, m);

    std::vector<int> down{5, 4, 3, 2, 1};
    auto d = longest_monotone_subsequence(down);
    CHECK(d.direction == Direction::decreasing);
    CHECK(d.size() == 5);

    // Equal lengths go to increasing.
    std::vector<int> tie{2, 1, 3};
    CHECK(longest_monotone_subsequence(tie).direction == Direction::increasing);
}

TEST_CASE("exhaustive permutations up to length 8")
{
    for (int len = 1; len <= 8; ++len) {
        std::vector<int> seq(len);
        std::iota(seq.begin(), seq.end(), 0);
        do {
            auto m = longest_monotone_subsequence(seq);
            auto [inc, dec] = oracle::monotone_lengths_dp(seq);
            REQUIRE(m.size() == std::max(inc, dec));
            check_monotone(seq, m);
            CHECK(m.size() >= ceil_sqrt(seq.size()));
        } while (std::next_permutation(seq.begin(), seq.end()));
    }
}

TEST_CASE("random longer sequences")
{
    Rng rng(2024);
    for (int t = 0; t < 2000; ++t) {
        const int len = 9 + static_cast<int>(draw_below(rng, 60));
        auto order = random_order(len, rng);
        std::vector<int> seq(order.sequence().begin(), order.sequence().end());
        auto m = longest_monotone_subsequence(seq);
        auto [inc, dec] = oracle::monotone_lengths_dp(seq);
        CHECK(m.size() == std::max(inc, dec));
        check_monotone(seq, m);
    }
}

TEST_CASE("custom comparator")
{
    std::vector<int> seq{1, 2, 3, 4};
    auto m = longest_monotone_subsequence(seq, std::greater<int>{});
    CHECK(m.direction == Direction::decreasing);
    CHECK(m.size() == 4);
}

TEST_CASE("consistent leaf families")
{
    Rng rng(5);
    for (auto [a, n] : {std::pair{4, 2}, std::pair{9, 2}, std::pair{8, 3}, std::pair{30, 3}}) {
        const int nv = (a + 1) * n * n;
        for (int t = 0; t < 100; ++t) {
            auto order = random_order(nv, rng);
            auto fam = consistent_leaf_family(order, a, n);
            CHECK(leaf_family_consistent(fam, order, a, n));
            REQUIRE(fam.step_sizes.size() == static_cast<std::size_t>(n * n));
            CHECK(fam.step_sizes.front() == static_cast<std::size_t>(a));
            for (std::size_t i = 1; i < fam.step_sizes.size(); ++i)
                CHECK(fam.step_sizes[i] >= ceil_sqrt(fam.step_sizes[i - 1]));
            CHECK(fam.size() == fam.step_sizes.back());
            for (int leaf : fam.leaves) {
                CHECK(leaf >= 1);
                CHECK(leaf <= a);
            }
        }
    }
}

TEST_CASE("leaf family on the block order")
{
    auto order = LinearOrder::identity(6 * 9);
    auto fam = consistent_leaf_family(order, 5, 3);
    CHECK(fam.leaves == std::vector<int>{1, 2, 3, 4, 5});
    for (Direction d : fam.directions)
        CHECK(d == Direction::increasing);
}

TEST_CASE("leaf family rejects bad parameters")
{
    CHECK_THROWS_AS(consistent_leaf_family(LinearOrder::identity(10), 4, 2), InvalidParameter);
    CHECK_THROWS_AS(consistent_leaf_family(LinearOrder::identity(4), 0, 2), InvalidParameter);
}
