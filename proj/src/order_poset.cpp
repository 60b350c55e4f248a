#include "sq/order_poset.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace sq {

std::vector<Edge> PathFamily::path_edges(int i) const
{
    std::vector<Edge> edges;
    const auto& p = paths[i];
    for (std::size_t k = 1; k < p.size(); ++k)
        edges.emplace_back(p[k - 1], p[k]);
    return edges;
}

PathFamily make_path_family(const LinearOrder& order, int a, int n, std::vector<int> leaves,
                            std::vector<VertexId> q)
{
    if (order.size() != (a + 1) * n * n)
        throw InvalidParameter("order does not cover S_a x H_n");
    for (std::size_t k = 0; k < q.size(); ++k) {
        if (q[k] < 0 || q[k] >= n * n)
            throw InvalidParameter("grid path leaves H_n");
        if (k > 0 && !hex_adjacent(hex_coord(n, q[k - 1]), hex_coord(n, q[k])))
            throw InvalidParameter("grid path has non-adjacent consecutive cells");
    }
    {
        auto sorted = q;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw InvalidParameter("grid path repeats a cell");
    }

    PathFamily fam;
    fam.order = order;
    fam.a = a;
    fam.n = n;
    for (int leaf : leaves) {
        if (leaf < 1 || leaf > a)
            throw InvalidParameter("leaf index " + std::to_string(leaf) + " outside 1..a");
        std::vector<VertexId> path;
        for (VertexId cell : q)
            path.push_back(product_id(a, n, {leaf, hex_coord(n, cell)}));
        fam.paths.push_back(std::move(path));
    }
    for (VertexId cell : q)
        fam.roots.push_back(product_id(a, n, {ProductVertex::root, hex_coord(n, cell)}));
    fam.leaves = std::move(leaves);
    fam.q = std::move(q);
    return fam;
}

namespace {

std::pair<int, int> position_range(const PathFamily& fam, int i)
{
    int lo = fam.order.size();
    int hi = -1;
    for (VertexId v : fam.paths[i]) {
        lo = std::min(lo, fam.order.position(v));
        hi = std::max(hi, fam.order.position(v));
    }
    return {lo, hi};
}

} // namespace

PairClass classify_pair(const PathFamily& fam, int i, int j)
{
    if (i == j || i < 0 || j < 0 || i >= fam.size() || j >= fam.size())
        throw InvalidParameter("classify_pair needs two distinct valid path indices");
    const auto ri = position_range(fam, i);
    const auto rj = position_range(fam, j);
    if (ri.second < rj.first)
        return PairClass::separated_lt;
    if (rj.second < ri.first)
        return PairClass::separated_gt;
    const auto ei = fam.path_edges(i);
    const auto ej = fam.path_edges(j);
    for (const Edge& e : ei)
        for (const Edge& f : ej)
            if (crosses(fam.order, e, f))
                return PairClass::crossing;
    return PairClass::neither;
}

std::vector<std::vector<PairClass>> classification_matrix(const PathFamily& fam)
{
    const int b = fam.size();
    std::vector<std::vector<PairClass>> m(b, std::vector<PairClass>(b, PairClass::neither));
    for (int i = 0; i < b; ++i)
        for (int j = i + 1; j < b; ++j) {
            m[i][j] = classify_pair(fam, i, j);
            m[j][i] = m[i][j] == PairClass::separated_lt   ? PairClass::separated_gt
                      : m[i][j] == PairClass::separated_gt ? PairClass::separated_lt
                                                           : m[i][j];
        }
    return m;
}

ChainOrAntichain chain_or_antichain(const PathFamily& fam, int c, int d)
{
    if (c < 1 || d < 1)
        throw InvalidParameter("chain and antichain targets must be >= 1");
    const int b = fam.size();
    const auto cls = classification_matrix(fam);
    for (int i = 0; i < b; ++i)
        for (int j = i + 1; j < b; ++j)
            if (cls[i][j] == PairClass::neither)
                throw PreconditionViolation("paths " + std::to_string(i) + " and " +
                                            std::to_string(j) +
                                            " are neither separated nor crossing");

    // i precedes j in the poset iff R_i < R_j; that forces min(R_i) < min(R_j).
    std::vector<int> by_start(b);
    std::iota(by_start.begin(), by_start.end(), 0);
    std::vector<int> start(b);
    for (int i = 0; i < b; ++i)
        start[i] = position_range(fam, i).first;
    std::sort(by_start.begin(), by_start.end(), [&](int x, int y) { return start[x] < start[y]; });

    auto below = [&](int i, int j) { return cls[i][j] == PairClass::separated_lt; };

    std::vector<int> height(b, 1); // longest chain ending at i
    for (int xi = 0; xi < b; ++xi)
        for (int yi = 0; yi < xi; ++yi)
            if (below(by_start[yi], by_start[xi]))
                height[by_start[xi]] = std::max(height[by_start[xi]], height[by_start[yi]] + 1);
    std::vector<int> up(b, 1); // longest chain starting at i
    for (int xi = b - 1; xi >= 0; --xi)
        for (int yi = xi + 1; yi < b; ++yi)
            if (below(by_start[xi], by_start[yi]))
                up[by_start[xi]] = std::max(up[by_start[xi]], up[by_start[yi]] + 1);

    ChainOrAntichain out;
    out.longest_chain = b == 0 ? 0 : *std::max_element(height.begin(), height.end());

    std::vector<int> layer_size(out.longest_chain + 1, 0);
    for (int i = 0; i < b; ++i)
        ++layer_size[height[i]];
    int best_layer = 1;
    for (int h = 1; h <= out.longest_chain; ++h)
        if (layer_size[h] > layer_size[best_layer])
            best_layer = h;
    out.largest_antichain = b == 0 ? 0 : layer_size[best_layer];

    if (b > 0 && out.longest_chain >= c) {
        out.kind = ChainOrAntichain::Kind::chain;
        // Lexicographically smallest longest chain: at each step the
        // smallest index that can still complete the full length.
        int need = out.longest_chain;
        int prev = -1;
        while (need > 0) {
            for (int i = 0; i < b; ++i) {
                if (up[i] == need && (prev == -1 || below(prev, i))) {
                    out.members.push_back(i);
                    prev = i;
                    break;
                }
            }
            --need;
        }
        return out;
    }
    if (b > 0 && out.largest_antichain >= d) {
        out.kind = ChainOrAntichain::Kind::antichain;
        for (int i = 0; i < b; ++i)
            if (height[i] == best_layer)
                out.members.push_back(i);
        return out;
    }
    return out;
}

BigNat ramsey_upper_bound(int r, int s)
{
    if (r < 1 || s < 1)
        throw InvalidParameter("Ramsey arguments must be >= 1");
    // binomial(r+s-2, k) with k = min(r-1, s-1); exact at every step.
    const int top = r + s - 2;
    const int k = std::min(r - 1, s - 1);
    BigNat result = 1;
    for (int i = 1; i <= k; ++i) {
        result *= top - k + i;
        result /= i;
    }
    return result;
}

namespace {

bool extend_clique(const PairColoring& colors, Color color, int target, std::vector<int>& clique,
                   std::vector<int> candidates)
{
    if (static_cast<int>(clique.size()) == target)
        return true;
    while (!candidates.empty()) {
        if (static_cast<int>(clique.size() + candidates.size()) < target)
            return false;
        const int v = candidates.front();
        candidates.erase(candidates.begin());
        std::vector<int> next;
        for (int w : candidates)
            if (colors.at(v, w) == color)
                next.push_back(w);
        clique.push_back(v);
        if (extend_clique(colors, color, target, clique, std::move(next)))
            return true;
        clique.pop_back();
    }
    return false;
}

} // namespace

std::optional<MonochromaticClique> find_monochromatic_clique(const PairColoring& colors, int r,
                                                             int s)
{
    if (r < 1 || s < 1)
        throw InvalidParameter("clique sizes must be >= 1");
    std::vector<int> all(colors.size());
    std::iota(all.begin(), all.end(), 0);
    for (auto [color, target] : {std::pair{Color::red, r}, std::pair{Color::blue, s}}) {
        std::vector<int> clique;
        if (extend_clique(colors, color, target, clique, all))
            return MonochromaticClique{color, std::move(clique)};
    }
    return std::nullopt;
}

} // namespace sq
