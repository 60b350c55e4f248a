#include "sq/witness.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <tuple>

#include <boost/multiprecision/mpfr.hpp>

namespace sq {

namespace {

bool is_power_of_ten(BigNat x, std::int64_t& exponent)
{
    exponent = 0;
    if (x < 1)
        return false;
    while (x % 10 == 0) {
        x /= 10;
        ++exponent;
    }
    return x == 1;
}

// floor(m * log10(base)) + 1 = decimal digits of base^m.
BigNat digits_of_power(const BigNat& base, const BigNat& m)
{
    std::int64_t ten_exp = 0;
    if (is_power_of_ten(base, ten_exp))
        return m * ten_exp + 1;

    using boost::multiprecision::mpfr_float;
    const unsigned precision = static_cast<unsigned>(m.str().size() + base.str().size() + 40);
    const unsigned saved = mpfr_float::default_precision();
    mpfr_float::default_precision(precision);
    const mpfr_float scaled = mpfr_float(m.str()) * boost::multiprecision::log10(mpfr_float(base.str()));
    const mpfr_float floored = boost::multiprecision::floor(scaled);
    const std::string whole = floored.str(0, std::ios_base::fixed);
    mpfr_float::default_precision(saved);
    return BigNat(whole.substr(0, whole.find('.'))) + 1;
}

} // namespace

ScaleParameters required_parameters(int s)
{
    if (s < 1 || s > max_scale_s)
        throw InvalidParameter("s must lie in 1.." + std::to_string(max_scale_s));
    ScaleParameters p;
    p.s = s;
    p.n = 2 * s;
    p.c = 2 * s;
    p.d = 4LL * p.n * p.n * s + 1;
    p.m = BigNat(1) << (p.n * p.n - 1);
    p.b_bound = ramsey_upper_bound(static_cast<int>(p.c), static_cast<int>(p.d));
    p.a_base = p.b_bound;
    p.a_exponent = p.m;
    p.a_digits = digits_of_power(p.b_bound, p.m);
    return p;
}

CaseResult case_separated(const PathFamily& fam, std::span<const int> chain)
{
    const int c = static_cast<int>(chain.size());
    const int n = fam.q_len();
    const LinearOrder& order = fam.order;

    // t_1 < ... < t_n: root copies by position, remembering their Q index.
    std::vector<int> t(n);
    for (int k = 0; k < n; ++k)
        t[k] = k;
    std::sort(t.begin(), t.end(), [&](int x, int y) {
        return order.position(fam.roots[x]) < order.position(fam.roots[y]);
    });

    auto max_pos = [&](int path) {
        int hi = -1;
        for (VertexId v : fam.paths[path])
            hi = std::max(hi, order.position(v));
        return hi;
    };
    auto min_pos = [&](int path) {
        int lo = order.size();
        for (VertexId v : fam.paths[path])
            lo = std::min(lo, order.position(v));
        return lo;
    };

    const int half_c = c / 2;        // floor(c/2)
    const int half_n = (n + 1) / 2;  // ceil(n/2)
    const int pivot = order.position(fam.roots[t[half_n - 1]]);
    // Edge joining t_j (1-based) to the copy of R in the same star.
    auto spoke = [&](int j, int path) {
        const int k = t[j - 1];
        return Edge(fam.roots[k], fam.paths[path][k]);
    };

    CaseResult out;
    if (half_c == 0 || max_pos(chain[half_c - 1]) < pivot) {
        out.branch = WitnessCase::separated_I_sub1;
        for (int i = 1; i <= std::min(half_c, half_n); ++i)
            out.edges.push_back(spoke(half_n + i - 1, chain[i - 1]));
    } else if (pivot < min_pos(chain[half_c])) {
        out.branch = WitnessCase::separated_I_sub2;
        for (int i = 1; i <= std::min(c - half_c, half_n); ++i)
            out.edges.push_back(spoke(i, chain[half_c + i - 1]));
    } else {
        throw InternalInvariant("separated chain admits neither subcase");
    }
    if (!is_pairwise_crossing(order, out.edges))
        throw InternalInvariant("separated-case edges do not pairwise cross");
    return out;
}

CaseResult case_crossing(const PathFamily& fam, std::span<const int> crossing)
{
    CaseResult out;
    out.branch = WitnessCase::crossing_II;
    if (crossing.size() < 2)
        return out;
    const LinearOrder& order = fam.order;
    const int base = crossing.front();
    const auto base_edges = fam.path_edges(base);

    struct Hit {
        int e;          // index of the crossed edge along R_0
        Edge f;
        int inside_copy;
        int outside_copy;
        bool outside_after;
    };
    std::vector<Hit> hits;
    for (std::size_t r = 1; r < crossing.size(); ++r) {
        const int path = crossing[r];
        const auto& verts = fam.paths[path];
        bool found = false;
        for (std::size_t k = 1; k < verts.size() && !found; ++k) {
            const Edge f(verts[k - 1], verts[k]);
            for (std::size_t ei = 0; ei < base_edges.size() && !found; ++ei) {
                const Edge& e = base_edges[ei];
                if (!crosses(order, e, f))
                    continue;
                const int lo = std::min(order.position(e.u), order.position(e.v));
                const int hi = std::max(order.position(e.u), order.position(e.v));
                const int p_prev = order.position(verts[k - 1]);
                const bool prev_inside = lo < p_prev && p_prev < hi;
                const int in_k = prev_inside ? static_cast<int>(k - 1) : static_cast<int>(k);
                const int out_k = prev_inside ? static_cast<int>(k) : static_cast<int>(k - 1);
                hits.push_back({static_cast<int>(ei), f, in_k, out_k,
                                order.position(verts[out_k]) > hi});
                found = true;
            }
        }
        if (!found)
            throw PreconditionViolation("path " + std::to_string(path) + " does not cross path " +
                                        std::to_string(base));
    }

    // Largest bucket; ties go to the smallest key.
    auto narrow = [](const std::vector<Hit>& in, auto key) {
        std::map<decltype(key(in.front())), std::vector<Hit>> buckets;
        for (const Hit& h : in)
            buckets[key(h)].push_back(h);
        const std::vector<Hit>* best = nullptr;
        for (const auto& [k, bucket] : buckets)
            if (!best || bucket.size() > best->size())
                best = &bucket;
        return *best;
    };
    auto left_end = [&](int ei) {
        return std::min(order.position(base_edges[ei].u), order.position(base_edges[ei].v));
    };
    auto z = narrow(hits, [&](const Hit& h) { return left_end(h.e); });
    auto z1 = narrow(z, [](const Hit& h) { return h.inside_copy; });
    auto z2 = narrow(z1, [](const Hit& h) { return std::pair{h.outside_copy, !h.outside_after}; });

    for (const Hit& h : z2)
        out.edges.push_back(h.f);
    if (!is_pairwise_crossing(order, out.edges))
        throw InternalInvariant("crossing-case edges do not pairwise cross");
    return out;
}

WitnessReport extract_crossing_witness(int a, int n, const LinearOrder& order, int c, int d)
{
    if (c < 1 || d < 1)
        throw InvalidParameter("c and d must be >= 1");
    WitnessReport report;
    WitnessTrace& trace = report.trace;

    trace.family = consistent_leaf_family(order, a, n);
    std::vector<Color> cells(static_cast<std::size_t>(n) * n);
    for (std::size_t p = 0; p < cells.size(); ++p)
        cells[p] = trace.family.directions[p] == Direction::increasing ? Color::red : Color::blue;
    trace.grid_coloring = GridColoring(n, std::move(cells));

    const auto mono = find_monochromatic_path(trace.grid_coloring);
    trace.path_color = mono.color;
    trace.q.assign(mono.vertices.begin(), mono.vertices.begin() + n);

    // On a blue Q every copy is decreasing; reading the leaves backwards
    // makes all of Q increasing.
    trace.oriented_leaves = trace.family.leaves;
    if (mono.color == Color::blue)
        std::reverse(trace.oriented_leaves.begin(), trace.oriented_leaves.end());

    PathFamily fam = make_path_family(order, a, n, trace.oriented_leaves, trace.q);
    for (int k = 0; k < fam.q_len(); ++k)
        for (int i = 1; i < fam.size(); ++i)
            if (!(order.position(fam.paths[i - 1][k]) < order.position(fam.paths[i][k])))
                throw InternalInvariant("leaves not uniformly ordered along Q");

    trace.classification = classification_matrix(fam);
    report.family_size_b = fam.size();

    const auto split = chain_or_antichain(fam, c, d);
    report.longest_chain = split.longest_chain;
    report.largest_antichain = split.largest_antichain;
    trace.selected = split.members;
    report.chain_or_antichain_size = static_cast<int>(split.members.size());

    switch (split.kind) {
    case ChainOrAntichain::Kind::none:
        report.outcome = WitnessOutcome::insufficient_scale;
        return report;
    case ChainOrAntichain::Kind::chain: {
        auto r = case_separated(fam, split.members);
        report.branch = r.branch;
        report.edges = std::move(r.edges);
        break;
    }
    case ChainOrAntichain::Kind::antichain: {
        auto r = case_crossing(fam, split.members);
        report.branch = r.branch;
        report.edges = std::move(r.edges);
        break;
    }
    }
    report.outcome = WitnessOutcome::witness;
    report.lower_bound = static_cast<int>(report.edges.size());
    return report;
}

} // namespace sq
