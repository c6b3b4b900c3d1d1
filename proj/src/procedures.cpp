#include "ramsey/procedures.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "ramsey/errors.hpp"
#include "ramsey/graph_alg.hpp"

namespace ramsey {

namespace {

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt)
{
    std::uint64_t z = seed + salt * 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// d^e clamped; -1 marks overflow past `limit`.
long checked_pow(long d, int e, long limit)
{
    long x = 1;
    for (int i = 0; i < e; ++i) {
        if (x > limit / d)
            return -1;
        x *= d;
    }
    return x;
}

std::vector<int> sample_subset(int n, int m, std::mt19937_64& rng)
{
    std::vector<int> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    for (int i = 0; i < m; ++i) {
        std::uniform_int_distribution<int> pick(i, n - 1);
        std::swap(idx[i], idx[pick(rng)]);
    }
    idx.resize(m);
    std::sort(idx.begin(), idx.end());
    return idx;
}

} // namespace

long clique_ramsey_bound(int k)
{
    switch (k) {
    case 0: return 1;
    case 1: return 1;
    case 2: return 2;
    case 3: return 6;
    case 4: return 18;
    default: {
        long b = checked_pow(4, k, long(1) << 50);
        return b < 0 ? (long(1) << 50) : b;
    }
    }
}

VertexSet extract_dense_subgraph(const BitGraph& g, int k, int d)
{
    if (d < 2)
        throw Error("extract_dense_subgraph: d must be at least 2");
    if (k < 2)
        throw Error("extract_dense_subgraph: k must be at least 2");
    int n = g.order();
    long dk = checked_pow(d, k - 1, long(1) << 50);
    if (dk < 0 || n < 3 * dk)
        throw PreconditionError("extract_dense_subgraph: need |G| >= 3*d^(k-1) = "
                                + std::to_string(dk < 0 ? -1 : 3 * dk) + ", got "
                                + std::to_string(n));

    VertexSet s = VertexSet::full(n);
    std::vector<int> selected;
    while (true) {
        int m = s.count();
        int best_nd = -1, best_v = -1;
        for (int v = s.first(); v != -1; v = s.next(v)) {
            int nd = m - 1 - g.neighbours(v).count_and(s);
            if (nd > best_nd) {
                best_nd = nd;
                best_v = v;
            }
        }
        // stop unless some vertex has non-degree at least m/d - 1
        if (best_v == -1 || long(d) * (best_nd + 1) < m)
            break;
        selected.push_back(best_v);
        s -= g.neighbours(best_v);
        s.reset(best_v);
        if (int(selected.size()) == k - 1) {
            std::vector<int> witness = selected;
            if (int w = s.first(); w != -1)
                witness.push_back(w);
            throw PreconditionError(
                "extract_dense_subgraph: alpha(G) >= k; the selected vertices plus any survivor "
                "form an independent set",
                witness);
        }
    }

    int m = s.count();
    if (long(m) * dk < n)
        throw Error("extract_dense_subgraph: internal size bound violated");
    for (int v = s.first(); v != -1; v = s.next(v))
        if (long(d) * g.neighbours(v).count_and(s) < long(d - 1) * m)
            throw Error("extract_dense_subgraph: internal degree bound violated");
    return s;
}

VertexSet robust_subset(const BitGraph& g, int m, double d_in, std::uint64_t seed,
                        const RobustOptions& opts)
{
    int n = g.order();
    if (m < 0 || m > n)
        throw Error("robust_subset: m out of range");
    long d = long(std::floor(d_in));
    if (d < 0)
        throw Error("robust_subset: d must be non-negative");

    if (!opts.best_effort) {
        int delta = g.min_degree();
        if (2 * d < m - 1)
            throw PreconditionError("robust_subset: need d >= m/2 (after flooring, 2d >= m-1)");
        if (d == 0)
            throw PreconditionError("robust_subset: d must be positive for the analytic condition");
        double r = (double(m) * delta) / (double(n) * double(d));
        if (r <= 1.0)
            throw PreconditionError("robust_subset: condition fails, r <= 1");
        double expo = std::floor((r - 1.0) * double(d));
        if (std::log(double(m)) + std::log(double(n)) >= expo * std::log(r))
            throw PreconditionError("robust_subset: condition m*m' < r^floor((r-1)d) fails");
    }

    std::mt19937_64 rng(seed);
    int worst_v = -1, worst_c = -1;
    for (int attempt = 0; attempt < opts.retry_cap; ++attempt) {
        VertexSet s = VertexSet::from_vertices(n, sample_subset(n, m, rng));
        bool ok = true;
        for (int v = 0; v < n && ok; ++v) {
            int c = g.neighbours(v).count_and(s);
            if (c <= d) {
                ok = false;
                worst_v = v;
                worst_c = c;
            }
        }
        if (ok)
            return s;
    }
    throw StepError("robust-subset",
                    "retry cap " + std::to_string(opts.retry_cap) + " exceeded; last failure: vertex "
                        + std::to_string(worst_v) + " had only " + std::to_string(worst_c)
                        + " <= " + std::to_string(d) + " neighbours in the sample");
}

int ResilientGadget::max_degree() const
{
    int best = 0;
    std::vector<int> right(right_size(), 0);
    for (const auto& row : left) {
        best = std::max(best, row.count());
        row.for_each([&](int z) { ++right[z]; });
    }
    for (int c : right)
        best = std::max(best, c);
    return best;
}

long ResilientGadget::edge_count() const
{
    long e = 0;
    for (const auto& row : left)
        e += row.count();
    return e;
}

std::vector<std::pair<int, int>> ResilientGadget::edges() const
{
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < left_size(); ++i)
        left[i].for_each([&](int z) { out.emplace_back(i, z); });
    return out;
}

ResilientGadget build_matching_gadget(int k, int matchings, std::uint64_t seed)
{
    if (k < 1)
        throw Error("gadget parameter must be at least 1");
    ResilientGadget g;
    g.k = k;
    g.matchings = matchings;
    g.left.assign(4 * k, VertexSet(3 * k));

    std::mt19937_64 rng(seed);
    std::vector<int> perm(2 * k);
    for (int t = 0; t < matchings; ++t) {
        std::iota(perm.begin(), perm.end(), 0);
        for (int i = 2 * k - 1; i > 0; --i) {
            std::uniform_int_distribution<int> pick(0, i);
            std::swap(perm[i], perm[pick(rng)]);
        }
        for (int i = 0; i < 2 * k; ++i)
            g.left[2 * k + i].set(perm[i]); // y_i -- z1_perm(i)
    }
    // duplicate Y to get X
    for (int i = 0; i < 2 * k; ++i)
        g.left[i] = g.left[2 * k + i];
    // duplicate the first k vertices of Z1 to get Z2
    for (int j = 0; j < k; ++j)
        for (auto& row : g.left)
            if (row.test(j))
                row.set(2 * k + j);
    return g;
}

std::optional<std::vector<int>> perfect_matching(const std::vector<VertexSet>& left_rows,
                                                 int right_size)
{
    std::vector<int> right_match(right_size, -1);
    std::vector<char> visited(right_size, 0);

    std::function<bool(int)> augment = [&](int i) -> bool {
        const VertexSet& row = left_rows[i];
        for (int z = row.first(); z != -1; z = row.next(z)) {
            if (visited[z])
                continue;
            visited[z] = 1;
            if (right_match[z] == -1 || augment(right_match[z])) {
                right_match[z] = i;
                return true;
            }
        }
        return false;
    };

    for (int i = 0; i < int(left_rows.size()); ++i) {
        std::fill(visited.begin(), visited.end(), 0);
        if (!augment(i))
            return std::nullopt;
    }
    std::vector<int> match(left_rows.size(), -1);
    for (int z = 0; z < right_size; ++z)
        if (right_match[z] != -1)
            match[right_match[z]] = z;
    return match;
}

ResilienceReport verify_resilience(const ResilientGadget& g, int cap)
{
    ResilienceReport rep;
    int k = g.k;
    int nx = 2 * k;

    double total = 1;
    for (int i = 0; i < k; ++i)
        total = total * double(nx - i) / double(i + 1);
    rep.sampled = total > double(cap);

    auto check = [&](const std::vector<int>& xprime) -> bool {
        std::vector<VertexSet> rows;
        rows.reserve(std::size_t(3) * k);
        for (int i : xprime)
            rows.push_back(g.left[i]);
        for (int j = 0; j < 2 * k; ++j)
            rows.push_back(g.left[nx + j]);
        ++rep.checked;
        if (!perfect_matching(rows, g.right_size())) {
            rep.ok = false;
            rep.failing_subset = xprime;
            return false;
        }
        return true;
    };

    if (!rep.sampled) {
        std::vector<int> xprime(k);
        std::iota(xprime.begin(), xprime.end(), 0);
        while (true) {
            if (!check(xprime))
                return rep;
            int i = k - 1;
            while (i >= 0 && xprime[i] == nx - k + i)
                --i;
            if (i < 0)
                break;
            ++xprime[i];
            for (int j = i + 1; j < k; ++j)
                xprime[j] = xprime[j - 1] + 1;
        }
    } else {
        std::mt19937_64 rng(mix_seed(0x7e51a1e57ULL, std::uint64_t(k)));
        for (int t = 0; t < cap; ++t) {
            auto xprime = sample_subset(nx, k, rng);
            if (!check(xprime))
                return rep;
        }
    }
    return rep;
}

ResilientGadget resilient_bipartite(int k, std::uint64_t seed, int retry_cap)
{
    if (k < 1)
        throw Error("resilient_bipartite: k must be at least 1");
    ResilienceReport last;
    for (int attempt = 0; attempt < retry_cap; ++attempt) {
        ResilientGadget g = build_matching_gadget(k, 20, mix_seed(seed, std::uint64_t(attempt)));
        if (g.max_degree() > 40)
            continue;
        last = verify_resilience(g, 20000);
        if (last.ok)
            return g;
    }
    std::string fail = "none";
    if (!last.failing_subset.empty()) {
        fail.clear();
        for (std::size_t i = 0; i < last.failing_subset.size(); ++i)
            fail += (i ? "," : "") + std::to_string(last.failing_subset[i]);
    }
    throw StepError("resilient-bipartite", "no gadget passed verification after "
                                               + std::to_string(retry_cap)
                                               + " attempts; last failing X' = {" + fail + "}");
}

namespace {

bool tiles_ok(const BitGraph& host, const TilingCertificate& cert, VertexSet& covered,
              std::string* why)
{
    covered = VertexSet(host.order());
    for (const auto& tile : cert.tiles) {
        if (covered.intersects(tile)) {
            if (why)
                *why = "tiles overlap";
            return false;
        }
        if (!is_isomorphic(host.induced_small(tile), cert.pattern)) {
            if (why)
                *why = "a tile does not induce the pattern";
            return false;
        }
        covered |= tile;
    }
    return true;
}

} // namespace

bool verify_tiling(const BitGraph& host, const TilingCertificate& cert, std::string* why)
{
    if (cert.pattern.order() < 1) {
        if (why)
            *why = "pattern must be non-empty";
        return false;
    }
    VertexSet covered;
    if (!tiles_ok(host, cert, covered, why))
        return false;
    if (covered.intersects(cert.leftover)) {
        if (why)
            *why = "leftover overlaps a tile";
        return false;
    }
    if ((covered | cert.leftover) != VertexSet::full(host.order())) {
        if (why)
            *why = "tiles and leftover do not cover the host";
        return false;
    }
    if (cert.leftover.count() >= cert.pattern.order()) {
        if (why)
            *why = "leftover has at least |pattern| vertices";
        return false;
    }
    return true;
}

bool verify_perfect_tiling_of(const BitGraph& host, const TilingCertificate& cert,
                              const VertexSet& cover, std::string* why)
{
    if (!cert.leftover.empty()) {
        if (why)
            *why = "perfect tiling must have empty leftover";
        return false;
    }
    VertexSet covered;
    if (!tiles_ok(host, cert, covered, why))
        return false;
    if (covered != cover) {
        if (why)
            *why = "tiles do not cover exactly the expected set";
        return false;
    }
    return true;
}

LocalAbsorber local_absorber(const BitGraph& g, const std::vector<int>& s, const VertexSet& forbidden)
{
    int k = int(s.size());
    int n = g.order();
    if (k < 1)
        throw Error("local_absorber: S must be non-empty");
    VertexSet s_set = VertexSet::from_vertices(n, s);
    if (s_set.count() != k)
        throw Error("local_absorber: S has repeated vertices");

    VertexSet avail = VertexSet::full(n) - forbidden - s_set;
    if (avail.count() < k * k)
        throw PreconditionError("local_absorber: need at least k^2 = " + std::to_string(k * k)
                                + " free vertices, have " + std::to_string(avail.count()));

    auto ks = g.find_clique(k, &avail);
    if (!ks)
        throw StepError("local-absorber/K_S", "no K_" + std::to_string(k)
                                                  + " among the available vertices");
    LocalAbsorber out;
    out.s = s;
    out.ks = ks->to_vector();
    out.l_set = *ks;

    VertexSet used = *ks;
    for (int i = 0; i < k; ++i) {
        VertexSet pool = (avail - used) & g.neighbours(s[i]) & g.neighbours(out.ks[i]);
        auto ci = g.find_clique(k - 1, &pool);
        if (!ci)
            throw StepError("local-absorber/C_i",
                            "no K_" + std::to_string(k - 1) + " in the common neighbourhood of s_"
                                + std::to_string(i) + "=" + std::to_string(s[i]) + " and w_"
                                + std::to_string(i) + "=" + std::to_string(out.ks[i]));
        out.cliques.push_back(ci->to_vector());
        used |= *ci;
        out.l_set |= *ci;
    }

    SmallGraph pat = SmallGraph::complete(k);
    out.tiling_alone.pattern = pat;
    out.tiling_with_s.pattern = pat;
    out.tiling_alone.leftover = VertexSet(n);
    out.tiling_with_s.leftover = VertexSet(n);
    out.tiling_with_s.tiles.push_back(VertexSet::from_vertices(n, out.ks));
    for (int i = 0; i < k; ++i) {
        VertexSet alone = VertexSet::from_vertices(n, out.cliques[i]);
        VertexSet with_s = alone;
        alone.set(out.ks[i]);
        with_s.set(s[i]);
        out.tiling_alone.tiles.push_back(alone);
        out.tiling_with_s.tiles.push_back(with_s);
    }

    std::string why;
    if (!verify_perfect_tiling_of(g, out.tiling_alone, out.l_set, &why))
        throw StepError("local-absorber/verify", "tiling of L_S failed: " + why);
    if (!verify_perfect_tiling_of(g, out.tiling_with_s, out.l_set | s_set, &why))
        throw StepError("local-absorber/verify", "tiling of S u L_S failed: " + why);
    return out;
}

Absorber build_absorber(const BitGraph& g, int k, int ell, int matchings, std::uint64_t seed,
                        int resilience_cap)
{
    int n = g.order();
    Absorber a;
    a.ell = ell;

    VertexSet x;
    try {
        x = robust_subset(g, 2 * ell, 1.5 * double(ell), mix_seed(seed, 11),
                          RobustOptions{/*best_effort=*/true, /*retry_cap=*/500});
    } catch (const StepError& e) {
        throw StepError("absorber/X", e.what());
    }
    a.x_vertices = x.to_vector();

    VertexSet rest = VertexSet::full(n) - x;
    if (rest.count() < 2 * ell + 3 * ell * (k - 1))
        throw StepError("absorber/Y", "not enough vertices outside X");
    for (int i = 0; i < 2 * ell; ++i) {
        int v = rest.first();
        a.y_vertices.push_back(v);
        rest.reset(v);
    }
    for (int b = 0; b < 3 * ell; ++b) {
        std::vector<int> block;
        for (int i = 0; i < k - 1; ++i) {
            int v = rest.first();
            block.push_back(v);
            rest.reset(v);
        }
        a.z_blocks.push_back(std::move(block));
    }

    bool found = false;
    for (int attempt = 0; attempt < 50 && !found; ++attempt) {
        a.gadget = build_matching_gadget(ell, matchings, mix_seed(seed, 100 + attempt));
        if (a.gadget.max_degree() > 40)
            continue;
        found = verify_resilience(a.gadget, resilience_cap).ok;
    }
    if (!found)
        throw StepError("absorber/gadget", "no resilient gadget found with " + std::to_string(matchings)
                            + " matchings at parameter " + std::to_string(ell));

    a.all = x;
    for (int v : a.y_vertices)
        a.all.set(v);
    for (const auto& blk : a.z_blocks)
        for (int v : blk)
            a.all.set(v);

    VertexSet fset = a.all;
    for (auto [ls, zb] : a.gadget.edges()) {
        std::vector<int> s;
        s.push_back(ls < 2 * ell ? a.x_vertices[ls] : a.y_vertices[ls - 2 * ell]);
        for (int v : a.z_blocks[zb])
            s.push_back(v);
        LocalAbsorber la;
        try {
            la = local_absorber(g, s, fset);
        } catch (const Error& e) {
            throw StepError("absorber/local", std::string(e.what()) + " (edge slot "
                                                  + std::to_string(ls) + ", block "
                                                  + std::to_string(zb) + ")");
        }
        fset |= la.l_set;
        a.all |= la.l_set;
        a.locals.push_back({ls, zb, std::move(la)});
    }
    return a;
}

TilingCertificate absorb_remainder(const BitGraph& g, int k, const Absorber& a,
                                   const VertexSet& remainder, std::vector<VertexSet> outside_tiles)
{
    int n = g.order();
    int ell = a.ell;
    TilingCertificate cert;
    cert.pattern = SmallGraph::complete(k);
    cert.tiles = std::move(outside_tiles);

    if (remainder.count() * (k - 1) > ell)
        throw StepError("absorb/leftover",
                        "remainder of size " + std::to_string(remainder.count())
                            + " needs more than ell = " + std::to_string(ell) + " X-vertices");

    VertexSet x_avail = VertexSet::from_vertices(n, a.x_vertices);
    for (int v = remainder.first(); v != -1; v = remainder.next(v)) {
        VertexSet pool = x_avail & g.neighbours(v);
        auto cl = g.find_clique(k - 1, &pool);
        if (!cl)
            throw StepError("absorb/leftover-into-X",
                            "no K_" + std::to_string(k - 1) + " among X-neighbours of vertex "
                                + std::to_string(v));
        VertexSet tile = *cl;
        tile.set(v);
        cert.tiles.push_back(tile);
        x_avail -= *cl;
    }

    while (x_avail.count() > ell + (k - 1)) {
        auto cl = g.find_clique(k, &x_avail);
        if (!cl)
            throw StepError("absorb/trim", "no K_" + std::to_string(k)
                                               + " left while trimming X down to ell");
        cert.tiles.push_back(*cl);
        x_avail -= *cl;
    }

    VertexSet discard(n);
    while (x_avail.count() > ell) {
        int v = x_avail.first();
        discard.set(v);
        x_avail.reset(v);
    }

    // gadget matching for the surviving X slots plus all of Y
    std::vector<VertexSet> rows;
    std::vector<int> slot_of_row;
    for (int i = 0; i < 2 * ell; ++i) {
        if (x_avail.test(a.x_vertices[i])) {
            rows.push_back(a.gadget.left[i]);
            slot_of_row.push_back(i);
        }
    }
    for (int j = 0; j < 2 * ell; ++j) {
        rows.push_back(a.gadget.left[2 * ell + j]);
        slot_of_row.push_back(2 * ell + j);
    }
    if (int(rows.size()) != 3 * ell)
        throw StepError("absorb/matching", "expected 3*ell surviving slots, have "
                                               + std::to_string(rows.size()));
    auto pm = perfect_matching(rows, 3 * ell);
    if (!pm)
        throw StepError("absorb/matching", "the scaled gadget has no perfect matching for this X'");

    std::vector<int> matched_block(std::size_t(4) * ell, -1);
    for (std::size_t i = 0; i < rows.size(); ++i)
        matched_block[slot_of_row[i]] = (*pm)[i];

    for (const auto& ea : a.locals) {
        bool used = matched_block[ea.left_slot] == ea.z_block;
        const TilingCertificate& sub = used ? ea.local.tiling_with_s : ea.local.tiling_alone;
        for (const auto& tile : sub.tiles)
            cert.tiles.push_back(tile);
    }

    cert.leftover = discard;
    return cert;
}

namespace {

// Maximal disjoint K_k collection among `allowed`, visiting vertices in
// `order`; returns tiles and the set of vertices no copy could cover.
std::pair<std::vector<VertexSet>, VertexSet> greedy_collect(const BitGraph& g, int k,
                                                            const VertexSet& allowed,
                                                            const std::vector<int>& order)
{
    VertexSet avail = allowed;
    VertexSet skipped(g.order());
    std::vector<VertexSet> tiles;
    for (int v : order) {
        if (!avail.test(v))
            continue;
        VertexSet pool = avail & g.neighbours(v);
        auto cl = g.find_clique(k - 1, &pool);
        if (!cl) {
            avail.reset(v);
            skipped.set(v);
            continue;
        }
        VertexSet tile = *cl;
        tile.set(v);
        tiles.push_back(tile);
        avail -= tile;
    }
    return {std::move(tiles), std::move(skipped)};
}

} // namespace

TilingCertificate absorption_tiling(const BitGraph& g, int k, const TilingParams& params,
                                    std::uint64_t seed)
{
    int n = g.order();
    if (k < 1)
        throw Error("absorption_tiling: k must be at least 1");

    TilingCertificate cert;
    cert.pattern = SmallGraph::complete(k);
    cert.leftover = VertexSet(n);

    if (k == 1) {
        for (int v = 0; v < n; ++v)
            cert.tiles.push_back(VertexSet::of(n, {v}));
        return cert;
    }
    if (n < k) {
        cert.leftover = VertexSet::full(n);
        return cert;
    }

    if (auto ind = g.find_independent_set(k))
        throw PreconditionError("absorption_tiling: alpha(G) >= k", ind->to_vector());
    if (8L * g.min_degree() < 7L * n)
        throw PreconditionError("absorption_tiling: minimum degree below (7/8)|G|");

    long rk = clique_ramsey_bound(k);
    int ell_min = int(std::max({(rk - 1) * (k - 1), rk, long(2)}));
    long budget = long(params.absorber_fraction * double(n));
    auto estimate = [&](long ell, long m) {
        return 4 * ell + 3 * ell * (k - 1) + 6 * ell * m * long(k) * k;
    };

    int ell = 0, match_count = 0;
    bool feasible = false;
    if (params.ell) {
        ell = *params.ell;
        match_count = params.matchings;
        feasible = ell >= 1;
    } else {
        long base = long(n) / (256L * k * k);
        ell = params.auto_scale ? int(std::max(base, long(ell_min))) : int(base);
        if (ell >= 1) {
            for (int m = params.matchings; m >= 2; --m) {
                if (estimate(ell, m) <= budget) {
                    match_count = m;
                    feasible = true;
                    break;
                }
                if (!params.auto_scale)
                    break;
            }
        }
    }

    std::optional<Absorber> absorber;
    if (feasible) {
        try {
            absorber = build_absorber(g, k, ell, match_count, mix_seed(seed, 1),
                                      params.resilience_cap);
        } catch (const StepError&) {
            if (params.force_absorb)
                throw;
            absorber.reset();
        }
    } else if (params.force_absorb) {
        throw StepError("absorber", "forced absorber is infeasible: minimal footprint "
                                        + std::to_string(estimate(ell_min, 2))
                                        + " exceeds budget " + std::to_string(budget));
    }

    VertexSet allowed = VertexSet::full(n);
    if (absorber)
        allowed -= absorber->all;

    std::vector<int> base_order;
    for (int v = 0; v < n; ++v)
        base_order.push_back(v);

    std::vector<VertexSet> best_tiles;
    VertexSet best_r;
    bool have = false;
    for (int t = 0; t <= params.greedy_retries; ++t) {
        std::vector<int> order = base_order;
        if (t > 0) {
            std::mt19937_64 rng(mix_seed(seed, 1000 + std::uint64_t(t)));
            for (int i = n - 1; i > 0; --i) {
                std::uniform_int_distribution<int> pick(0, i);
                std::swap(order[i], order[pick(rng)]);
            }
        }
        auto [tiles, r] = greedy_collect(g, k, allowed, order);
        if (!have || r.count() < best_r.count()) {
            best_tiles = std::move(tiles);
            best_r = std::move(r);
            have = true;
        }
        if (absorber ? best_r.count() * (k - 1) <= absorber->ell : best_r.count() < k)
            break;
    }

    if (absorber) {
        cert = absorb_remainder(g, k, *absorber, best_r, std::move(best_tiles));
    } else {
        if (best_r.count() >= k)
            throw StepError("greedy",
                            "leftover of size " + std::to_string(best_r.count())
                                + " with no feasible absorber (scaled gadget needs about "
                                + std::to_string(estimate(ell_min, 2)) + " vertices, budget "
                                + std::to_string(budget) + ")");
        cert.tiles = std::move(best_tiles);
        cert.leftover = std::move(best_r);
    }

    std::string why;
    if (!verify_tiling(g, cert, &why))
        throw StepError("verify", "certificate failed verification: " + why);
    return cert;
}

} // namespace ramsey
