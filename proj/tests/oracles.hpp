#pragma once

// Brute-force reference implementations used to freeze expected values.
// These deliberately avoid the library's search code paths: everything is
// plain subset/permutation enumeration.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "ramsey/colouring.hpp"
#include "ramsey/small_graph.hpp"

namespace oracle {

using ramsey::Colour;
using ramsey::SmallGraph;
using ramsey::TwoColouring;

inline bool subset_independent(const SmallGraph& g, std::uint64_t mask)
{
    std::vector<int> vs;
    for (int v = 0; v < g.order(); ++v)
        if ((mask >> v) & 1)
            vs.push_back(v);
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j)
            if (g.has_edge(vs[i], vs[j]))
                return false;
    return true;
}

inline int independence_number(const SmallGraph& g)
{
    int best = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << g.order()); ++mask)
        if (subset_independent(g, mask))
            best = std::max(best, std::popcount(mask));
    return best;
}

inline std::vector<std::uint64_t> maximal_independent_sets(const SmallGraph& g)
{
    std::vector<std::uint64_t> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << g.order()); ++mask) {
        if (!subset_independent(g, mask))
            continue;
        bool maximal = true;
        for (int v = 0; v < g.order() && maximal; ++v)
            if (!((mask >> v) & 1) && subset_independent(g, mask | (std::uint64_t{1} << v)))
                maximal = false;
        if (maximal)
            out.push_back(mask);
    }
    return out;
}

inline bool subset_clique(const SmallGraph& g, const std::vector<int>& vs)
{
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j)
            if (!g.has_edge(vs[i], vs[j]))
                return false;
    return true;
}

inline bool has_clique(const SmallGraph& g, int k)
{
    if (k == 0)
        return true;
    if (k > g.order())
        return false;
    std::vector<int> pick(k);
    std::iota(pick.begin(), pick.end(), 0);
    while (true) {
        if (subset_clique(g, pick))
            return true;
        int i = k - 1;
        while (i >= 0 && pick[i] == g.order() - k + i)
            --i;
        if (i < 0)
            return false;
        ++pick[i];
        for (int j = i + 1; j < k; ++j)
            pick[j] = pick[j - 1] + 1;
    }
}

inline bool is_isomorphic(const SmallGraph& a, const SmallGraph& b)
{
    if (a.order() != b.order() || a.edge_count() != b.edge_count())
        return false;
    int n = a.order();
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (int u = 0; u < n && ok; ++u)
            for (int v = u + 1; v < n && ok; ++v)
                if (a.has_edge(u, v) != b.has_edge(perm[u], perm[v]))
                    ok = false;
        if (ok)
            return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

// all image sets of `pattern` in the given colour class
inline std::vector<std::uint64_t> embedding_sets(const TwoColouring& c, const SmallGraph& pattern,
                                                 Colour colour)
{
    int n = c.order(), k = pattern.order();
    std::vector<std::uint64_t> out;
    std::vector<int> map(k, -1);
    std::vector<char> used(n, 0);

    auto rec = [&](auto&& self, int i) -> void {
        if (i == k) {
            std::uint64_t mask = 0;
            for (int v : map)
                mask |= std::uint64_t{1} << v;
            if (std::find(out.begin(), out.end(), mask) == out.end())
                out.push_back(mask);
            return;
        }
        for (int v = 0; v < n; ++v) {
            if (used[v])
                continue;
            bool ok = true;
            for (int j = 0; j < i && ok; ++j)
                if (pattern.has_edge(j, i) && c.colour(map[j], v) != colour)
                    ok = false;
            if (!ok)
                continue;
            map[i] = v;
            used[v] = 1;
            self(self, i + 1);
            used[v] = 0;
        }
    };
    if (k <= n)
        rec(rec, 0);
    return out;
}

inline bool packing_exists(const std::vector<std::uint64_t>& sets, int n_copies,
                           std::uint64_t used = 0, std::size_t from = 0)
{
    if (n_copies == 0)
        return true;
    for (std::size_t i = from; i < sets.size(); ++i)
        if (!(sets[i] & used) && packing_exists(sets, n_copies - 1, used | sets[i], i + 1))
            return true;
    return false;
}

inline bool has_packing(const TwoColouring& c, const SmallGraph& pattern, Colour colour, int n)
{
    return packing_exists(embedding_sets(c, pattern, colour), n);
}

inline bool has_tie(const TwoColouring& c, const SmallGraph& h)
{
    int k = h.order();
    int alpha = independence_number(h);
    int size = 2 * k - alpha;
    if (size > c.order())
        return false;
    auto reds = embedding_sets(c, h, Colour::red);
    auto blues = embedding_sets(c, h, Colour::blue);
    for (auto r : reds)
        for (auto b : blues)
            if (std::popcount(r | b) <= size)
                return true;
    return false;
}

inline int max_matching_size(const TwoColouring& c, Colour colour)
{
    // max disjoint K_2 packing by augmenting recursion over edges
    std::vector<std::pair<int, int>> es;
    for (int u = 0; u < c.order(); ++u)
        for (int v = u + 1; v < c.order(); ++v)
            if (c.colour(u, v) == colour)
                es.emplace_back(u, v);
    int best = 0;
    auto rec = [&](auto&& self, std::size_t i, std::uint64_t used, int size) -> void {
        best = std::max(best, size);
        for (std::size_t j = i; j < es.size(); ++j) {
            std::uint64_t m =
                (std::uint64_t{1} << es[j].first) | (std::uint64_t{1} << es[j].second);
            if (!(m & used))
                self(self, j + 1, used | m, size + 1);
        }
    };
    rec(rec, 0, 0, 0);
    return best;
}

// every 2-colouring of K_n contains `n_red` disjoint red `hr` or `n_blue`
// disjoint blue `hb`; brute force over all 2^(n choose 2) colourings
inline bool arrows(int n, const SmallGraph& hr, int n_red, const SmallGraph& hb, int n_blue)
{
    int e = n * (n - 1) / 2;
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u)
            edges.emplace_back(u, v);
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << e); ++m) {
        TwoColouring c(n);
        for (int i = 0; i < e; ++i)
            if ((m >> i) & 1)
                c.set_colour(edges[i].first, edges[i].second, Colour::red);
        if (!has_packing(c, hr, Colour::red, n_red) && !has_packing(c, hb, Colour::blue, n_blue))
            return false;
    }
    return true;
}

inline TwoColouring random_colouring(int n, std::mt19937_64& rng, double red_p = 0.5)
{
    TwoColouring c(n);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng) < red_p)
                c.set_colour(u, v, Colour::red);
    return c;
}

inline SmallGraph random_graph(int n, double p, std::mt19937_64& rng)
{
    SmallGraph g(n);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng) < p)
                g.add_edge(u, v);
    return g;
}

inline SmallGraph graph_from_mask(int n, std::uint64_t mask)
{
    SmallGraph g(n);
    int bit = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++bit)
            if ((mask >> bit) & 1)
                g.add_edge(i, j);
    return g;
}

} // namespace oracle
