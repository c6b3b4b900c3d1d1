#include "ramsey/graph_alg.hpp"

#include <algorithm>
#include <bit>

#include "ramsey/errors.hpp"

namespace ramsey {

namespace {

using u64 = std::uint64_t;

// Max clique by branch and bound on mask candidates. Good enough for the
// pattern sizes this library works with (the hosts use BitGraph instead).
struct MaxCliqueSearch {
    const SmallGraph& g;
    int best = 0;

    explicit MaxCliqueSearch(const SmallGraph& gr) : g(gr) {}

    void run(u64 cand, int size)
    {
        if (size + std::popcount(cand) <= best)
            return;
        if (!cand) {
            best = std::max(best, size);
            return;
        }
        u64 m = cand;
        while (m) {
            if (size + std::popcount(m) <= best)
                return;
            int v = std::countr_zero(m);
            m &= m - 1;
            run(cand & m /*only higher vertices*/ & g.neighbours(v), size + 1);
            cand &= ~(u64{1} << v);
        }
    }
};

bool find_clique_rec(const SmallGraph& g, u64 cand, int need, u64& out)
{
    if (need == 0)
        return true;
    while (cand) {
        if (std::popcount(cand) < need)
            return false;
        int v = std::countr_zero(cand);
        cand &= cand - 1;
        out |= u64{1} << v;
        if (find_clique_rec(g, cand & g.neighbours(v), need - 1, out))
            return true;
        out &= ~(u64{1} << v);
    }
    return false;
}

// All maximal cliques of g via Bron-Kerbosch with pivoting.
void bron_kerbosch(const SmallGraph& g, u64 r, u64 p, u64 x, std::vector<u64>& out)
{
    if (!p && !x) {
        out.push_back(r);
        return;
    }
    u64 px = p | x;
    int pivot = std::countr_zero(px);
    int best = -1;
    u64 m = px;
    while (m) {
        int v = std::countr_zero(m);
        m &= m - 1;
        int d = std::popcount(p & g.neighbours(v));
        if (d > best) {
            best = d;
            pivot = v;
        }
    }
    u64 ext = p & ~g.neighbours(pivot);
    while (ext) {
        int v = std::countr_zero(ext);
        ext &= ext - 1;
        u64 vb = u64{1} << v;
        bron_kerbosch(g, r | vb, p & g.neighbours(v), x & g.neighbours(v), out);
        p &= ~vb;
        x |= vb;
    }
}

} // namespace

int independence_number(const SmallGraph& g)
{
    if (g.order() == 0)
        return 0;
    SmallGraph co = g.complement();
    MaxCliqueSearch search(co);
    search.run(co.vertex_mask(), 0);
    return search.best;
}

std::vector<VertexSet> maximal_independent_sets(const SmallGraph& g)
{
    std::vector<u64> masks;
    if (g.order() == 0)
        return {};
    bron_kerbosch(g.complement(), 0, g.vertex_mask(), 0, masks);
    std::sort(masks.begin(), masks.end());
    std::vector<VertexSet> out;
    out.reserve(masks.size());
    for (u64 m : masks)
        out.push_back(mask_to_set(g.order(), m));
    return out;
}

std::vector<VertexSet> maximum_independent_sets(const SmallGraph& g)
{
    int alpha = independence_number(g);
    std::vector<VertexSet> out;
    for (const auto& s : maximal_independent_sets(g))
        if (s.count() == alpha)
            out.push_back(s);
    return out;
}

std::optional<VertexSet> find_clique(const SmallGraph& g, int k)
{
    if (k < 0 || k > g.order())
        return std::nullopt;
    u64 out = 0;
    if (!find_clique_rec(g, g.vertex_mask(), k, out))
        return std::nullopt;
    return mask_to_set(g.order(), out);
}

std::vector<VertexSet> connected_components(const SmallGraph& g)
{
    std::vector<VertexSet> out;
    u64 todo = g.vertex_mask();
    while (todo) {
        int v = std::countr_zero(todo);
        u64 seen = u64{1} << v, frontier = seen;
        while (frontier) {
            u64 next = 0;
            while (frontier) {
                int u = std::countr_zero(frontier);
                frontier &= frontier - 1;
                next |= g.neighbours(u);
            }
            frontier = next & ~seen;
            seen |= next;
        }
        out.push_back(mask_to_set(g.order(), seen));
        todo &= ~seen;
    }
    return out;
}

SmallGraph induced_subgraph(const SmallGraph& g, const VertexSet& s)
{
    u64 mask = set_to_mask(s);
    if (mask & ~g.vertex_mask())
        throw Error("induced_subgraph: set contains vertices outside the graph");
    return g.induced(mask);
}

namespace {

// Equitable refinement: colours are consecutive ints; repeatedly split
// classes by the multiset of neighbour colours until stable. The rank
// ordering keys on (old colour, signature) so refinement is monotone and
// isomorphism-equivariant.
std::vector<int> refine(const SmallGraph& g, std::vector<int> colour)
{
    int n = g.order();
    while (true) {
        std::vector<std::pair<std::vector<int>, int>> sig(n);
        for (int v = 0; v < n; ++v) {
            std::vector<int> key;
            key.push_back(colour[v]);
            std::vector<int> nb;
            u64 m = g.neighbours(v);
            while (m) {
                nb.push_back(colour[std::countr_zero(m)]);
                m &= m - 1;
            }
            std::sort(nb.begin(), nb.end());
            key.insert(key.end(), nb.begin(), nb.end());
            sig[v] = {std::move(key), v};
        }
        auto sorted = sig;
        std::sort(sorted.begin(), sorted.end());
        std::vector<int> fresh(n);
        int classes = 0;
        for (int i = 0; i < n; ++i) {
            if (i > 0 && sorted[i].first != sorted[i - 1].first)
                ++classes;
            fresh[sorted[i].second] = classes;
        }
        int old_classes = *std::max_element(colour.begin(), colour.end());
        if (classes == old_classes)
            return fresh;
        colour = std::move(fresh);
    }
}

struct CanonSearch {
    const SmallGraph& g;
    int n;
    std::string best; // empty until the first leaf

    explicit CanonSearch(const SmallGraph& gr) : g(gr), n(gr.order()) {}

    std::string leaf_key(const std::vector<int>& colour) const
    {
        // colour is discrete: colour[v] = position of v in the labelling
        std::vector<int> vert(n);
        for (int v = 0; v < n; ++v)
            vert[colour[v]] = v;
        std::string key;
        key.push_back(char(n));
        int acc = 0, nb = 0;
        for (int j = 1; j < n; ++j) {
            for (int i = 0; i < j; ++i) {
                acc = (acc << 1) | int(g.has_edge(vert[i], vert[j]));
                if (++nb == 8) {
                    key.push_back(char(acc));
                    acc = nb = 0;
                }
            }
        }
        if (nb)
            key.push_back(char(acc << (8 - nb)));
        return key;
    }

    void run(const std::vector<int>& colour)
    {
        // find the first non-singleton colour class
        int target = -1;
        std::vector<int> sizes(n, 0);
        for (int v = 0; v < n; ++v)
            ++sizes[colour[v]];
        for (int c = 0; c < n; ++c) {
            if (sizes[c] > 1) {
                target = c;
                break;
            }
        }
        if (target == -1) {
            std::string key = leaf_key(colour);
            if (best.empty() || key < best)
                best = std::move(key);
            return;
        }
        for (int v = 0; v < n; ++v) {
            if (colour[v] != target)
                continue;
            std::vector<int> split(n);
            for (int u = 0; u < n; ++u)
                split[u] = 2 * colour[u] + (u == v ? 0 : 1);
            run(refine(g, std::move(split)));
        }
    }
};

} // namespace

std::string canonical_form(const SmallGraph& g)
{
    int n = g.order();
    if (n == 0)
        return std::string(1, char(0));
    // Complete and edgeless graphs are fixed points of refinement with a
    // factorial-size search tree; their encoding is label-independent.
    long e = g.edge_count();
    if (e == 0 || e == long(n) * (n - 1) / 2) {
        CanonSearch s(g);
        std::vector<int> identity(n);
        for (int v = 0; v < n; ++v)
            identity[v] = v;
        return s.leaf_key(identity);
    }
    CanonSearch s(g);
    s.run(refine(g, std::vector<int>(n, 0)));
    return s.best;
}

SmallGraph canonical_copy(const SmallGraph& g)
{
    std::string key = canonical_form(g);
    int n = g.order();
    SmallGraph out(n);
    int bit = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++bit) {
            unsigned char byte = (unsigned char)key[1 + bit / 8];
            if ((byte >> (7 - bit % 8)) & 1)
                out.add_edge(i, j);
        }
    }
    return out;
}

bool is_isomorphic(const SmallGraph& a, const SmallGraph& b)
{
    if (a.order() != b.order() || a.edge_count() != b.edge_count())
        return false;
    std::vector<int> da, db;
    for (int v = 0; v < a.order(); ++v) {
        da.push_back(a.degree(v));
        db.push_back(b.degree(v));
    }
    std::sort(da.begin(), da.end());
    std::sort(db.begin(), db.end());
    if (da != db)
        return false;
    return canonical_form(a) == canonical_form(b);
}

} // namespace ramsey
