#include "ramsey/bit_graph.hpp"

#include <algorithm>

#include "ramsey/errors.hpp"

namespace ramsey {

BitGraph::BitGraph(int n) : n_(n), adj_(n, VertexSet(n))
{
    if (n < 0 || n > max_order)
        throw Error("BitGraph order must be in 0..4096, got " + std::to_string(n));
}

BitGraph BitGraph::complete(int n)
{
    BitGraph g(n);
    for (int v = 0; v < n; ++v) {
        g.adj_[v] = VertexSet::full(n);
        g.adj_[v].reset(v);
    }
    return g;
}

BitGraph BitGraph::from_small(const SmallGraph& g)
{
    BitGraph out(g.order());
    for (auto [u, v] : g.edges())
        out.add_edge(u, v);
    return out;
}

void BitGraph::add_edge(int u, int v)
{
    if (u < 0 || v < 0 || u >= n_ || v >= n_)
        throw Error("edge endpoint out of range");
    if (u == v)
        throw Error("self-loops are not allowed");
    adj_[u].set(v);
    adj_[v].set(u);
}

void BitGraph::remove_edge(int u, int v)
{
    adj_[u].reset(v);
    adj_[v].reset(u);
}

int BitGraph::min_degree() const
{
    int d = n_;
    for (int v = 0; v < n_; ++v)
        d = std::min(d, degree(v));
    return n_ == 0 ? 0 : d;
}

long BitGraph::edge_count() const
{
    long deg2 = 0;
    for (int v = 0; v < n_; ++v)
        deg2 += degree(v);
    return deg2 / 2;
}

BitGraph BitGraph::complement() const
{
    BitGraph g(n_);
    for (int v = 0; v < n_; ++v) {
        g.adj_[v] = adj_[v].complement();
        g.adj_[v].reset(v);
    }
    return g;
}

SmallGraph BitGraph::induced_small(const VertexSet& s) const
{
    auto verts = s.to_vector();
    if (int(verts.size()) > SmallGraph::max_order)
        throw Error("induced_small: more than 64 vertices");
    SmallGraph g(int(verts.size()));
    for (std::size_t i = 0; i < verts.size(); ++i)
        for (std::size_t j = i + 1; j < verts.size(); ++j)
            if (has_edge(verts[i], verts[j]))
                g.add_edge(int(i), int(j));
    return g;
}

namespace {

bool clique_rec(const std::vector<VertexSet>& rows, VertexSet cand, int need, std::vector<int>& out)
{
    if (need == 0)
        return true;
    for (int v = cand.first(); v != -1; v = cand.next(v)) {
        if (cand.count() < need)
            return false;
        out.push_back(v);
        VertexSet rest = cand & rows[v];
        // only vertices above v, to keep the first hit lexicographically least
        for (int u = rest.first(); u != -1 && u <= v; u = rest.next(u))
            rest.reset(u);
        if (clique_rec(rows, rest, need - 1, out))
            return true;
        out.pop_back();
        cand.reset(v);
    }
    return false;
}

} // namespace

std::optional<VertexSet> BitGraph::find_clique(int k, const VertexSet* within) const
{
    if (k < 0 || k > n_)
        return std::nullopt;
    VertexSet cand = within ? *within : VertexSet::full(n_);
    std::vector<int> out;
    if (!clique_rec(adj_, cand, k, out))
        return std::nullopt;
    return VertexSet::from_vertices(n_, out);
}

std::optional<VertexSet> BitGraph::find_independent_set(int k, const VertexSet* within) const
{
    if (k < 0 || k > n_)
        return std::nullopt;
    std::vector<VertexSet> co(n_);
    for (int v = 0; v < n_; ++v) {
        co[v] = adj_[v].complement();
        co[v].reset(v);
    }
    VertexSet cand = within ? *within : VertexSet::full(n_);
    std::vector<int> out;
    if (!clique_rec(co, cand, k, out))
        return std::nullopt;
    return VertexSet::from_vertices(n_, out);
}

} // namespace ramsey
