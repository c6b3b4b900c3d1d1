#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ramsey/vertex_set.hpp"

namespace ramsey {

// Labelled undirected graph on up to 64 vertices. One adjacency row per
// vertex, each a single machine word. Symmetric, irreflexive. Isolated
// vertices are allowed; order 0 is a legal degenerate value (it shows up
// as a family member, e.g. removing the only vertex of K_1).
class SmallGraph {
public:
    static constexpr int max_order = 64;

    SmallGraph() = default;
    explicit SmallGraph(int n);

    static SmallGraph from_edges(int n, std::initializer_list<std::pair<int, int>> edges);
    static SmallGraph edgeless(int n) { return SmallGraph(n); }
    static SmallGraph complete(int n);
    static SmallGraph path(int n);
    static SmallGraph cycle(int n);
    static SmallGraph disjoint_union(const SmallGraph& a, const SmallGraph& b);
    static SmallGraph petersen();

    int order() const { return n_; }
    int edge_count() const;

    bool has_edge(int u, int v) const { return (adj_[u] >> v) & 1; }
    void add_edge(int u, int v);
    void remove_edge(int u, int v);

    std::uint64_t neighbours(int v) const { return adj_[v]; }
    int degree(int v) const { return std::popcount(adj_[v]); }

    // All vertices as a mask.
    std::uint64_t vertex_mask() const
    {
        return n_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1;
    }

    bool has_isolated_vertex() const;
    bool is_connected() const;

    SmallGraph complement() const;

    // Induced subgraph on the vertices of `mask`, relabelled 0..|mask|-1 in
    // ascending original order.
    SmallGraph induced(std::uint64_t mask) const;

    std::vector<std::pair<int, int>> edges() const;

    // Labelled equality (not isomorphism).
    bool operator==(const SmallGraph& o) const = default;

private:
    int n_ = 0;
    std::vector<std::uint64_t> adj_;
};

// graph6 encoding per McKay's format specification. Encoding writes the
// canonical zero-padded form; decoding rejects malformed input (bad length,
// out-of-range characters, nonzero padding bits) with a position-bearing
// message. An optional ">>graph6<<" header is accepted and stripped.
std::string to_graph6(const SmallGraph& g);
SmallGraph from_graph6(std::string_view s);

// Helpers shared by the 64-bit mask representation.
inline int mask_count(std::uint64_t m) { return std::popcount(m); }
inline int mask_first(std::uint64_t m) { return m ? std::countr_zero(m) : -1; }

inline VertexSet mask_to_set(int universe, std::uint64_t m)
{
    VertexSet s(universe);
    while (m) {
        s.set(std::countr_zero(m));
        m &= m - 1;
    }
    return s;
}

inline std::uint64_t set_to_mask(const VertexSet& s)
{
    std::uint64_t m = 0;
    s.for_each([&](int v) { m |= std::uint64_t{1} << v; });
    return m;
}

} // namespace ramsey
