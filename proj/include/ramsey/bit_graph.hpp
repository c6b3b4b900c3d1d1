#pragma once

#include <optional>
#include <vector>

#include "ramsey/small_graph.hpp"
#include "ramsey/vertex_set.hpp"

namespace ramsey {

// Undirected graph on up to 4096 vertices with wide bitset adjacency rows.
// Hosts for the tiling procedures and colour-class views above 64 vertices.
class BitGraph {
public:
    static constexpr int max_order = 4096;

    BitGraph() = default;
    explicit BitGraph(int n);

    static BitGraph complete(int n);
    static BitGraph from_small(const SmallGraph& g);

    int order() const { return n_; }

    bool has_edge(int u, int v) const { return adj_[u].test(v); }
    void add_edge(int u, int v);
    void remove_edge(int u, int v);

    const VertexSet& neighbours(int v) const { return adj_[v]; }
    int degree(int v) const { return adj_[v].count(); }
    int min_degree() const;
    long edge_count() const;

    BitGraph complement() const;

    SmallGraph induced_small(const VertexSet& s) const;

    // Lexicographically least k-clique, optionally restricted to `within`.
    std::optional<VertexSet> find_clique(int k, const VertexSet* within = nullptr) const;

    // Lexicographically least independent set of size k (clique search on
    // the complement rows, done in place).
    std::optional<VertexSet> find_independent_set(int k, const VertexSet* within = nullptr) const;

    bool operator==(const BitGraph& o) const = default;

private:
    int n_ = 0;
    std::vector<VertexSet> adj_;
};

} // namespace ramsey
