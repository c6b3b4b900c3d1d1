#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ramsey/small_graph.hpp"
#include "ramsey/vertex_set.hpp"

namespace ramsey {

// Largest size of a pairwise non-adjacent vertex set.
int independence_number(const SmallGraph& g);

// Every inclusion-maximal independent set, each exactly once, sorted by
// ascending bitmask value.
std::vector<VertexSet> maximal_independent_sets(const SmallGraph& g);

// All independent sets of maximum cardinality, sorted by ascending bitmask.
std::vector<VertexSet> maximum_independent_sets(const SmallGraph& g);

// Some k-clique if one exists; the lexicographically least vertex set is
// returned. k = 0 yields the empty set.
std::optional<VertexSet> find_clique(const SmallGraph& g, int k);

// Partition of V(g) into maximal connected pieces, ordered by least vertex.
std::vector<VertexSet> connected_components(const SmallGraph& g);

// Induced subgraph on S, relabelled ascending. Rejects S outside V(g).
SmallGraph induced_subgraph(const SmallGraph& g, const VertexSet& s);

// Canonical form: equal byte strings iff the graphs are isomorphic, stable
// across runs. Computed by equitable refinement plus individualization
// backtracking, taking the least adjacency encoding over the leaves.
std::string canonical_form(const SmallGraph& g);

// The canonically relabelled copy of g (its adjacency encodes to
// canonical_form(g)).
SmallGraph canonical_copy(const SmallGraph& g);

bool is_isomorphic(const SmallGraph& a, const SmallGraph& b);

} // namespace ramsey
