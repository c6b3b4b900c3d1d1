#pragma once

#include <string>
#include <vector>

#include "ramsey/graph_alg.hpp"
#include "ramsey/small_graph.hpp"

namespace ramsey {

// Isomorphism-deduplicated set of small graphs. Members are stored with
// their canonical labelling, sorted by (order, canonical form), so family
// equality is plain member-wise equality and detector scans are stable.
class GraphFamily {
public:
    GraphFamily() = default;

    static GraphFamily of(std::initializer_list<SmallGraph> graphs)
    {
        GraphFamily f;
        for (const auto& g : graphs)
            f.insert(g);
        return f;
    }

    static GraphFamily single(const SmallGraph& g)
    {
        GraphFamily f;
        f.insert(g);
        return f;
    }

    // Inserts the canonical copy unless an isomorphic member exists.
    void insert(const SmallGraph& g);

    bool contains_iso(const SmallGraph& g) const;

    const std::vector<SmallGraph>& members() const { return members_; }
    const std::vector<std::string>& keys() const { return keys_; }

    std::size_t size() const { return members_.size(); }
    bool empty() const { return members_.empty(); }

    bool operator==(const GraphFamily& o) const { return keys_ == o.keys_; }

private:
    std::vector<SmallGraph> members_;
    std::vector<std::string> keys_; // parallel to members_
};

// { G - I : I a maximal independent set of G }, up to isomorphism.
GraphFamily d_family(const SmallGraph& g);

// { H - I : I independent of maximum size alpha(H) }, up to isomorphism.
GraphFamily d_prime_family(const SmallGraph& h);

// Connected components of the members of d_family(H).
GraphFamily d_c_family(const SmallGraph& h);

// Connected components of the members of d_prime_family(H).
GraphFamily d_c_prime_family(const SmallGraph& h);

// Connected components of H itself.
GraphFamily components_family(const SmallGraph& h);

} // namespace ramsey
