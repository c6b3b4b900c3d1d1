#include "ramsey/families.hpp"

#include <algorithm>

#include "ramsey/errors.hpp"

namespace ramsey {

void GraphFamily::insert(const SmallGraph& g)
{
    SmallGraph canon = canonical_copy(g);
    std::string key = canonical_form(canon);
    auto pos = std::lower_bound(keys_.begin(), keys_.end(), key,
                                [](const std::string& a, const std::string& b) {
                                    if (a.size() != b.size())
                                        return a.size() < b.size();
                                    return a < b;
                                });
    if (pos != keys_.end() && *pos == key)
        return;
    members_.insert(members_.begin() + (pos - keys_.begin()), std::move(canon));
    keys_.insert(pos, std::move(key));
}

bool GraphFamily::contains_iso(const SmallGraph& g) const
{
    std::string key = canonical_form(g);
    return std::find(keys_.begin(), keys_.end(), key) != keys_.end();
}

namespace {

GraphFamily removals(const SmallGraph& g, const std::vector<VertexSet>& sets)
{
    GraphFamily out;
    for (const auto& s : sets) {
        std::uint64_t keep = g.vertex_mask() & ~set_to_mask(s);
        out.insert(g.induced(keep));
    }
    return out;
}

GraphFamily memberwise_components(const GraphFamily& f)
{
    GraphFamily out;
    for (const auto& m : f.members())
        for (const auto& comp : connected_components(m))
            out.insert(induced_subgraph(m, comp));
    return out;
}

void require_nonempty(const SmallGraph& g, const char* op)
{
    if (g.order() < 1)
        throw Error(std::string(op) + ": graph must have at least one vertex");
}

} // namespace

GraphFamily d_family(const SmallGraph& g)
{
    require_nonempty(g, "d_family");
    return removals(g, maximal_independent_sets(g));
}

GraphFamily d_prime_family(const SmallGraph& h)
{
    require_nonempty(h, "d_prime_family");
    return removals(h, maximum_independent_sets(h));
}

GraphFamily d_c_family(const SmallGraph& h)
{
    require_nonempty(h, "d_c_family");
    return memberwise_components(d_family(h));
}

GraphFamily d_c_prime_family(const SmallGraph& h)
{
    require_nonempty(h, "d_c_prime_family");
    return memberwise_components(d_prime_family(h));
}

GraphFamily components_family(const SmallGraph& h)
{
    require_nonempty(h, "components_family");
    GraphFamily out;
    for (const auto& comp : connected_components(h))
        out.insert(induced_subgraph(h, comp));
    return out;
}

} // namespace ramsey
