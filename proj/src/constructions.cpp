#include "ramsey/constructions.hpp"

#include "ramsey/errors.hpp"
#include "ramsey/graph_alg.hpp"

namespace ramsey {

namespace {

void paint_block_red(TwoColouring& c, int lo, int hi)
{
    for (int u = lo; u < hi; ++u)
        for (int v = u + 1; v < hi; ++v)
            c.set_colour(u, v, Colour::red);
}

void paint_cross(TwoColouring& c, int a_lo, int a_hi, int b_lo, int b_hi, Colour col)
{
    for (int u = a_lo; u < a_hi; ++u)
        for (int v = b_lo; v < b_hi; ++v)
            c.set_colour(u, v, col);
}

void copy_block(TwoColouring& c, const TwoColouring& src, int offset)
{
    for (int u = 0; u < src.order(); ++u)
        for (int v = u + 1; v < src.order(); ++v)
            c.set_colour(offset + u, offset + v, src.colour(u, v));
}

VertexSet range_set(int n, int lo, int hi)
{
    VertexSet s(n);
    for (int v = lo; v < hi; ++v)
        s.set(v);
    return s;
}

void require_no_isolated(const SmallGraph& h, const char* op)
{
    if (h.order() < 1)
        throw Error(std::string(op) + ": H must have at least one vertex");
    if (h.has_isolated_vertex())
        throw Error(std::string(op) + ": H has an isolated vertex");
}

std::string embedding_note(const Embedding& e)
{
    std::string s = "colour=" + std::string(colour_name(e.colour)) + " vertices=[";
    for (std::size_t i = 0; i < e.map.size(); ++i)
        s += (i ? "," : "") + std::to_string(e.map[i]);
    return s + "]";
}

} // namespace

ConstructionReport bes_lower(const SmallGraph& h, int n)
{
    require_no_isolated(h, "bes_lower");
    if (n < 1)
        throw Error("bes_lower: n must be at least 1");
    int k = h.order();
    int alpha = independence_number(h);
    int r_size = (k - alpha) * n - 1;
    int b_size = k * n - 1;
    int total = r_size + b_size;

    TwoColouring c(total);
    paint_block_red(c, 0, r_size);
    paint_cross(c, 0, r_size, r_size, total, Colour::red);

    ConstructionReport rep;
    rep.colouring = std::move(c);
    rep.partition.blocks = {{"R", range_set(total, 0, r_size)},
                            {"B", range_set(total, r_size, total)}};
    rep.claims = {{GraphFamily::single(h), n, Colour::red},
                  {GraphFamily::single(h), n, Colour::blue}};
    return rep;
}

ConstructionReport asym_lower(const SmallGraph& g, const SmallGraph& h, int n,
                              const TwoColouring& e_col)
{
    if (g.order() < 1)
        throw Error("asym_lower: G must be non-empty");
    if (h.order() < 1)
        throw Error("asym_lower: H must be non-empty");
    if (!h.is_connected())
        throw Error("asym_lower: H is disconnected; use the components_family variant "
                    "(colour the exceptional block to avoid blue members of components_family(H))");
    if (n < 1)
        throw Error("asym_lower: n must be at least 1");

    GraphFamily dg = d_family(g);
    if (auto bad = find_family_copy(e_col, dg, Colour::red))
        throw Error("asym_lower: e_col contains a red member of d_family(G): " + embedding_note(*bad));
    if (auto bad = find_mono_copy(e_col, h, Colour::blue))
        throw Error("asym_lower: e_col contains a blue copy of H: " + embedding_note(*bad));

    int a_size = n * h.order() - 1;
    int total = a_size + e_col.order();

    TwoColouring c(total); // A internal blue by default
    paint_cross(c, 0, a_size, a_size, total, Colour::red);
    copy_block(c, e_col, a_size);

    ConstructionReport rep;
    rep.colouring = std::move(c);
    rep.partition.blocks = {{"A", range_set(total, 0, a_size)},
                            {"C", range_set(total, a_size, total)}};
    rep.claims = {{GraphFamily::single(g), 1, Colour::red},
                  {GraphFamily::single(h), n, Colour::blue}};
    return rep;
}

ConstructionReport estimate_lower(const SmallGraph& h, int n, const TwoColouring& e_col)
{
    require_no_isolated(h, "estimate_lower");
    if (!h.is_connected())
        throw Error("estimate_lower: H must be connected");
    if (n < 1)
        throw Error("estimate_lower: n must be at least 1");

    if (auto bad = find_family_copy(e_col, d_c_family(h), Colour::red))
        throw Error("estimate_lower: e_col contains a red member of d_c_family(H): "
                    + embedding_note(*bad));
    if (auto bad = find_family_copy(e_col, d_family(h), Colour::blue))
        throw Error("estimate_lower: e_col contains a blue member of d_family(H): "
                    + embedding_note(*bad));

    int k = h.order();
    int alpha = independence_number(h);
    int r_size = (k - alpha) * n - 1;
    int b_size = k * n - 1;

    ConstructionReport rep = critical_template(r_size, b_size, Colour::red, e_col);
    rep.claims = {{GraphFamily::single(h), n, Colour::red},
                  {GraphFamily::single(h), n, Colour::blue}};
    return rep;
}

ConstructionReport critical_template(int r_size, int b_size, Colour join_colour,
                                     const TwoColouring& e_col)
{
    if (r_size < 0 || b_size < 0)
        throw Error("critical_template: block sizes must be non-negative");
    int e_size = e_col.order();
    int total = r_size + b_size + e_size;

    TwoColouring c(total);
    paint_block_red(c, 0, r_size);
    paint_cross(c, 0, r_size, r_size, r_size + b_size, join_colour);
    paint_cross(c, r_size + b_size, total, r_size, r_size + b_size, Colour::red); // E x B red
    // E x R blue is the default
    copy_block(c, e_col, r_size + b_size);

    ConstructionReport rep;
    rep.colouring = std::move(c);
    rep.partition.blocks = {{"R", range_set(total, 0, r_size)},
                            {"B", range_set(total, r_size, r_size + b_size)},
                            {"E", range_set(total, r_size + b_size, total)}};
    return rep;
}

StructureCheck check_critical_structure(const TwoColouring& c, const PartitionSpec& p,
                                        const SmallGraph& h)
{
    const VertexSet& r = p.at("R");
    const VertexSet& b = p.at("B");
    const VertexSet& e = p.at("E");

    StructureCheck out;
    auto record = [&](StructureViolation v) {
        out.ok = false;
        out.violations.push_back(std::move(v));
    };

    auto internal_check = [&](const VertexSet& block, Colour want, const char* name) -> bool {
        auto verts = block.to_vector();
        for (std::size_t i = 0; i < verts.size(); ++i)
            for (std::size_t j = i + 1; j < verts.size(); ++j)
                if (c.colour(verts[i], verts[j]) != want) {
                    record({1,
                            std::string(name) + "-internal edge has the wrong colour",
                            verts[i], verts[j], std::nullopt});
                    return false;
                }
        return true;
    };
    internal_check(r, Colour::red, "R");
    internal_check(b, Colour::blue, "B");

    auto cross_check = [&](const VertexSet& x, const VertexSet& y, std::optional<Colour> want,
                           const char* what) {
        std::optional<Colour> seen = want;
        int su = -1, sv = -1;
        for (int u = x.first(); u != -1; u = x.next(u))
            for (int v = y.first(); v != -1; v = y.next(v)) {
                Colour col = c.colour(u, v);
                if (!seen) {
                    seen = col;
                    su = u;
                    sv = v;
                    continue;
                }
                if (col != *seen) {
                    std::string why = std::string(what) + " is not monochrome";
                    if (want)
                        why = std::string(what) + " edge has the wrong colour";
                    else
                        why += " (differs from edge " + std::to_string(su) + "-"
                               + std::to_string(sv) + ")";
                    record({2, why, u, v, std::nullopt});
                    return;
                }
            }
    };
    cross_check(r, b, std::nullopt, "R x B");
    cross_check(e, r, Colour::blue, "E x R");
    cross_check(e, b, Colour::red, "E x B");

    if (auto tie = find_h_tie(c, h, {}, &e)) {
        record({3, "an H-tie meets E", -1, -1, tie});
    }
    return out;
}

} // namespace ramsey
