#include "ramsey/json_io.hpp"

#include "ramsey/errors.hpp"
#include "ramsey/graph_alg.hpp"

namespace ramsey {

using nlohmann::json;

json to_json(const VertexSet& s)
{
    json out = json::array();
    s.for_each([&](int v) { out.push_back(v); });
    return out;
}

VertexSet vertex_set_from_json(const json& j, int universe)
{
    if (!j.is_array())
        throw Error("certificate JSON: expected a vertex array");
    VertexSet s(universe);
    for (const auto& x : j) {
        if (!x.is_number_integer())
            throw Error("certificate JSON: vertex is not an integer");
        int v = x.get<int>();
        if (v < 0 || v >= universe)
            throw Error("certificate JSON: vertex " + std::to_string(v) + " out of range");
        s.set(v);
    }
    return s;
}

json to_json(const Embedding& e)
{
    json out;
    out["pattern"] = to_graph6(e.pattern);
    out["colour"] = colour_name(e.colour);
    out["map"] = e.map;
    return out;
}

Embedding embedding_from_json(const json& j)
{
    Embedding e;
    e.pattern = from_graph6(j.at("pattern").get<std::string>());
    e.colour = colour_from_name(j.at("colour").get<std::string>());
    e.map = j.at("map").get<std::vector<int>>();
    return e;
}

json to_json(const Packing& p)
{
    json out;
    out["copies"] = json::array();
    for (const auto& e : p.copies)
        out["copies"].push_back(to_json(e));
    return out;
}

Packing packing_from_json(const json& j)
{
    Packing p;
    for (const auto& e : j.at("copies"))
        p.copies.push_back(embedding_from_json(e));
    return p;
}

json to_json(const Tie& t, int universe)
{
    (void)universe;
    json out;
    out["set"] = to_json(t.set);
    out["red"] = to_json(t.red_copy);
    out["blue"] = to_json(t.blue_copy);
    return out;
}

Tie tie_from_json(const json& j, int universe)
{
    Tie t;
    t.set = vertex_set_from_json(j.at("set"), universe);
    t.red_copy = embedding_from_json(j.at("red"));
    t.blue_copy = embedding_from_json(j.at("blue"));
    return t;
}

json to_json(const Join& jn)
{
    json out;
    out["red_part"] = to_json(jn.red_part);
    out["blue_part"] = to_json(jn.blue_part);
    out["colour"] = colour_name(jn.join_colour);
    return out;
}

Join join_from_json(const json& j, int universe)
{
    Join jn;
    jn.red_part = vertex_set_from_json(j.at("red_part"), universe);
    jn.blue_part = vertex_set_from_json(j.at("blue_part"), universe);
    jn.join_colour = colour_from_name(j.at("colour").get<std::string>());
    return jn;
}

json to_json(const TilingCertificate& c)
{
    json out;
    out["pattern"] = "K_" + std::to_string(c.pattern.order());
    out["tiles"] = json::array();
    for (const auto& t : c.tiles)
        out["tiles"].push_back(to_json(t));
    out["leftover"] = to_json(c.leftover);
    return out;
}

TilingCertificate tiling_from_json(const json& j, int universe)
{
    TilingCertificate c;
    std::string pat = j.at("pattern").get<std::string>();
    if (pat.rfind("K_", 0) != 0)
        throw Error("tiling JSON: pattern must be \"K_<k>\"");
    int k = std::stoi(pat.substr(2));
    c.pattern = SmallGraph::complete(k);
    for (const auto& t : j.at("tiles"))
        c.tiles.push_back(vertex_set_from_json(t, universe));
    c.leftover = vertex_set_from_json(j.at("leftover"), universe);
    return c;
}

json partition_to_json(const PartitionSpec& p)
{
    json out;
    for (const auto& [name, s] : p.blocks)
        out[name] = to_json(s);
    return out;
}

PartitionSpec partition_from_json(const json& j, int universe)
{
    PartitionSpec p;
    for (auto it = j.begin(); it != j.end(); ++it)
        p.blocks.emplace_back(it.key(), vertex_set_from_json(it.value(), universe));
    return p;
}

json to_json(const RamseyResult& r, const std::string& witness_path)
{
    json out;
    out["complete"] = r.complete;
    if (r.complete)
        out["value"] = r.value;
    out["bracket"] = json::array({r.bracket_lo,
                                  r.bracket_hi ? json(*r.bracket_hi) : json(nullptr)});
    out["nodes"] = r.record.nodes;
    out["scheme"] = r.record.scheme;
    if (!witness_path.empty())
        out["witness_file"] = witness_path;
    return out;
}

} // namespace ramsey
