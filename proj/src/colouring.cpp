#include "ramsey/colouring.hpp"

#include <charconv>
#include <sstream>

#include <json.hpp>

#include "ramsey/errors.hpp"

namespace ramsey {

Colour colour_from_name(std::string_view s)
{
    if (s == "red")
        return Colour::red;
    if (s == "blue")
        return Colour::blue;
    throw Error("unknown colour '" + std::string(s) + "' (expected red or blue)");
}

TwoColouring::TwoColouring(int n) : n_(n), red_(n, VertexSet(n))
{
    if (n < 0 || n > max_order)
        throw Error("TwoColouring order must be in 0..4096, got " + std::to_string(n));
}

TwoColouring TwoColouring::monochromatic(int n, Colour c)
{
    TwoColouring out(n);
    if (c == Colour::red)
        out.swapped_ = true;
    return out;
}

void TwoColouring::set_colour(int u, int v, Colour c)
{
    if (u < 0 || v < 0 || u >= n_ || v >= n_)
        throw Error("edge endpoint out of range");
    if (u == v)
        throw Error("self-loops are not allowed");
    bool red_bit = (c == Colour::red) != swapped_;
    if (red_bit) {
        red_[u].set(v);
        red_[v].set(u);
    } else {
        red_[u].reset(v);
        red_[v].reset(u);
    }
}

VertexSet TwoColouring::row(int v, Colour c) const
{
    bool want_red_bits = (c == Colour::red) != swapped_;
    if (want_red_bits)
        return red_[v];
    VertexSet s = red_[v].complement();
    s.reset(v);
    return s;
}

std::vector<VertexSet> TwoColouring::rows(Colour c) const
{
    std::vector<VertexSet> out;
    out.reserve(n_);
    for (int v = 0; v < n_; ++v)
        out.push_back(row(v, c));
    return out;
}

TwoColouring TwoColouring::swapped() const
{
    TwoColouring out = *this;
    out.swapped_ = !out.swapped_;
    return out;
}

BitGraph TwoColouring::colour_class(Colour c) const
{
    BitGraph g(n_);
    for (int u = 0; u < n_; ++u) {
        VertexSet r = row(u, c);
        for (int v = r.next(u); v != -1; v = r.next(v))
            g.add_edge(u, v);
    }
    return g;
}

SmallGraph TwoColouring::colour_class_small(Colour c) const
{
    if (n_ > SmallGraph::max_order)
        throw Error("colour_class_small: order exceeds 64; use colour_class");
    SmallGraph g(n_);
    for (int u = 0; u < n_; ++u) {
        VertexSet r = row(u, c);
        for (int v = r.next(u); v != -1; v = r.next(v))
            g.add_edge(u, v);
    }
    return g;
}

bool TwoColouring::operator==(const TwoColouring& o) const
{
    if (n_ != o.n_)
        return false;
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (is_red(u, v) != o.is_red(u, v))
                return false;
    return true;
}

std::string write_colouring(const TwoColouring& c)
{
    std::ostringstream out;
    out << "N " << c.order() << "\n";
    for (int u = 0; u < c.order(); ++u)
        for (int v = u + 1; v < c.order(); ++v)
            if (c.is_red(u, v))
                out << "r " << u << " " << v << "\n";
    return out.str();
}

namespace {

[[noreturn]] void reject(int line_no, const std::string& why)
{
    throw Error("colouring file, line " + std::to_string(line_no) + ": " + why);
}

} // namespace

TwoColouring read_colouring(std::string_view text)
{
    std::istringstream in{std::string(text)};
    std::string line;
    int line_no = 0;

    int n = -1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty())
            continue;
        std::istringstream ls(line);
        std::string tag;
        ls >> tag;
        if (tag != "N")
            reject(line_no, "expected header 'N <order>', got '" + line + "'");
        if (!(ls >> n) || n < 0 || n > TwoColouring::max_order)
            reject(line_no, "bad order in header");
        std::string extra;
        if (ls >> extra)
            reject(line_no, "trailing content after header");
        break;
    }
    if (n < 0)
        throw Error("colouring file: missing 'N <order>' header");

    TwoColouring c(n);
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty())
            continue;
        std::istringstream ls(line);
        std::string tag;
        int u, v;
        if (!(ls >> tag >> u >> v) || tag != "r")
            reject(line_no, "expected 'r <u> <v>', got '" + line + "'");
        std::string extra;
        if (ls >> extra)
            reject(line_no, "trailing content after edge");
        if (u < 0 || v < 0 || u >= n || v >= n)
            reject(line_no, "endpoint out of range for N=" + std::to_string(n));
        if (u == v)
            reject(line_no, "self-loop");
        if (u > v)
            reject(line_no, "edges must be listed with u < v");
        if (c.is_red(u, v))
            reject(line_no, "duplicate edge");
        c.set_colour(u, v, Colour::red);
    }
    return c;
}

std::string write_colouring_json(const TwoColouring& c)
{
    nlohmann::json j;
    j["n"] = c.order();
    auto red = nlohmann::json::array();
    for (int u = 0; u < c.order(); ++u)
        for (int v = u + 1; v < c.order(); ++v)
            if (c.is_red(u, v))
                red.push_back({u, v});
    j["red"] = std::move(red);
    return j.dump();
}

TwoColouring read_colouring_json(std::string_view text)
{
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw Error(std::string("colouring JSON: ") + e.what());
    }
    if (!j.contains("n") || !j["n"].is_number_integer())
        throw Error("colouring JSON: missing integer field 'n'");
    int n = j["n"].get<int>();
    if (n < 0 || n > TwoColouring::max_order)
        throw Error("colouring JSON: order out of range");
    TwoColouring c(n);
    if (j.contains("red")) {
        if (!j["red"].is_array())
            throw Error("colouring JSON: 'red' must be an array of pairs");
        int idx = 0;
        for (const auto& e : j["red"]) {
            if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
                throw Error("colouring JSON: red[" + std::to_string(idx) + "] is not a pair");
            int u = e[0].get<int>(), v = e[1].get<int>();
            if (u < 0 || v < 0 || u >= n || v >= n)
                throw Error("colouring JSON: red[" + std::to_string(idx) + "] endpoint out of range");
            if (u == v)
                throw Error("colouring JSON: red[" + std::to_string(idx) + "] is a self-loop");
            if (c.is_red(u, v))
                throw Error("colouring JSON: red[" + std::to_string(idx) + "] duplicates an edge");
            c.set_colour(u, v, Colour::red);
            ++idx;
        }
    }
    return c;
}

const VertexSet* PartitionSpec::find(std::string_view name) const
{
    for (const auto& [n, s] : blocks)
        if (n == name)
            return &s;
    return nullptr;
}

const VertexSet& PartitionSpec::at(std::string_view name) const
{
    const VertexSet* s = find(name);
    if (!s)
        throw Error("partition has no block named '" + std::string(name) + "'");
    return *s;
}

void PartitionSpec::validate(int n) const
{
    VertexSet seen(n);
    for (const auto& [name, s] : blocks) {
        if (s.universe() != n)
            throw Error("partition block '" + name + "' has wrong universe");
        if (seen.intersects(s))
            throw Error("partition block '" + name + "' overlaps another block");
        seen |= s;
    }
    if (seen != VertexSet::full(n))
        throw Error("partition blocks do not cover the vertex range");
}

} // namespace ramsey
