#include "ramsey/small_graph.hpp"

#include <stdexcept>

#include "ramsey/errors.hpp"

namespace ramsey {

SmallGraph::SmallGraph(int n) : n_(n), adj_(n, 0)
{
    if (n < 0 || n > max_order)
        throw Error("SmallGraph order must be in 0..64, got " + std::to_string(n));
}

SmallGraph SmallGraph::from_edges(int n, std::initializer_list<std::pair<int, int>> edges)
{
    SmallGraph g(n);
    for (auto [u, v] : edges)
        g.add_edge(u, v);
    return g;
}

SmallGraph SmallGraph::complete(int n)
{
    SmallGraph g(n);
    for (int v = 0; v < n; ++v)
        g.adj_[v] = g.vertex_mask() & ~(std::uint64_t{1} << v);
    return g;
}

SmallGraph SmallGraph::path(int n)
{
    SmallGraph g(n);
    for (int v = 0; v + 1 < n; ++v)
        g.add_edge(v, v + 1);
    return g;
}

SmallGraph SmallGraph::cycle(int n)
{
    SmallGraph g = path(n);
    if (n >= 3)
        g.add_edge(n - 1, 0);
    return g;
}

SmallGraph SmallGraph::disjoint_union(const SmallGraph& a, const SmallGraph& b)
{
    SmallGraph g(a.order() + b.order());
    for (auto [u, v] : a.edges())
        g.add_edge(u, v);
    for (auto [u, v] : b.edges())
        g.add_edge(a.order() + u, a.order() + v);
    return g;
}

SmallGraph SmallGraph::petersen()
{
    SmallGraph g(10);
    for (int i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);        // outer cycle
        g.add_edge(5 + i, 5 + (i + 2) % 5); // inner pentagram
        g.add_edge(i, 5 + i);               // spokes
    }
    return g;
}

int SmallGraph::edge_count() const
{
    int deg2 = 0;
    for (int v = 0; v < n_; ++v)
        deg2 += degree(v);
    return deg2 / 2;
}

void SmallGraph::add_edge(int u, int v)
{
    if (u < 0 || v < 0 || u >= n_ || v >= n_)
        throw Error("edge endpoint out of range");
    if (u == v)
        throw Error("self-loops are not allowed");
    adj_[u] |= std::uint64_t{1} << v;
    adj_[v] |= std::uint64_t{1} << u;
}

void SmallGraph::remove_edge(int u, int v)
{
    adj_[u] &= ~(std::uint64_t{1} << v);
    adj_[v] &= ~(std::uint64_t{1} << u);
}

bool SmallGraph::has_isolated_vertex() const
{
    for (int v = 0; v < n_; ++v)
        if (adj_[v] == 0)
            return true;
    return false;
}

bool SmallGraph::is_connected() const
{
    if (n_ <= 1)
        return true;
    std::uint64_t seen = 1, frontier = 1;
    while (frontier) {
        std::uint64_t next = 0;
        while (frontier) {
            int v = std::countr_zero(frontier);
            frontier &= frontier - 1;
            next |= adj_[v];
        }
        frontier = next & ~seen;
        seen |= next;
    }
    return seen == vertex_mask();
}

SmallGraph SmallGraph::complement() const
{
    SmallGraph g(n_);
    for (int v = 0; v < n_; ++v)
        g.adj_[v] = vertex_mask() & ~adj_[v] & ~(std::uint64_t{1} << v);
    return g;
}

SmallGraph SmallGraph::induced(std::uint64_t mask) const
{
    std::vector<int> verts;
    std::uint64_t m = mask;
    while (m) {
        verts.push_back(std::countr_zero(m));
        m &= m - 1;
    }
    SmallGraph g(int(verts.size()));
    for (std::size_t i = 0; i < verts.size(); ++i)
        for (std::size_t j = i + 1; j < verts.size(); ++j)
            if (has_edge(verts[i], verts[j]))
                g.add_edge(int(i), int(j));
    return g;
}

std::vector<std::pair<int, int>> SmallGraph::edges() const
{
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u) {
        std::uint64_t m = adj_[u] & ~((std::uint64_t{1} << u) | ((std::uint64_t{1} << u) - 1));
        while (m) {
            out.emplace_back(u, std::countr_zero(m));
            m &= m - 1;
        }
    }
    return out;
}

namespace {

constexpr std::string_view g6_header = ">>graph6<<";

void append_bits(std::string& out, const std::vector<bool>& bits)
{
    for (std::size_t i = 0; i < bits.size(); i += 6) {
        int x = 0;
        for (std::size_t j = 0; j < 6; ++j) {
            x <<= 1;
            if (i + j < bits.size() && bits[i + j])
                x |= 1;
        }
        out.push_back(char(x + 63));
    }
}

} // namespace

std::string to_graph6(const SmallGraph& g)
{
    int n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(char(n + 63));
    } else {
        out.push_back('~');
        out.push_back(char(((n >> 12) & 63) + 63));
        out.push_back(char(((n >> 6) & 63) + 63));
        out.push_back(char((n & 63) + 63));
    }
    std::vector<bool> bits;
    bits.reserve(std::size_t(n) * (n - 1) / 2);
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
            bits.push_back(g.has_edge(i, j));
    append_bits(out, bits);
    return out;
}

SmallGraph from_graph6(std::string_view s)
{
    if (s.substr(0, g6_header.size()) == g6_header)
        s.remove_prefix(g6_header.size());
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r'))
        s.remove_suffix(1);
    if (s.empty())
        throw Error("graph6: empty input");

    auto need = [&](std::size_t pos) -> int {
        if (pos >= s.size())
            throw Error("graph6: truncated input at position " + std::to_string(pos));
        char c = s[pos];
        if (c < 63 || c > 126)
            throw Error("graph6: character out of range at position " + std::to_string(pos));
        return c - 63;
    };

    std::size_t pos = 0;
    long n;
    if (s[0] != '~') {
        n = need(pos++);
    } else {
        ++pos;
        if (pos < s.size() && s[pos] == '~')
            throw Error("graph6: graphs beyond 64 vertices are not supported");
        long a = need(pos++), b = need(pos++), c = need(pos++);
        n = (a << 12) | (b << 6) | c;
    }
    if (n > SmallGraph::max_order)
        throw Error("graph6: order " + std::to_string(n) + " exceeds the 64-vertex cap");

    long nbits = n * (n - 1) / 2;
    std::size_t nbytes = std::size_t((nbits + 5) / 6);
    if (s.size() - pos != nbytes)
        throw Error("graph6: expected " + std::to_string(nbytes) + " data characters, got "
                    + std::to_string(s.size() - pos));

    SmallGraph g{static_cast<int>(n)};
    long bit = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++bit) {
            int byte = need(pos + std::size_t(bit / 6));
            if ((byte >> (5 - bit % 6)) & 1)
                g.add_edge(i, j);
        }
    }
    // Padding bits of the final character must be zero.
    for (; bit < long(nbytes) * 6; ++bit) {
        int byte = need(pos + std::size_t(bit / 6));
        if ((byte >> (5 - bit % 6)) & 1)
            throw Error("graph6: nonzero padding bit at position " + std::to_string(pos + std::size_t(bit / 6)));
    }
    return g;
}

} // namespace ramsey
