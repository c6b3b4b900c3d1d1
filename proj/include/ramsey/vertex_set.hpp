#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace ramsey {

// Dynamic bitset over a fixed vertex universe 0..n-1. Trailing bits of the
// last word are kept zero so that count/compare work without masking.
class VertexSet {
public:
    VertexSet() = default;

    explicit VertexSet(int universe) : n_(universe), w_((universe + 63) / 64, 0) {}

    static VertexSet of(int universe, std::initializer_list<int> vs)
    {
        VertexSet s(universe);
        for (int v : vs)
            s.set(v);
        return s;
    }

    static VertexSet from_vertices(int universe, const std::vector<int>& vs)
    {
        VertexSet s(universe);
        for (int v : vs)
            s.set(v);
        return s;
    }

    static VertexSet full(int universe)
    {
        VertexSet s(universe);
        for (int i = 0; i < universe; ++i)
            s.w_[i / 64] |= std::uint64_t{1} << (i % 64);
        return s;
    }

    int universe() const { return n_; }

    bool test(int v) const { return (w_[v / 64] >> (v % 64)) & 1; }
    void set(int v) { w_[v / 64] |= std::uint64_t{1} << (v % 64); }
    void reset(int v) { w_[v / 64] &= ~(std::uint64_t{1} << (v % 64)); }

    void clear()
    {
        for (auto& x : w_)
            x = 0;
    }

    int count() const
    {
        int c = 0;
        for (auto x : w_)
            c += std::popcount(x);
        return c;
    }

    bool empty() const
    {
        for (auto x : w_)
            if (x)
                return false;
        return true;
    }

    int count_and(const VertexSet& o) const
    {
        int c = 0;
        for (std::size_t i = 0; i < w_.size(); ++i)
            c += std::popcount(w_[i] & o.w_[i]);
        return c;
    }

    bool intersects(const VertexSet& o) const
    {
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & o.w_[i])
                return true;
        return false;
    }

    bool is_subset_of(const VertexSet& o) const
    {
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & ~o.w_[i])
                return false;
        return true;
    }

    VertexSet& operator&=(const VertexSet& o)
    {
        for (std::size_t i = 0; i < w_.size(); ++i)
            w_[i] &= o.w_[i];
        return *this;
    }

    VertexSet& operator|=(const VertexSet& o)
    {
        for (std::size_t i = 0; i < w_.size(); ++i)
            w_[i] |= o.w_[i];
        return *this;
    }

    // set difference
    VertexSet& operator-=(const VertexSet& o)
    {
        for (std::size_t i = 0; i < w_.size(); ++i)
            w_[i] &= ~o.w_[i];
        return *this;
    }

    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

    VertexSet complement() const
    {
        VertexSet s = full(n_);
        s -= *this;
        return s;
    }

    // Lowest set vertex, or -1.
    int first() const
    {
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i])
                return int(i) * 64 + std::countr_zero(w_[i]);
        return -1;
    }

    // Lowest set vertex strictly greater than v, or -1.
    int next(int v) const
    {
        int i = (v + 1) / 64;
        if (i >= int(w_.size()))
            return -1;
        std::uint64_t x = w_[i] & (~std::uint64_t{0} << ((v + 1) % 64));
        while (true) {
            if (x)
                return i * 64 + std::countr_zero(x);
            if (++i >= int(w_.size()))
                return -1;
            x = w_[i];
        }
    }

    template <typename F>
    void for_each(F f) const
    {
        for (std::size_t i = 0; i < w_.size(); ++i) {
            std::uint64_t x = w_[i];
            while (x) {
                f(int(i) * 64 + std::countr_zero(x));
                x &= x - 1;
            }
        }
    }

    std::vector<int> to_vector() const
    {
        std::vector<int> out;
        out.reserve(count());
        for_each([&](int v) { out.push_back(v); });
        return out;
    }

    bool operator==(const VertexSet& o) const = default;

    const std::vector<std::uint64_t>& words() const { return w_; }

    // Lexicographic order on the sorted vertex lists (ties broken by size).
    bool lex_less(const VertexSet& o) const
    {
        int a = first(), b = o.first();
        while (a != -1 && b != -1) {
            if (a != b)
                return a < b;
            a = next(a);
            b = o.next(b);
        }
        return a == -1 && b != -1;
    }

private:
    int n_ = 0;
    std::vector<std::uint64_t> w_;
};

} // namespace ramsey
