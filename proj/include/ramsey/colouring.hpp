#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "ramsey/bit_graph.hpp"
#include "ramsey/small_graph.hpp"
#include "ramsey/vertex_set.hpp"

namespace ramsey {

enum class Colour : std::uint8_t { red, blue };

inline Colour other(Colour c) { return c == Colour::red ? Colour::blue : Colour::red; }
inline const char* colour_name(Colour c) { return c == Colour::red ? "red" : "blue"; }
Colour colour_from_name(std::string_view s);

// Complete graph with every edge red or blue. Only the red rows are stored;
// blue is the complement. An interpretation flag makes red/blue swap an O(1)
// operation.
class TwoColouring {
public:
    static constexpr int max_order = 4096;

    TwoColouring() = default;
    // All edges blue.
    explicit TwoColouring(int n);

    static TwoColouring monochromatic(int n, Colour c);

    int order() const { return n_; }

    bool is_red(int u, int v) const { return bit(u, v) != swapped_; }
    Colour colour(int u, int v) const { return is_red(u, v) ? Colour::red : Colour::blue; }
    void set_colour(int u, int v, Colour c);

    // Neighbours of v in the given colour.
    VertexSet row(int v, Colour c) const;

    // Full adjacency of one colour class, one row per vertex.
    std::vector<VertexSet> rows(Colour c) const;

    // O(1) red/blue exchange (interpretation flag toggle).
    TwoColouring swapped() const;

    BitGraph colour_class(Colour c) const;
    SmallGraph colour_class_small(Colour c) const; // requires order <= 64

    bool operator==(const TwoColouring& o) const;

private:
    bool bit(int u, int v) const { return red_[u].test(v); }

    int n_ = 0;
    std::vector<VertexSet> red_;
    bool swapped_ = false;
};

// Text format: line 1 "N <order>", then one "r <u> <v>" line per red edge
// with u < v, 0-indexed; unlisted pairs are blue. Rejects malformed input
// with the offending line number.
std::string write_colouring(const TwoColouring& c);
TwoColouring read_colouring(std::string_view text);

// JSON equivalent {"n": N, "red": [[u,v],...]}.
std::string write_colouring_json(const TwoColouring& c);
TwoColouring read_colouring_json(std::string_view text);

// Named disjoint vertex blocks covering 0..N-1.
struct PartitionSpec {
    std::vector<std::pair<std::string, VertexSet>> blocks;

    const VertexSet* find(std::string_view name) const;
    const VertexSet& at(std::string_view name) const;

    // Disjointness and coverage of 0..n-1; throws on violation.
    void validate(int n) const;
};

} // namespace ramsey
