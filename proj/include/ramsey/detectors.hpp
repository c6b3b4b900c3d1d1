#pragma once

#include <optional>
#include <vector>

#include "ramsey/colouring.hpp"
#include "ramsey/families.hpp"
#include "ramsey/small_graph.hpp"
#include "ramsey/vertex_set.hpp"

namespace ramsey {

// Injective map of a pattern into a colouring; every pattern edge lands on
// a host edge of the stated colour. map[i] is the host vertex of pattern
// vertex i.
struct Embedding {
    SmallGraph pattern;
    Colour colour = Colour::red;
    std::vector<int> map;

    VertexSet host_set(int n) const { return VertexSet::from_vertices(n, map); }
};

// Pairwise vertex-disjoint embeddings of one pattern in one colour.
struct Packing {
    std::vector<Embedding> copies;
};

// Red clique, blue clique, all cross edges of one colour.
struct Join {
    VertexSet red_part;
    VertexSet blue_part;
    Colour join_colour = Colour::red;
};

// 2|H| - alpha(H) vertices containing a red and a blue copy of H.
struct Tie {
    VertexSet set;
    Embedding red_copy;
    Embedding blue_copy;
};

// Searches accept an optional forbidden set so callers can restrict to the
// available vertices without copying the colouring.
struct DetectOptions {
    const VertexSet* forbidden = nullptr;
};

std::optional<Embedding> find_mono_copy(const TwoColouring& c, const SmallGraph& h, Colour colour,
                                        const DetectOptions& opts = {});

// Exact search for n disjoint copies: branch on the lowest uncovered vertex
// (it is in some copy through it, or in none), with a greedy packing tried
// first. Absence means absence.
std::optional<Packing> find_disjoint_copies(const TwoColouring& c, const SmallGraph& h, Colour colour,
                                            int n, const DetectOptions& opts = {});

std::optional<Embedding> find_family_copy(const TwoColouring& c, const GraphFamily& f, Colour colour,
                                          const DetectOptions& opts = {});

// n disjoint embeddings, each of some (possibly different) family member.
std::optional<std::vector<Embedding>> find_family_packing(const TwoColouring& c, const GraphFamily& f,
                                                          Colour colour, int n,
                                                          const DetectOptions& opts = {});

// Exact tie search: enumerates red copies of H, completes each with a blue
// copy overlapping it in at least alpha(H) vertices, then pads the union to
// exactly 2|H|-alpha(H) vertices. When `demand` is given, only ties whose
// vertex set meets it are reported.
std::optional<Tie> find_h_tie(const TwoColouring& c, const SmallGraph& h, const DetectOptions& opts = {},
                              const VertexSet* demand = nullptr);

std::optional<Join> find_join(const TwoColouring& c, const VertexSet& r_cand, const VertexSet& b_cand,
                              int k, int l);

bool verify_embedding(const TwoColouring& c, const Embedding& e);
bool verify_packing(const TwoColouring& c, const Packing& p);
bool verify_tie(const TwoColouring& c, const Tie& t);
bool verify_join(const TwoColouring& c, const Join& j);

} // namespace ramsey
