#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "ramsey/colouring.hpp"
#include "ramsey/families.hpp"
#include "ramsey/small_graph.hpp"

namespace ramsey {

// A colour class satisfies a target when it holds `copies` pairwise
// vertex-disjoint embeddings, each of some member of the family.
struct Target {
    GraphFamily family;
    int copies = 1;

    static Target copies_of(const SmallGraph& h, int n) { return {GraphFamily::single(h), n}; }

    bool operator==(const Target& o) const
    {
        return copies == o.copies && family == o.family;
    }
};

struct ExhaustionRecord {
    std::uint64_t nodes = 0;
    std::string scheme = "colex-dfs/forced-prune/prefix-minimal-v1";
    double elapsed_ms = 0; // informational; excluded from machine output
};

struct ArrowsResult {
    bool arrows = false;
    std::optional<TwoColouring> counterexample; // verified when present
    ExhaustionRecord record;
};

struct SolverOptions {
    int cap = 10;     // largest order submitted to open two-sided search
    int threads = 1;  // accepted for interface compatibility; the search is sequential
};

struct RamseyResult {
    bool complete = false;
    int value = -1;                      // set when complete
    std::optional<TwoColouring> witness; // order value-1, free of both targets
    ExhaustionRecord record;
    int bracket_lo = 1;                  // the exact value is always >= bracket_lo
    std::optional<int> bracket_hi;       // and <= bracket_hi when known
};

// True iff every 2-colouring of K_n has the red target in red or the blue
// target in blue. A false answer carries a detector-verified counterexample.
// Arithmetically decidable instances (edgeless members fit, or a target
// cannot fit at all) bypass the cap; otherwise n above the cap throws.
ArrowsResult arrows(int n, const Target& red, const Target& blue, const SolverOptions& opts = {});

// Linear upward scan from hint_lo (arrowing is monotone in n). A cap or
// hint_hi exhaustion yields an incomplete result carrying the bracket.
RamseyResult ramsey_number(const Target& red, const Target& blue, int hint_lo = 1,
                           std::optional<int> hint_hi = {}, const SolverOptions& opts = {});

struct FormulaReport {
    long value = 0;
    bool asymptotic_regime = true;        // the matching theorems hold for large n only
    std::optional<bool> engine_confirms;  // set when the engine can decide at this n
};

// (2k-1)n + r(K_{k-1}) - 2 with r(K_{k-1}) from the engine-verified base
// table; k = 5 and beyond is a dependency error.
FormulaReport formula_clique(int k, int n, const SolverOptions& opts = {});

// n|H| + r(d_family(G), H) - 1 with the base Ramsey number computed exactly.
FormulaReport formula_asym(const SmallGraph& g, const SmallGraph& h, int n,
                           const SolverOptions& opts = {});

// Maximum-order colouring with no red member of avoid_red and no blue member
// of avoid_blue; its order is r(avoid_red, avoid_blue) - 1.
TwoColouring extremal_e_colouring(const GraphFamily& avoid_red, const GraphFamily& avoid_blue,
                                  const SolverOptions& opts = {});

// Bracket for the additive constant of r(nH) - (2|H|-alpha(H))n in the large-n
// regime: [r(d_c(H), d(H)) - 2, r(d_c'(H), d(H)) - 2]. Reported as a pair
// without choosing a point when the ends differ.
struct ConstantBracket {
    int lo = 0;
    int hi = 0;
};
ConstantBracket c_constant_bracket(const SmallGraph& h, const SolverOptions& opts = {});

// r(K_k) for k = 1, 2, 3 — every entry reproduced by this engine in the test
// suite before formula_clique trusts it.
const std::map<int, int>& verified_clique_table();

} // namespace ramsey
