#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ramsey/bit_graph.hpp"
#include "ramsey/small_graph.hpp"
#include "ramsey/vertex_set.hpp"

namespace ramsey {

// ---------------------------------------------------------------------------
// Dense-subgraph extraction.
//
// Iterative deletion: while some vertex has non-degree at least m/d - 1 in
// the current m-vertex remainder, select the lowest-index vertex of maximum
// non-degree and keep only its non-neighbours. Selected vertices are pairwise
// non-adjacent, so reaching k-1 selections exhibits an independent k-set and
// the alpha(G) < k precondition fails (reported with that witness). On normal
// termination the survivors S satisfy |S| >= |G|/d^(k-1) and
// min-degree(G[S]) >= (1 - 1/d)|S|, both as exact integer inequalities.
VertexSet extract_dense_subgraph(const BitGraph& g, int k, int d);

// ---------------------------------------------------------------------------
// Robust random subsets.

struct RobustOptions {
    bool best_effort = false; // skip the analytic applicability condition
    int retry_cap = 1000;
};

// Uniformly sampled m-subset S, resampled until every vertex of g has more
// than d neighbours inside S. d is floored on entry. Unless best_effort is
// set, the analytic condition m*m' < r^floor((r-1)d) with r = (m*delta)/(m'*d)
// is validated first.
VertexSet robust_subset(const BitGraph& g, int m, double d, std::uint64_t seed,
                        const RobustOptions& opts = {});

// ---------------------------------------------------------------------------
// Resilient bipartite gadget.
//
// Bipartition (X u Y, Z) with |X| = |Y| = 2k and |Z| = 3k. Built by placing
// `matchings` independent random perfect matchings between Y and Z1 (the
// first 2k right vertices), duplicating Y to get X and the first k vertices
// of Z1 to get Z2. Left slots 0..2k-1 are X, 2k..4k-1 are Y.
struct ResilientGadget {
    int k = 0;
    int matchings = 0;
    std::vector<VertexSet> left; // 4k rows over the right universe 3k

    int left_size() const { return 4 * k; }
    int right_size() const { return 3 * k; }
    int max_degree() const;
    long edge_count() const;
    std::vector<std::pair<int, int>> edges() const; // (left slot, right vertex)
};

struct ResilienceReport {
    bool ok = true;
    bool sampled = false;  // true when only `cap` random subsets were checked
    long checked = 0;
    std::vector<int> failing_subset; // X' slots of the first failure
};

// For each X' of k X-slots (all C(2k,k) of them when that count is at most
// cap, else cap uniform samples) check a perfect matching between X' u Y and
// Z via augmenting paths.
ResilienceReport verify_resilience(const ResilientGadget& g, int cap);

// Build by the recipe (20 random matchings) and verify degree and resilience,
// regenerating with fresh randomness on failure.
ResilientGadget resilient_bipartite(int k, std::uint64_t seed, int retry_cap = 10000);

// Generalized builder used by the tiling pipeline with scaled matching
// counts; resilient_bipartite is the recipe instantiation.
ResilientGadget build_matching_gadget(int k, int matchings, std::uint64_t seed);

// Perfect matching of every left row into distinct right vertices
// (Kuhn's augmenting paths); match[i] is the right vertex of left i.
std::optional<std::vector<int>> perfect_matching(const std::vector<VertexSet>& left_rows,
                                                 int right_size);

// ---------------------------------------------------------------------------
// Tilings.

struct TilingCertificate {
    SmallGraph pattern;            // K_k throughout this module
    std::vector<VertexSet> tiles;
    VertexSet leftover;
};

// Full-host certificate: disjoint tiles each inducing the pattern, tiles plus
// leftover partition V(host), |leftover| < |pattern|.
bool verify_tiling(const BitGraph& host, const TilingCertificate& cert,
                   std::string* why = nullptr);

// Perfect tiling of a vertex subset: leftover empty, tiles partition `cover`.
bool verify_perfect_tiling_of(const BitGraph& host, const TilingCertificate& cert,
                              const VertexSet& cover, std::string* why = nullptr);

// ---------------------------------------------------------------------------
// Local absorber L_S for a k-set S: a fresh k-clique K_S = {w_1..w_k} plus
// for each i a (k-1)-clique C_i in the common neighbourhood of s_i and w_i,
// all disjoint and avoiding F. Perfectly tileable alone ({w_i} u C_i) and
// together with S (K_S plus {s_i} u C_i); both certificates are returned
// verified.
struct LocalAbsorber {
    std::vector<int> s;            // the k absorbed vertices
    std::vector<int> ks;           // K_S clique, aligned with s
    std::vector<std::vector<int>> cliques; // C_i, aligned with s
    VertexSet l_set;               // K_S and all C_i
    TilingCertificate tiling_alone;
    TilingCertificate tiling_with_s;
};

LocalAbsorber local_absorber(const BitGraph& g, const std::vector<int>& s, const VertexSet& forbidden);

// ---------------------------------------------------------------------------
// Absorption tiling.

struct TilingParams {
    std::optional<int> ell;     // gadget size parameter; default n/(4^4 k^2), raised to the feasible floor
    int matchings = 20;         // recipe value; auto-scaled down to fit the host
    bool auto_scale = true;
    int greedy_retries = 8;
    double absorber_fraction = 0.5; // ceiling on |A| as a fraction of |G|
    bool force_absorb = false;  // build and run the absorber even if greedy already finishes
    int resilience_cap = 2000;  // gadget verification budget
};

// Internal absorber state; exposed so the absorb step is testable on its own.
struct Absorber {
    int ell = 0;
    ResilientGadget gadget;          // parameter ell, scaled matchings
    std::vector<int> x_vertices;     // host vertices backing X slots 0..2ell-1
    std::vector<int> y_vertices;     // host vertices backing Y slots
    std::vector<std::vector<int>> z_blocks; // 3ell blocks of k-1 host vertices
    struct EdgeAbsorber {
        int left_slot = -1;
        int z_block = -1;
        LocalAbsorber local;
    };
    std::vector<EdgeAbsorber> locals; // one per gadget edge
    VertexSet all;                    // X u Y u Z u all locals
};

// K_k-tiling of G by greedy collection plus absorption: requires alpha(G) < k
// and min degree at least (7/8)|G|. Returns a verified certificate covering
// all but fewer than k vertices, or throws a StepError naming the failing
// step; never returns an unverified certificate.
TilingCertificate absorption_tiling(const BitGraph& g, int k, const TilingParams& params,
                                    std::uint64_t seed);

// Pipeline pieces, exposed for testing.
Absorber build_absorber(const BitGraph& g, int k, int ell, int matchings, std::uint64_t seed,
                        int resilience_cap);
TilingCertificate absorb_remainder(const BitGraph& g, int k, const Absorber& a,
                                   const VertexSet& remainder,
                                   std::vector<VertexSet> outside_tiles);

// Verified clique-number table used for scaled pipeline thresholds:
// 1, 2, 6, 18 for k = 1..4, and the 4^k estimate beyond.
long clique_ramsey_bound(int k);

} // namespace ramsey
