#include "ramsey/solver.hpp"

#include <algorithm>
#include <chrono>
#include <limits>

#include "ramsey/detectors.hpp"
#include "ramsey/errors.hpp"

namespace ramsey {

namespace {

using u64 = std::uint64_t;

struct TargetState {
    int copies = 1;
    std::vector<const SmallGraph*> edged;
    int edgeless_min = std::numeric_limits<int>::max();
    int min_member = std::numeric_limits<int>::max();

    explicit TargetState(const Target& t) : copies(t.copies)
    {
        for (const auto& m : t.family.members()) {
            min_member = std::min(min_member, m.order());
            if (m.edge_count() == 0)
                edgeless_min = std::min(edgeless_min, m.order());
            else
                edged.push_back(&m);
        }
    }

    bool has_edgeless() const { return edgeless_min != std::numeric_limits<int>::max(); }

    // satisfied in every colouring of K_n
    bool satisfied_empty(int n) const
    {
        return has_edgeless() && long(copies) * edgeless_min <= n;
    }

    // unsatisfiable in any colouring of K_n
    bool impossible(int n) const { return long(copies) * min_member > n; }
};

class ArrowsEngine {
public:
    ArrowsEngine(int n, const Target& red, const Target& blue)
        : n_(n), ts_{TargetState(red), TargetState(blue)},
          symmetric_(red == blue)
    {
        for (int v = 1; v < n; ++v)
            for (int u = 0; u < v; ++u)
                edges_.emplace_back(u, v);
        for (int c = 0; c < 2; ++c)
            adj_[c].assign(std::size_t(std::max(n, 1)), 0);
        prefix_limit_ = (n + 1) / 2; // canonical check on the first ceil(n/2) vertices
    }

    // true iff a counterexample exists; the witness is stored
    bool search()
    {
        return dfs(0);
    }

    TwoColouring witness() const { return witness_; }
    u64 nodes() const { return nodes_; }

private:
    int n_;
    std::vector<std::pair<int, int>> edges_;
    TargetState ts_[2];
    bool symmetric_;
    int prefix_limit_ = 0;
    std::vector<u64> adj_[2];
    std::vector<u64> copies_[2]; // image masks of complete monochromatic copies
    u64 nodes_ = 0;
    TwoColouring witness_;

    bool dfs(std::size_t idx)
    {
        if (idx == edges_.size()) {
            build_witness();
            return true;
        }
        auto [u, v] = edges_[idx];
        int last = (idx == 0 && symmetric_) ? 0 : 1;
        for (int c = 0; c <= last; ++c) {
            ++nodes_;
            adj_[c][u] |= u64{1} << v;
            adj_[c][v] |= u64{1} << u;
            std::size_t created = enumerate_new_copies(c, u, v);
            bool viable = created == 0 || !satisfied_with_new(c, copies_[c].size() - created);
            if (viable && u == v - 1 && v + 1 <= prefix_limit_)
                viable = prefix_minimal(v);
            if (viable && dfs(idx + 1))
                return true;
            copies_[c].resize(copies_[c].size() - created);
            adj_[c][u] &= ~(u64{1} << v);
            adj_[c][v] &= ~(u64{1} << u);
        }
        return false;
    }

    void build_witness()
    {
        witness_ = TwoColouring(n_);
        for (auto [u, v] : edges_)
            if ((adj_[0][u] >> v) & 1)
                witness_.set_colour(u, v, Colour::red);
    }

    // All embeddings in colour c that use edge (u,v); each copy appears once,
    // keyed by its image mask. Returns the number appended.
    std::size_t enumerate_new_copies(int c, int u, int v)
    {
        std::size_t before = copies_[c].size();
        for (const SmallGraph* m : ts_[c].edged) {
            if (m->order() > n_)
                continue;
            for (auto [p, q] : m->edges()) {
                extend_anchor(c, *m, p, q, u, v);
                extend_anchor(c, *m, p, q, v, u);
            }
        }
        return copies_[c].size() - before;
    }

    void extend_anchor(int c, const SmallGraph& m, int p, int q, int hu, int hv)
    {
        std::vector<int> map(std::size_t(m.order()), -1);
        map[p] = hu;
        map[q] = hv;
        extend(c, m, map, (u64{1} << hu) | (u64{1} << hv), 0);
    }

    void extend(int c, const SmallGraph& m, std::vector<int>& map, u64 used, int i)
    {
        if (i == m.order()) {
            u64 mask = used;
            for (u64 existing : copies_[c])
                if (existing == mask)
                    return;
            copies_[c].push_back(mask);
            return;
        }
        if (map[i] != -1) {
            // check adjacency against previously mapped vertices
            for (int j = 0; j < i; ++j)
                if (map[j] != -1 && m.has_edge(j, i)
                    && !((adj_[c][map[j]] >> map[i]) & 1))
                    return;
            extend(c, m, map, used, i + 1);
            return;
        }
        u64 cand = (n_ == 64 ? ~u64{0} : (u64{1} << n_) - 1) & ~used;
        for (int j = 0; j < i; ++j)
            if (map[j] != -1 && m.has_edge(j, i))
                cand &= adj_[c][map[j]];
        // pattern vertices mapped ahead of i constrain it too
        while (cand) {
            int w = std::countr_zero(cand);
            cand &= cand - 1;
            bool ok = true;
            for (int j = i + 1; j < m.order() && ok; ++j)
                if (map[j] != -1 && m.has_edge(i, j) && !((adj_[c][w] >> map[j]) & 1))
                    ok = false;
            if (!ok)
                continue;
            map[i] = w;
            extend(c, m, map, used | (u64{1} << w), i + 1);
            map[i] = -1;
        }
    }

    // Is the target in colour c now satisfied? A fresh satisfaction must use
    // at least one copy created by the latest assignment.
    bool satisfied_with_new(int c, std::size_t first_new)
    {
        const auto& list = copies_[c];
        for (std::size_t j = first_new; j < list.size(); ++j) {
            if (complete_packing(c, list[j], 1, 0))
                return true;
        }
        return false;
    }

    bool edgeless_completes(const TargetState& t, int placed, u64 used) const
    {
        return t.has_edgeless()
               && long(t.copies - placed) * t.edgeless_min <= long(n_) - std::popcount(used);
    }

    bool complete_packing(int c, u64 used, int placed, std::size_t from)
    {
        const TargetState& t = ts_[c];
        if (placed >= t.copies)
            return true;
        if (edgeless_completes(t, placed, used))
            return true;
        const auto& list = copies_[c];
        for (std::size_t i = from; i < list.size(); ++i) {
            if (list[i] & used)
                continue;
            if (complete_packing(c, used | list[i], placed + 1, i + 1))
                return true;
        }
        return false;
    }

    // Lexicographic minimality of the colouring restricted to vertices 0..v
    // over all their permutations; red sorts before blue.
    bool prefix_minimal(int v)
    {
        int m = v + 1;
        std::vector<int> perm(m);
        for (int i = 0; i < m; ++i)
            perm[i] = i;
        std::vector<std::pair<int, int>> block;
        for (int b = 1; b < m; ++b)
            for (int a = 0; a < b; ++a)
                block.emplace_back(a, b);
        while (std::next_permutation(perm.begin(), perm.end())) {
            int verdict = 0; // -1 permuted smaller, +1 larger
            for (auto [a, b] : block) {
                int orig = ((adj_[0][a] >> b) & 1) ? 0 : 1;
                int mapped = ((adj_[0][perm[a]] >> perm[b]) & 1) ? 0 : 1;
                if (mapped != orig) {
                    verdict = mapped < orig ? -1 : 1;
                    break;
                }
            }
            if (verdict < 0)
                return false;
        }
        return true;
    }
};

void verify_counterexample(const TwoColouring& c, const Target& red, const Target& blue)
{
    if (find_family_packing(c, red.family, Colour::red, red.copies))
        throw Error("arrows: internal error, counterexample contains the red target");
    if (find_family_packing(c, blue.family, Colour::blue, blue.copies))
        throw Error("arrows: internal error, counterexample contains the blue target");
}

} // namespace

const std::map<int, int>& verified_clique_table()
{
    static const std::map<int, int> table{{1, 1}, {2, 2}, {3, 6}};
    return table;
}

ArrowsResult arrows(int n, const Target& red, const Target& blue, const SolverOptions& opts)
{
    if (n < 0 || n > TwoColouring::max_order)
        throw Error("arrows: order out of range");
    if (red.copies < 1 || blue.copies < 1 || red.family.empty() || blue.family.empty())
        throw Error("arrows: targets need a non-empty family and at least one copy");

    auto t0 = std::chrono::steady_clock::now();
    ArrowsResult out;
    out.record.scheme = "trivial";

    TargetState rs(red), bs(blue);
    auto finish = [&](ArrowsResult r) {
        r.record.elapsed_ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                .count();
        return r;
    };

    // decidable without search
    if (rs.satisfied_empty(n) || bs.satisfied_empty(n)) {
        out.arrows = true;
        return finish(out);
    }
    if (rs.impossible(n)) {
        // the all-red colouring defeats both sides
        out.arrows = false;
        out.counterexample = TwoColouring::monochromatic(n, Colour::red);
        verify_counterexample(*out.counterexample, red, blue);
        return finish(out);
    }
    if (bs.impossible(n)) {
        out.arrows = false;
        out.counterexample = TwoColouring::monochromatic(n, Colour::blue);
        verify_counterexample(*out.counterexample, red, blue);
        return finish(out);
    }

    if (n > opts.cap)
        throw CapError("arrows: order " + std::to_string(n) + " is out of desk range (cap "
                    + std::to_string(opts.cap) + "); raise the cap explicitly to try anyway");

    ArrowsEngine engine(n, red, blue);
    bool counter = engine.search();
    out.record.scheme = "colex-dfs/forced-prune/prefix-minimal-v1";
    out.record.nodes = engine.nodes();
    out.arrows = !counter;
    if (counter) {
        out.counterexample = engine.witness();
        verify_counterexample(*out.counterexample, red, blue);
    }
    return finish(out);
}

RamseyResult ramsey_number(const Target& red, const Target& blue, int hint_lo,
                           std::optional<int> hint_hi, const SolverOptions& opts)
{
    RamseyResult res;
    res.bracket_lo = std::max(1, hint_lo);
    std::optional<TwoColouring> last_counter;

    for (int n = res.bracket_lo;; ++n) {
        if (hint_hi && n > *hint_hi) {
            res.complete = false;
            res.bracket_lo = n; // everything below n failed to arrow
            res.bracket_hi = std::nullopt;
            return res;
        }
        ArrowsResult a;
        try {
            a = arrows(n, red, blue, opts);
        } catch (const CapError&) {
            res.complete = false;
            res.bracket_lo = n;
            res.bracket_hi = std::nullopt;
            return res;
        }
        res.record.nodes += a.record.nodes;
        res.record.elapsed_ms += a.record.elapsed_ms;
        if (a.arrows) {
            res.complete = true;
            res.value = n;
            res.bracket_lo = n;
            res.bracket_hi = n;
            if (!last_counter && n > 0) {
                // the scan began at its answer; fetch the witness one below
                try {
                    ArrowsResult below = arrows(n - 1, red, blue, opts);
                    res.record.nodes += below.record.nodes;
                    last_counter = below.counterexample;
                } catch (const CapError&) {
                }
            }
            res.witness = last_counter;
            return res;
        }
        last_counter = a.counterexample;
    }
}

FormulaReport formula_clique(int k, int n, const SolverOptions& opts)
{
    if (k < 2)
        throw Error("formula_clique: k must be at least 2");
    if (n < 1)
        throw Error("formula_clique: n must be at least 1");
    const auto& table = verified_clique_table();
    auto it = table.find(k - 1);
    if (it == table.end())
        throw Error("formula_clique: r(K_" + std::to_string(k - 1)
                    + ") is outside the verified base table (entries for K_1..K_3 only)");
    FormulaReport rep;
    rep.value = long(2 * k - 1) * n + it->second - 2;
    rep.asymptotic_regime = true;
    if (rep.value <= opts.cap) {
        Target t = Target::copies_of(SmallGraph::complete(k), n);
        try {
            RamseyResult r = ramsey_number(t, t, 1, std::nullopt, opts);
            if (r.complete)
                rep.engine_confirms = (r.value == rep.value);
        } catch (const Error&) {
        }
    }
    return rep;
}

FormulaReport formula_asym(const SmallGraph& g, const SmallGraph& h, int n,
                           const SolverOptions& opts)
{
    if (g.order() < 1 || g.edge_count() < 1)
        throw Error("formula_asym: G must have at least one edge");
    if (!h.is_connected() || h.order() < 1)
        throw Error("formula_asym: H must be connected and non-empty");
    if (n < 1)
        throw Error("formula_asym: n must be at least 1");

    Target base_red{d_family(g), 1};
    Target base_blue{GraphFamily::single(h), 1};
    RamseyResult base = ramsey_number(base_red, base_blue, 1, std::nullopt, opts);
    if (!base.complete)
        throw Error("formula_asym: the base number r(d_family(G), H) is out of desk range (>= "
                    + std::to_string(base.bracket_lo) + ")");

    FormulaReport rep;
    rep.value = long(n) * h.order() + base.value - 1;
    rep.asymptotic_regime = true;
    if (rep.value <= opts.cap) {
        try {
            RamseyResult r = ramsey_number(Target{GraphFamily::single(g), 1},
                                           Target::copies_of(h, n), 1, std::nullopt, opts);
            if (r.complete)
                rep.engine_confirms = (r.value == rep.value);
        } catch (const Error&) {
        }
    }
    return rep;
}

TwoColouring extremal_e_colouring(const GraphFamily& avoid_red, const GraphFamily& avoid_blue,
                                  const SolverOptions& opts)
{
    RamseyResult r = ramsey_number(Target{avoid_red, 1}, Target{avoid_blue, 1}, 1, std::nullopt,
                                   opts);
    if (!r.complete)
        throw Error("extremal_e_colouring: r(avoid_red, avoid_blue) is out of desk range (>= "
                    + std::to_string(r.bracket_lo) + ")");
    if (!r.witness)
        throw Error("extremal_e_colouring: missing witness");
    return *r.witness;
}

ConstantBracket c_constant_bracket(const SmallGraph& h, const SolverOptions& opts)
{
    if (!h.is_connected() || h.order() < 1 || h.has_isolated_vertex())
        throw Error("c_constant_bracket: H must be connected without isolated vertices");
    GraphFamily d = d_family(h);
    RamseyResult lo = ramsey_number(Target{d_c_family(h), 1}, Target{d, 1}, 1, std::nullopt, opts);
    RamseyResult hi = ramsey_number(Target{d_c_prime_family(h), 1}, Target{d, 1}, 1, std::nullopt,
                                    opts);
    if (!lo.complete || !hi.complete)
        throw Error("c_constant_bracket: a base Ramsey number is out of desk range");
    return {lo.value - 2, hi.value - 2};
}

} // namespace ramsey
