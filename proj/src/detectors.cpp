#include "ramsey/detectors.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <set>

#include "ramsey/graph_alg.hpp"

namespace ramsey {

namespace {

struct ImageCopy {
    VertexSet image;
    std::vector<int> map;
};

// Recursive embedding search over one colour class. `allowed` is the set of
// usable host vertices; pattern vertices are mapped in index order so the
// result is a deterministic function of the inputs.
struct Embedder {
    const std::vector<VertexSet>& rows;
    const SmallGraph& h;
    VertexSet allowed;
    std::vector<int> map;
    VertexSet used;

    Embedder(const std::vector<VertexSet>& r, const SmallGraph& pat, VertexSet allow)
        : rows(r), h(pat), allowed(std::move(allow)),
          map(std::size_t(pat.order()), -1), used(allowed.universe())
    {
    }

    VertexSet candidates(int i) const
    {
        VertexSet cand = allowed - used;
        for (int j = 0; j < i; ++j)
            if (map[j] >= 0 && h.has_edge(j, i))
                cand &= rows[map[j]];
        return cand;
    }

    bool first(int i)
    {
        if (i == h.order())
            return true;
        VertexSet cand = candidates(i);
        for (int v = cand.first(); v != -1; v = cand.next(v)) {
            map[i] = v;
            used.set(v);
            if (first(i + 1))
                return true;
            used.reset(v);
        }
        map[i] = -1;
        return false;
    }

    // First embedding whose image contains `through`.
    bool first_through(int through)
    {
        if (!allowed.test(through))
            return false;
        for (int p = 0; p < h.order(); ++p) {
            map.assign(map.size(), -1);
            used.clear();
            map[p] = through;
            used.set(through);
            if (extend(0, p))
                return true;
        }
        return false;
    }

    // First embedding with at most `budget` image vertices outside `base`.
    bool first_budget(int i, const VertexSet& base, int budget)
    {
        if (i == h.order())
            return true;
        VertexSet cand = candidates(i);
        for (int v = cand.first(); v != -1; v = cand.next(v)) {
            int cost = base.test(v) ? 0 : 1;
            if (cost > budget)
                continue;
            map[i] = v;
            used.set(v);
            if (first_budget(i + 1, base, budget - cost))
                return true;
            used.reset(v);
        }
        map[i] = -1;
        return false;
    }

    // Every embedding whose image contains `through`, deduplicated by image
    // set (first map kept). Complete patterns take a clique enumeration
    // shortcut, which avoids the automorphism blowup.
    void all_through(int through, std::vector<ImageCopy>& out)
    {
        if (!allowed.test(through))
            return;
        int k = h.order();
        if (k >= 1 && h.edge_count() == k * (k - 1) / 2) {
            VertexSet pool = (allowed - used) & rows[through];
            std::vector<int> cur{through};
            cliques_from(pool, k - 1, cur, out);
            return;
        }
        std::set<std::vector<std::uint64_t>> seen;
        for (int p = 0; p < k; ++p) {
            map.assign(map.size(), -1);
            used.clear();
            map[p] = through;
            used.set(through);
            collect(0, p, seen, out);
        }
    }

private:
    bool extend(int i, int pinned)
    {
        if (i == h.order())
            return true;
        if (i == pinned) {
            for (int j = 0; j < i; ++j)
                if (h.has_edge(j, i) && !rows[map[j]].test(map[i]))
                    return false;
            return extend(i + 1, pinned);
        }
        VertexSet cand = candidates(i);
        for (int v = cand.first(); v != -1; v = cand.next(v)) {
            map[i] = v;
            used.set(v);
            if (extend(i + 1, pinned))
                return true;
            used.reset(v);
        }
        map[i] = -1;
        return false;
    }

    void cliques_from(VertexSet cand, int need, std::vector<int>& cur, std::vector<ImageCopy>& out)
    {
        if (need == 0) {
            out.push_back({VertexSet::from_vertices(allowed.universe(), cur), cur});
            return;
        }
        for (int v = cand.first(); v != -1; v = cand.next(v)) {
            if (cand.count() < need)
                return;
            cur.push_back(v);
            cliques_from(cand & rows[v], need - 1, cur, out);
            cur.pop_back();
            cand.reset(v);
        }
    }

    void collect(int i, int pinned, std::set<std::vector<std::uint64_t>>& seen,
                 std::vector<ImageCopy>& out)
    {
        if (i == h.order()) {
            VertexSet img = VertexSet::from_vertices(allowed.universe(), map);
            if (seen.insert(img.words()).second)
                out.push_back({std::move(img), map});
            return;
        }
        if (i == pinned) {
            for (int j = 0; j < i; ++j)
                if (h.has_edge(j, i) && !rows[map[j]].test(map[i]))
                    return;
            collect(i + 1, pinned, seen, out);
            return;
        }
        VertexSet cand = candidates(i);
        for (int v = cand.first(); v != -1; v = cand.next(v)) {
            map[i] = v;
            used.set(v);
            collect(i + 1, pinned, seen, out);
            used.reset(v);
            map[i] = -1;
        }
    }
};

VertexSet allowed_set(const TwoColouring& c, const DetectOptions& opts)
{
    VertexSet a = VertexSet::full(c.order());
    if (opts.forbidden)
        a -= *opts.forbidden;
    return a;
}

// Exact packing search over a member list. Edged members branch on the
// lowest available vertex (it is in a copy through it, or in none); a
// skipped vertex stays countable for edgeless members, which only need
// room among vertices unused by chosen copies.
struct PackSearch {
    const TwoColouring& c;
    Colour colour;
    int target;
    std::vector<const SmallGraph*> edged;
    int edgeless_min = std::numeric_limits<int>::max();
    int min_member = std::numeric_limits<int>::max();
    std::vector<VertexSet> rows;
    VertexSet base_avail;
    int total_avail = 0;
    int used_count = 0;
    std::vector<Embedding> chosen;

    PackSearch(const TwoColouring& col, const std::vector<const SmallGraph*>& members, Colour cl, int n,
               VertexSet avail)
        : c(col), colour(cl), target(n), rows(col.rows(cl)), base_avail(std::move(avail))
    {
        for (const SmallGraph* m : members) {
            min_member = std::min(min_member, m->order());
            if (m->edge_count() == 0)
                edgeless_min = std::min(edgeless_min, m->order());
            else if (m->order() <= col.order())
                edged.push_back(m);
        }
        total_avail = base_avail.count();
    }

    bool has_edgeless() const { return edgeless_min != std::numeric_limits<int>::max(); }

    bool edgeless_fits(int placed) const
    {
        return has_edgeless()
               && (long(target) - placed) * edgeless_min <= long(total_avail) - used_count;
    }

    // Fill the remaining copies with the smallest edgeless member, drawing
    // from vertices no chosen copy uses (skipped vertices included).
    void finish_with_edgeless()
    {
        VertexSet unused = base_avail;
        for (const auto& e : chosen)
            unused -= e.host_set(c.order());
        SmallGraph pat = SmallGraph::edgeless(edgeless_min);
        while (int(chosen.size()) < target) {
            std::vector<int> verts;
            for (int i = 0; i < edgeless_min; ++i) {
                int v = unused.first();
                verts.push_back(v);
                unused.reset(v);
            }
            chosen.push_back(Embedding{pat, colour, std::move(verts)});
        }
    }

    std::optional<std::vector<Embedding>> run()
    {
        if (greedy())
            return chosen;
        chosen.clear();
        used_count = 0;
        if (exact(base_avail))
            return chosen;
        return std::nullopt;
    }

private:
    bool greedy()
    {
        VertexSet avail = base_avail;
        while (int(chosen.size()) < target) {
            if (edgeless_fits(int(chosen.size()))) {
                finish_with_edgeless();
                return true;
            }
            int v = avail.first();
            if (v == -1)
                return false;
            bool placed = false;
            for (const SmallGraph* m : edged) {
                Embedder e(rows, *m, avail);
                if (e.first_through(v)) {
                    chosen.push_back(Embedding{*m, colour, e.map});
                    used_count += m->order();
                    avail -= VertexSet::from_vertices(c.order(), e.map);
                    placed = true;
                    break;
                }
            }
            if (!placed)
                avail.reset(v);
        }
        return true;
    }

    bool exact(VertexSet avail)
    {
        if (int(chosen.size()) == target)
            return true;
        if (edgeless_fits(int(chosen.size()))) {
            finish_with_edgeless();
            return true;
        }
        long room = long(total_avail) - used_count;
        if (min_member > 0 && long(chosen.size()) + room / min_member < target)
            return false;
        int v = avail.first();
        if (v == -1)
            return false;
        for (const SmallGraph* m : edged) {
            std::vector<ImageCopy> cands;
            Embedder e(rows, *m, avail);
            e.all_through(v, cands);
            for (const auto& copy : cands) {
                chosen.push_back(Embedding{*m, colour, copy.map});
                used_count += m->order();
                if (exact(avail - copy.image))
                    return true;
                used_count -= m->order();
                chosen.pop_back();
            }
        }
        VertexSet rest = avail;
        rest.reset(v);
        return exact(rest);
    }
};

} // namespace

std::optional<Embedding> find_mono_copy(const TwoColouring& c, const SmallGraph& h, Colour colour,
                                        const DetectOptions& opts)
{
    if (h.order() == 0)
        return Embedding{h, colour, {}};
    if (h.order() > c.order())
        return std::nullopt;
    auto rows = c.rows(colour);
    Embedder e(rows, h, allowed_set(c, opts));
    if (!e.first(0))
        return std::nullopt;
    return Embedding{h, colour, e.map};
}

std::optional<Packing> find_disjoint_copies(const TwoColouring& c, const SmallGraph& h, Colour colour,
                                            int n, const DetectOptions& opts)
{
    std::vector<const SmallGraph*> members{&h};
    PackSearch search(c, members, colour, n, allowed_set(c, opts));
    auto found = search.run();
    if (!found)
        return std::nullopt;
    return Packing{std::move(*found)};
}

std::optional<Embedding> find_family_copy(const TwoColouring& c, const GraphFamily& f, Colour colour,
                                          const DetectOptions& opts)
{
    for (const auto& m : f.members()) {
        if (auto e = find_mono_copy(c, m, colour, opts))
            return e;
    }
    return std::nullopt;
}

std::optional<std::vector<Embedding>> find_family_packing(const TwoColouring& c, const GraphFamily& f,
                                                          Colour colour, int n, const DetectOptions& opts)
{
    if (n <= 0)
        return std::vector<Embedding>{};
    std::vector<const SmallGraph*> members;
    for (const auto& m : f.members())
        members.push_back(&m);
    PackSearch search(c, members, colour, n, allowed_set(c, opts));
    return search.run();
}

std::optional<Tie> find_h_tie(const TwoColouring& c, const SmallGraph& h, const DetectOptions& opts,
                              const VertexSet* demand)
{
    int k = h.order();
    if (k == 0)
        return std::nullopt;
    int alpha = independence_number(h);
    int tie_size = 2 * k - alpha;
    VertexSet avail = allowed_set(c, opts);
    if (tie_size > avail.count())
        return std::nullopt;

    auto red_rows = c.rows(Colour::red);
    auto blue_rows = c.rows(Colour::blue);

    // all red copies, each image once, grouped by lowest image vertex
    std::vector<ImageCopy> red_sets;
    for (int v = avail.first(); v != -1; v = avail.next(v)) {
        VertexSet tail = avail;
        for (int u = tail.first(); u != -1 && u < v; u = tail.next(u))
            tail.reset(u);
        Embedder e(red_rows, h, tail);
        e.all_through(v, red_sets);
    }

    for (const auto& red : red_sets) {
        Embedder blue(blue_rows, h, avail);
        if (!blue.first_budget(0, red.image, k - alpha))
            continue;
        VertexSet sb = VertexSet::from_vertices(c.order(), blue.map);
        VertexSet uni = red.image | sb;
        int slack = tie_size - uni.count();
        VertexSet pad_pool = avail - uni;
        VertexSet tie_set = uni;
        if (demand && !uni.intersects(*demand)) {
            if (slack == 0)
                continue;
            VertexSet dpool = pad_pool & *demand;
            int dv = dpool.first();
            if (dv == -1)
                continue;
            tie_set.set(dv);
            pad_pool.reset(dv);
            --slack;
        }
        for (int i = 0; i < slack; ++i) {
            int v = pad_pool.first();
            tie_set.set(v);
            pad_pool.reset(v);
        }
        Tie t;
        t.set = tie_set;
        t.red_copy = Embedding{h, Colour::red, red.map};
        t.blue_copy = Embedding{h, Colour::blue, blue.map};
        return t;
    }
    return std::nullopt;
}

namespace {

// Ascending k-clique enumeration; stops when the callback returns true.
bool cliques_ascending(const std::vector<VertexSet>& rows, VertexSet cand, int k,
                       std::vector<int>& cur, const std::function<bool()>& cb)
{
    if (k == 0)
        return cb();
    for (int v = cand.first(); v != -1; v = cand.next(v)) {
        if (cand.count() < k)
            return false;
        cur.push_back(v);
        VertexSet rest = cand & rows[v];
        for (int u = rest.first(); u != -1 && u <= v; u = rest.next(u))
            rest.reset(u);
        if (cliques_ascending(rows, rest, k - 1, cur, cb))
            return true;
        cur.pop_back();
        cand.reset(v);
    }
    return false;
}

} // namespace

std::optional<Join> find_join(const TwoColouring& c, const VertexSet& r_cand, const VertexSet& b_cand,
                              int k, int l)
{
    if (k < 0 || l < 0 || k > r_cand.count() || l > b_cand.count())
        return std::nullopt;
    auto red_rows = c.rows(Colour::red);
    auto blue_rows = c.rows(Colour::blue);

    std::optional<Join> result;
    std::vector<int> rpart;
    cliques_ascending(red_rows, r_cand, k, rpart, [&]() {
        VertexSet common_red = b_cand, common_blue = b_cand;
        for (int w : rpart) {
            common_red &= red_rows[w];
            common_blue &= blue_rows[w];
        }
        for (Colour jc : {Colour::red, Colour::blue}) {
            const VertexSet& pool = (jc == Colour::red) ? common_red : common_blue;
            std::vector<int> bpart;
            if (cliques_ascending(blue_rows, pool, l, bpart, []() { return true; })) {
                Join j;
                j.red_part = VertexSet::from_vertices(c.order(), rpart);
                j.blue_part = VertexSet::from_vertices(c.order(), bpart);
                j.join_colour = jc;
                result = j;
                return true;
            }
        }
        return false;
    });
    return result;
}

bool verify_embedding(const TwoColouring& c, const Embedding& e)
{
    int n = c.order();
    if (int(e.map.size()) != e.pattern.order())
        return false;
    VertexSet seen(n);
    for (int v : e.map) {
        if (v < 0 || v >= n || seen.test(v))
            return false;
        seen.set(v);
    }
    for (auto [u, v] : e.pattern.edges())
        if (c.colour(e.map[u], e.map[v]) != e.colour)
            return false;
    return true;
}

bool verify_packing(const TwoColouring& c, const Packing& p)
{
    VertexSet used(c.order());
    for (const auto& e : p.copies) {
        if (!verify_embedding(c, e))
            return false;
        if (!(e.pattern == p.copies.front().pattern) || e.colour != p.copies.front().colour)
            return false;
        VertexSet img = e.host_set(c.order());
        if (used.intersects(img))
            return false;
        used |= img;
    }
    return true;
}

bool verify_tie(const TwoColouring& c, const Tie& t)
{
    const SmallGraph& h = t.red_copy.pattern;
    if (!(t.blue_copy.pattern == h))
        return false;
    int k = h.order();
    if (k == 0)
        return false;
    int alpha = independence_number(h);
    if (t.set.count() != 2 * k - alpha)
        return false;
    if (t.red_copy.colour != Colour::red || t.blue_copy.colour != Colour::blue)
        return false;
    if (!verify_embedding(c, t.red_copy) || !verify_embedding(c, t.blue_copy))
        return false;
    if (!t.red_copy.host_set(c.order()).is_subset_of(t.set))
        return false;
    if (!t.blue_copy.host_set(c.order()).is_subset_of(t.set))
        return false;
    return true;
}

bool verify_join(const TwoColouring& c, const Join& j)
{
    if (j.red_part.intersects(j.blue_part))
        return false;
    auto red = j.red_part.to_vector();
    auto blue = j.blue_part.to_vector();
    for (std::size_t a = 0; a < red.size(); ++a)
        for (std::size_t b = a + 1; b < red.size(); ++b)
            if (c.colour(red[a], red[b]) != Colour::red)
                return false;
    for (std::size_t a = 0; a < blue.size(); ++a)
        for (std::size_t b = a + 1; b < blue.size(); ++b)
            if (c.colour(blue[a], blue[b]) != Colour::blue)
                return false;
    for (int u : red)
        for (int v : blue)
            if (c.colour(u, v) != j.join_colour)
                return false;
    return true;
}

} // namespace ramsey
