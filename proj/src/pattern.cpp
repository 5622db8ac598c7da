#include "ramsey/pattern.hpp"

#include <algorithm>
#include <stdexcept>

namespace ramsey {

namespace {
constexpr int kMaxPatternOrder = 16;

[[noreturn]] void bad_pattern(const std::string& what) { throw std::invalid_argument(what); }
} // namespace

PatternSpec PatternSpec::clique(int k) {
    if (k < 2 || k > kMaxPatternOrder) bad_pattern("K_k needs 2 <= k <= 16");
    return {PatternKind::Clique, k, 0, 0};
}
PatternSpec PatternSpec::almost_clique(int k) {
    if (k < 3 || k > kMaxPatternOrder) bad_pattern("J_k needs 3 <= k <= 16");
    return {PatternKind::AlmostClique, k, 0, 0};
}
PatternSpec PatternSpec::cycle(int k) {
    if (k < 3 || k > kMaxPatternOrder) bad_pattern("C_k needs 3 <= k <= 16");
    return {PatternKind::Cycle, k, 0, 0};
}
PatternSpec PatternSpec::wheel(int k) {
    if (k < 4 || k > kMaxPatternOrder) bad_pattern("W_k needs 4 <= k <= 16");
    return {PatternKind::Wheel, k, 0, 0};
}
PatternSpec PatternSpec::bipartite(int a, int b) {
    if (a < 1 || a > b || a + b > kMaxPatternOrder) bad_pattern("K_{a,b} needs 1 <= a <= b");
    return {PatternKind::Bipartite, 0, a, b};
}

std::string PatternSpec::text() const {
    switch (kind) {
    case PatternKind::Clique: return "K" + std::to_string(k);
    case PatternKind::AlmostClique: return "J" + std::to_string(k);
    case PatternKind::Cycle: return "C" + std::to_string(k);
    case PatternKind::Wheel: return "W" + std::to_string(k);
    case PatternKind::Bipartite: return "K" + std::to_string(a) + "," + std::to_string(b);
    }
    return "?";
}

namespace {

// ---- clique machinery ------------------------------------------------------
//
// Searches for `need` further mutually adjacent vertices picked from ext
// (ext must be a subset of common); `common` is the running intersection of
// the neighbourhoods of everything chosen so far. Once the clique is complete
// it succeeds iff common still holds at least `need_common` vertices. With
// need_common = 2 this is exactly the J_k reduction: a (k-2)-clique plus two
// common neighbours.
bool clique_extend(const ColoredCompleteGraph& g, int color, const Bitset& common,
                   const Bitset& ext, int need, int need_common) {
    int nw = g.words();
    if (need <= 0) return need_common == 0 || common.count(nw) >= need_common;
    if (ext.count(nw) < need) return false;
    Bitset ncommon, next;
    for (int v = ext.first(nw); v >= 0; v = ext.next(v + 1, nw)) {
        ncommon.assign_and(common, g.neighbors(color, v), nw);
        if (need == 1) {
            if (need_common == 0 || ncommon.count(nw) >= need_common) return true;
        } else {
            next.assign_and(ext, g.neighbors(color, v), nw);
            next.clear_through(v); // enumerate vertex sets in increasing order
            if (clique_extend(g, color, ncommon, next, need - 1, need_common)) return true;
        }
    }
    return false;
}

Bitset all_vertices(const ColoredCompleteGraph& g) {
    Bitset s;
    s.fill_first(g.order());
    return s;
}

// ---- cycles ----------------------------------------------------------------

// Path of exactly `steps` edges from cur to target inside `allowed`
// (allowed excludes everything already on the path, and the target).
bool path_dfs(const ColoredCompleteGraph& g, int color, int cur, int target, int steps,
              const Bitset& allowed) {
    int nw = g.words();
    const Bitset& nb = g.neighbors(color, cur);
    if (steps == 1) return nb.test(target);
    Bitset cand;
    if (cand.assign_and(nb, allowed, nw) == 0) return false;
    if (allowed.count(nw) < steps - 1) return false; // not enough vertices left
    Bitset rest = allowed;
    for (int v = cand.first(nw); v >= 0; v = cand.next(v + 1, nw)) {
        rest.reset(v);
        if (path_dfs(g, color, v, target, steps - 1, rest)) return true;
        rest.set(v);
    }
    return false;
}

// Cycle of length exactly k with every vertex inside mask.
bool cycle_in_mask(const ColoredCompleteGraph& g, int color, const Bitset& mask, int k) {
    int nw = g.words();
    if (mask.count(nw) < k) return false;
    // anchor each candidate cycle at its minimum vertex
    for (int s = mask.first(nw); s >= 0; s = mask.next(s + 1, nw)) {
        Bitset allowed = mask;
        allowed.clear_through(s);
        if (path_dfs(g, color, s, s, k, allowed)) return true;
    }
    return false;
}

// Cycle of length exactly k inside mask passing through vertex v.
bool cycle_through_vertex(const ColoredCompleteGraph& g, int color, const Bitset& mask, int v,
                          int k) {
    Bitset allowed = mask;
    allowed.reset(v);
    return path_dfs(g, color, v, v, k, allowed);
}

// Cycle of length exactly k inside mask using the edge {u,v}.
bool cycle_through_edge(const ColoredCompleteGraph& g, int color, const Bitset& mask, int u, int v,
                        int k) {
    if (!g.neighbors(color, u).test(v) || !mask.test(u) || !mask.test(v)) return false;
    Bitset allowed = mask;
    allowed.reset(u);
    allowed.reset(v);
    return path_dfs(g, color, v, u, k - 1, allowed);
}

// ---- complete bipartite ----------------------------------------------------

// Extends the fixed part by `need` vertices drawn from candidates taken in
// `order` starting at position pos; common is the intersection of the chosen
// neighbourhoods and must keep at least b vertices.
bool kb_extend(const ColoredCompleteGraph& g, int color, const Bitset& common,
               const std::vector<int>& order, std::size_t pos, const Bitset& allowed, int need,
               int b) {
    int nw = g.words();
    if (need == 0) return common.count(nw) >= b;
    Bitset ncommon;
    for (std::size_t i = pos; i + need <= order.size(); ++i) {
        int v = order[i];
        if (!allowed.test(v)) continue;
        if (ncommon.assign_and(common, g.neighbors(color, v), nw) < b) continue;
        if (kb_extend(g, color, ncommon, order, i + 1, allowed, need - 1, b)) return true;
    }
    return false;
}

std::vector<int> degree_order(const ColoredCompleteGraph& g, int color) {
    std::vector<int> order(g.order());
    for (int v = 0; v < g.order(); ++v) order[v] = v;
    std::stable_sort(order.begin(), order.end(),
                     [&](int x, int y) { return g.degree(color, x) > g.degree(color, y); });
    return order;
}

bool contains_bipartite(const ColoredCompleteGraph& g, int color, int a, int b) {
    Bitset all = all_vertices(g);
    return kb_extend(g, color, all, degree_order(g, color), 0, all, a, b);
}

// a-part contains `fixed`; every further part member must lie in N(other) so
// that `other` ends up among the common neighbours.
bool bipartite_through(const ColoredCompleteGraph& g, int color, int a, int b, int fixed,
                       int other) {
    Bitset allowed = g.neighbors(color, other);
    allowed.reset(fixed);
    return kb_extend(g, color, g.neighbors(color, fixed), degree_order(g, color), 0, allowed,
                     a - 1, b);
}

} // namespace

bool contains_pattern(const ColoredCompleteGraph& g, int color, const PatternSpec& p) {
    if (color < 1 || color > g.colors()) throw std::invalid_argument("bad color");
    Bitset all = all_vertices(g);
    switch (p.kind) {
    case PatternKind::Clique: return clique_extend(g, color, all, all, p.k, 0);
    case PatternKind::AlmostClique: return clique_extend(g, color, all, all, p.k - 2, 2);
    case PatternKind::Cycle: return cycle_in_mask(g, color, all, p.k);
    case PatternKind::Wheel: {
        for (int h = 0; h < g.order(); ++h)
            if (cycle_in_mask(g, color, g.neighbors(color, h), p.k - 1)) return true;
        return false;
    }
    case PatternKind::Bipartite: return contains_bipartite(g, color, p.a, p.b);
    }
    return false;
}

bool contains_pattern_through_edge(const ColoredCompleteGraph& g, int color, const PatternSpec& p,
                                   int u, int v) {
    if (color < 1 || color > g.colors()) throw std::invalid_argument("bad color");
    if (u == v || u < 0 || v < 0 || u >= g.order() || v >= g.order())
        throw std::invalid_argument("bad edge");
    if (g.color_of(u, v) != color) throw std::invalid_argument("edge does not carry this color");

    int nw = g.words();
    switch (p.kind) {
    case PatternKind::Clique: {
        Bitset common;
        common.assign_and(g.neighbors(color, u), g.neighbors(color, v), nw);
        return clique_extend(g, color, common, common, p.k - 2, 0);
    }
    case PatternKind::AlmostClique: {
        // missing pair disjoint from {u,v}: both inside the (k-2)-clique
        if (p.k >= 4) {
            Bitset common;
            common.assign_and(g.neighbors(color, u), g.neighbors(color, v), nw);
            if (clique_extend(g, color, common, common, p.k - 4, 2)) return true;
        }
        // u in the clique, v one of the two attached vertices (and swapped)
        for (int swap = 0; swap < 2; ++swap) {
            int x = swap ? v : u, y = swap ? u : v;
            Bitset ext;
            ext.assign_and(g.neighbors(color, x), g.neighbors(color, y), nw);
            if (clique_extend(g, color, g.neighbors(color, x), ext, p.k - 3, 2)) return true;
        }
        return false;
    }
    case PatternKind::Cycle: {
        Bitset allowed = all_vertices(g);
        return cycle_through_edge(g, color, allowed, u, v, p.k);
    }
    case PatternKind::Wheel: {
        // spoke: one endpoint is the hub, the other on the rim
        if (cycle_through_vertex(g, color, g.neighbors(color, u), v, p.k - 1)) return true;
        if (cycle_through_vertex(g, color, g.neighbors(color, v), u, p.k - 1)) return true;
        // rim edge: hub adjacent to both endpoints
        Bitset hubs;
        hubs.assign_and(g.neighbors(color, u), g.neighbors(color, v), nw);
        for (int h = hubs.first(nw); h >= 0; h = hubs.next(h + 1, nw))
            if (cycle_through_edge(g, color, g.neighbors(color, h), u, v, p.k - 1)) return true;
        return false;
    }
    case PatternKind::Bipartite: {
        if (bipartite_through(g, color, p.a, p.b, u, v)) return true;
        if (bipartite_through(g, color, p.a, p.b, v, u)) return true;
        return false;
    }
    }
    return false;
}

bool is_ramsey_graph(const ColoredCompleteGraph& g, const std::vector<PatternSpec>& patterns) {
    if (!g.is_total()) throw std::invalid_argument("is_ramsey_graph needs a total coloring");
    if (static_cast<int>(patterns.size()) != g.colors())
        throw std::invalid_argument("one pattern per color required");
    for (int i = 1; i <= g.colors(); ++i)
        if (contains_pattern(g, i, patterns[i - 1])) return false;
    return true;
}

} // namespace ramsey
