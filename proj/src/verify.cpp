#include "ramsey/verify.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

#include "ramsey/extend.hpp"

namespace ramsey {

namespace {

// adjacency test straight off the colour matrix
bool adj(const ColoredCompleteGraph& g, int color, int u, int v) {
    return u != v && g.color_of(u, v) == color;
}

// k-subset with at most `allowed_missing` non-edges in colour `color`
bool scan_dense_subset(const ColoredCompleteGraph& g, int color, int k, int allowed_missing,
                       int min_vertex, int missing_used, std::vector<int>& chosen,
                       std::vector<int>* witness) {
    if (static_cast<int>(chosen.size()) == k) {
        if (witness) *witness = chosen;
        return true;
    }
    for (int v = min_vertex; v <= g.order() - (k - static_cast<int>(chosen.size())); ++v) {
        int miss = missing_used;
        bool ok = true;
        for (int u : chosen) {
            if (!adj(g, color, u, v)) {
                if (++miss > allowed_missing) {
                    ok = false;
                    break;
                }
            }
        }
        if (!ok) continue;
        chosen.push_back(v);
        if (scan_dense_subset(g, color, k, allowed_missing, v + 1, miss, chosen, witness))
            return true;
        chosen.pop_back();
    }
    return false;
}

// path of exactly `left` edges from cur to target, all vertices allowed[]
bool scan_path(const ColoredCompleteGraph& g, int color, int cur, int target, int left,
               std::vector<char>& used, std::vector<int>& path, std::vector<int>* witness) {
    if (left == 1) {
        if (adj(g, color, cur, target)) {
            if (witness) *witness = path;
            return true;
        }
        return false;
    }
    for (int v = 0; v < g.order(); ++v) {
        if (used[v] || !adj(g, color, cur, v)) continue;
        used[v] = 1;
        path.push_back(v);
        if (scan_path(g, color, v, target, left - 1, used, path, witness)) return true;
        path.pop_back();
        used[v] = 0;
    }
    return false;
}

// cycle of exactly length k inside `inside` (empty = whole graph)
bool scan_cycle(const ColoredCompleteGraph& g, int color, int k, const std::vector<char>& inside,
                std::vector<int>* witness) {
    int n = g.order();
    for (int s = 0; s < n; ++s) {
        if (!inside[s]) continue;
        std::vector<char> used(n, 1);
        for (int v = s + 1; v < n; ++v) used[v] = !inside[v]; // only vertices above s
        std::vector<int> path = {s};
        if (scan_path(g, color, s, s, k, used, path, witness)) return true;
    }
    return false;
}

bool scan_pattern(const ColoredCompleteGraph& g, int color, const PatternSpec& p,
                  std::vector<int>* witness) {
    int n = g.order();
    std::vector<int> chosen;
    switch (p.kind) {
    case PatternKind::Clique:
        return scan_dense_subset(g, color, p.k, 0, 0, 0, chosen, witness);
    case PatternKind::AlmostClique:
        return scan_dense_subset(g, color, p.k, 1, 0, 0, chosen, witness);
    case PatternKind::Cycle: {
        std::vector<char> all(n, 1);
        return scan_cycle(g, color, p.k, all, witness);
    }
    case PatternKind::Wheel: {
        for (int h = 0; h < n; ++h) {
            std::vector<char> inside(n, 0);
            for (int v = 0; v < n; ++v) inside[v] = adj(g, color, h, v);
            if (scan_cycle(g, color, p.k - 1, inside, witness)) {
                if (witness) witness->push_back(h);
                return true;
            }
        }
        return false;
    }
    case PatternKind::Bipartite: {
        // all a-subsets, then count common neighbours
        std::vector<int> idx(p.a);
        for (int i = 0; i < p.a; ++i) idx[i] = i;
        if (p.a > n) return false;
        while (true) {
            std::vector<int> common;
            for (int v = 0; v < n; ++v) {
                bool all_adj = true;
                for (int u : idx)
                    if (!adj(g, color, u, v)) {
                        all_adj = false;
                        break;
                    }
                if (all_adj) common.push_back(v);
            }
            if (static_cast<int>(common.size()) >= p.b) {
                if (witness) {
                    *witness = idx;
                    witness->insert(witness->end(), common.begin(), common.begin() + p.b);
                }
                return true;
            }
            // next subset
            int i = p.a - 1;
            while (i >= 0 && idx[i] == n - p.a + i) --i;
            if (i < 0) break;
            ++idx[i];
            for (int j = i + 1; j < p.a; ++j) idx[j] = idx[j - 1] + 1;
        }
        return false;
    }
    }
    return false;
}

} // namespace

VerifyResult verify_ramsey(const ColoredCompleteGraph& g, const std::vector<PatternSpec>& patterns) {
    if (!g.is_total()) throw std::invalid_argument("verify_ramsey needs a total coloring");
    if (static_cast<int>(patterns.size()) != g.colors())
        throw std::invalid_argument("one pattern per color required");
    VerifyResult res;
    for (int i = 1; i <= g.colors(); ++i) {
        std::vector<int> witness;
        if (scan_pattern(g, i, patterns[i - 1], &witness)) {
            res.valid = false;
            res.witness_color = i;
            res.witness = std::move(witness);
            return res;
        }
    }
    return res;
}

// ---- isomorphism -------------------------------------------------------------

namespace {

// per-vertex screen: degree and triangle count through the vertex, per colour
std::vector<std::vector<long long>> vertex_invariants(const ColoredCompleteGraph& g) {
    int n = g.order(), nw = g.words();
    std::vector<std::vector<long long>> inv(n);
    Bitset common;
    for (int v = 0; v < n; ++v) {
        for (int t = 1; t <= g.colors(); ++t) {
            const Bitset& nb = g.neighbors(t, v);
            long long tri = 0;
            for (int u = nb.first(nw); u >= 0; u = nb.next(u + 1, nw))
                tri += common.assign_and(nb, g.neighbors(t, u), nw);
            inv[v].push_back(g.degree(t, v));
            inv[v].push_back(tri / 2);
        }
    }
    return inv;
}

struct IsoSearch {
    const ColoredCompleteGraph *a, *b;
    std::vector<std::vector<long long>> inva, invb;
    std::vector<int> map_ab, map_ba;

    bool consistent(int va, int vb) const {
        if (inva[va] != invb[vb]) return false;
        for (int u = 0; u < a->order(); ++u)
            if (map_ab[u] >= 0 && a->color_of(va, u) != b->color_of(vb, map_ab[u])) return false;
        return true;
    }

    bool rec(int depth) {
        int n = a->order();
        if (depth == n) return true;
        // prefer a vertex already touching the mapped part
        int va = -1;
        for (int v = 0; v < n && va < 0; ++v) {
            if (map_ab[v] >= 0) continue;
            for (int u = 0; u < n; ++u)
                if (map_ab[u] >= 0 && a->color_of(v, u) == 1) {
                    va = v;
                    break;
                }
        }
        if (va < 0)
            for (int v = 0; v < n; ++v)
                if (map_ab[v] < 0) {
                    va = v;
                    break;
                }
        for (int vb = 0; vb < n; ++vb) {
            if (map_ba[vb] >= 0 || !consistent(va, vb)) continue;
            map_ab[va] = vb;
            map_ba[vb] = va;
            if (rec(depth + 1)) return true;
            map_ab[va] = -1;
            map_ba[vb] = -1;
        }
        return false;
    }
};

} // namespace

bool are_isomorphic(const ColoredCompleteGraph& a, const ColoredCompleteGraph& b) {
    if (a.order() != b.order() || a.colors() != b.colors())
        throw std::invalid_argument("isomorphism needs equal order and color count");
    for (int t = 1; t <= a.colors(); ++t)
        if (a.edge_count(t) != b.edge_count(t)) return false;
    IsoSearch s;
    s.a = &a;
    s.b = &b;
    s.inva = vertex_invariants(a);
    s.invb = vertex_invariants(b);
    auto sa = s.inva, sb = s.invb;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return false;
    s.map_ab.assign(a.order(), -1);
    s.map_ba.assign(a.order(), -1);
    return s.rec(0);
}

std::vector<ColoredCompleteGraph> dedupe_nonisomorphic(const std::vector<ColoredCompleteGraph>& in) {
    // bucket by the sorted invariant vector, then pairwise tests inside buckets
    std::map<std::vector<std::vector<long long>>, std::vector<std::size_t>> buckets;
    std::vector<ColoredCompleteGraph> out;
    for (const auto& g : in) {
        auto key = vertex_invariants(g);
        std::sort(key.begin(), key.end());
        auto& bucket = buckets[key];
        bool fresh = true;
        for (std::size_t idx : bucket)
            if (are_isomorphic(out[idx], g)) {
                fresh = false;
                break;
            }
        if (fresh) {
            bucket.push_back(out.size());
            out.push_back(g);
        }
    }
    return out;
}

SmallCensus enumerate_all_small(const std::vector<PatternSpec>& patterns, int max_n) {
    if (max_n < 1 || max_n > 8) throw std::invalid_argument("census is desk-scale: max_n <= 8");
    SmallCensus census;
    census.reps.resize(max_n + 1);
    census.reps[1].push_back(ColoredCompleteGraph(1, static_cast<int>(patterns.size())));
    census.counts[{1, 0}] = 1;
    for (int n = 2; n <= max_n; ++n) {
        std::vector<ColoredCompleteGraph> all;
        for (const auto& g : census.reps[n - 1])
            extend_by_one(g, patterns, [&](const ColoredCompleteGraph& h) { all.push_back(h); });
        census.reps[n] = dedupe_nonisomorphic(all);
        for (const auto& g : census.reps[n]) ++census.counts[{n, g.edge_count(1)}];
    }
    return census;
}

} // namespace ramsey
