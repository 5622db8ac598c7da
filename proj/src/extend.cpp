#include "ramsey/extend.hpp"

#include <stdexcept>

#include "ramsey/verify.hpp"

namespace ramsey {

namespace {

ColoredCompleteGraph with_room_for_one(const ColoredCompleteGraph& g) {
    ColoredCompleteGraph h(g.order() + 1, g.colors());
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v) h.set_color(u, v, g.color_of(u, v));
    return h;
}

ColoredCompleteGraph induced_on(const ColoredCompleteGraph& g, const std::vector<int>& verts) {
    int m = static_cast<int>(verts.size());
    ColoredCompleteGraph h(m == 0 ? 1 : m, g.colors());
    for (int a = 0; a < m; ++a)
        for (int b = a + 1; b < m; ++b) h.set_color(a, b, g.color_of(verts[a], verts[b]));
    return h;
}

void extend_rec(ColoredCompleteGraph& h, int v, const std::vector<PatternSpec>& patterns,
                const std::function<void(const ColoredCompleteGraph&)>& emit) {
    int nv = h.order() - 1;
    if (v == nv) {
        emit(h);
        return;
    }
    for (int t = 1; t <= h.colors(); ++t) {
        h.set_color(v, nv, t);
        if (!contains_pattern_through_edge(h, t, patterns[t - 1], v, nv))
            extend_rec(h, v + 1, patterns, emit);
        h.set_color(v, nv, kUncolored);
    }
}

} // namespace

void extend_by_one(const ColoredCompleteGraph& g, const std::vector<PatternSpec>& patterns,
                   const std::function<void(const ColoredCompleteGraph&)>& emit) {
    if (!is_ramsey_graph(g, patterns))
        throw std::invalid_argument("extend_by_one needs a Ramsey coloring");
    if (g.order() + 1 > kMaxVertices) throw std::invalid_argument("extension exceeds max order");
    ColoredCompleteGraph h = with_room_for_one(g);
    extend_rec(h, 0, patterns, emit);
}

void local_search(const ColoredCompleteGraph& g, const std::vector<PatternSpec>& patterns,
                  int remove_t, int add_s,
                  const std::function<void(const ColoredCompleteGraph&)>& emit) {
    if (remove_t < 1 || remove_t > 2 || add_s < remove_t || add_s > remove_t + 2)
        throw std::invalid_argument("local search guardrails: 1<=t<=2, t<=s<=t+2");
    if (!is_ramsey_graph(g, patterns))
        throw std::invalid_argument("local_search needs a Ramsey coloring");
    int n = g.order();
    if (n <= remove_t) throw std::invalid_argument("too few vertices to remove from");

    std::function<void(const ColoredCompleteGraph&, int)> grow =
        [&](const ColoredCompleteGraph& h, int left) {
            if (left == 0) {
                if (h.order() == n && are_isomorphic(h, g)) return;
                emit(h);
                return;
            }
            extend_by_one(h, patterns,
                          [&](const ColoredCompleteGraph& h2) { grow(h2, left - 1); });
        };

    std::vector<int> removed;
    std::function<void(int, int)> pick = [&](int from, int left) {
        if (left == 0) {
            std::vector<int> rest;
            for (int v = 0, ri = 0; v < n; ++v) {
                if (ri < static_cast<int>(removed.size()) && removed[ri] == v) {
                    ++ri;
                    continue;
                }
                rest.push_back(v);
            }
            grow(induced_on(g, rest), add_s);
            return;
        }
        for (int v = from; v <= n - left; ++v) {
            removed.push_back(v);
            pick(v + 1, left - 1);
            removed.pop_back();
        }
    };
    pick(0, remove_t);
}

} // namespace ramsey
