#include "ramsey/colored_graph.hpp"

#include <stdexcept>
#include <string>

namespace ramsey {

ColoredCompleteGraph::ColoredCompleteGraph(int n, int c)
    : n_(n), c_(c), nw_(words_for(n)), uncolored_(static_cast<long long>(n) * (n - 1) / 2),
      color_(static_cast<std::size_t>(n) * n, 0), adj_(static_cast<std::size_t>(c) * n) {
    if (n < 1 || n > kMaxVertices)
        throw std::invalid_argument("vertex count out of range: " + std::to_string(n));
    if (c < 2 || c > kMaxColors)
        throw std::invalid_argument("color count out of range: " + std::to_string(c));
}

long long ColoredCompleteGraph::edge_count(int color) const {
    long long deg_sum = 0;
    for (int v = 0; v < n_; ++v) deg_sum += degree(color, v);
    return deg_sum / 2;
}

ColoredCompleteGraph neighborhood_subgraph(const ColoredCompleteGraph& g, int v, int color) {
    if (v < 0 || v >= g.order()) throw std::invalid_argument("bad vertex");
    if (color < 1 || color > g.colors()) throw std::invalid_argument("bad color");
    for (int w = 0; w < g.order(); ++w)
        if (w != v && g.color_of(v, w) == kUncolored)
            throw std::invalid_argument("edges at vertex not fully colored");

    std::vector<int> verts;
    for (int w = 0; w < g.order(); ++w)
        if (w != v && g.color_of(v, w) == color) verts.push_back(w);

    // an empty neighbourhood still needs a representable graph
    int m = static_cast<int>(verts.size());
    ColoredCompleteGraph sub(m == 0 ? 1 : m, g.colors());
    for (int a = 0; a < m; ++a)
        for (int b = a + 1; b < m; ++b) {
            int c = g.color_of(verts[a], verts[b]);
            if (c != kUncolored) sub.set_color(a, b, c);
        }
    return sub;
}

DegreeHistogram degree_histogram(const ColoredCompleteGraph& g, int color) {
    if (!g.is_total()) throw std::invalid_argument("degree histogram needs a total coloring");
    if (color < 1 || color > g.colors()) throw std::invalid_argument("bad color");
    DegreeHistogram h;
    h.n = g.order();
    h.counts.assign(g.order(), 0);
    for (int v = 0; v < g.order(); ++v) ++h.counts[g.degree(color, v)];
    return h;
}

long long mono_triangle_count(const ColoredCompleteGraph& g) {
    if (!g.is_total()) throw std::invalid_argument("triangle count needs a total coloring");
    int n = g.order(), nw = g.words();
    long long total = 0;
    Bitset common;
    for (int i = 1; i <= g.colors(); ++i) {
        for (int u = 0; u < n; ++u) {
            const Bitset& nu = g.neighbors(i, u);
            for (int v = nu.next(u + 1, nw); v >= 0; v = nu.next(v + 1, nw)) {
                common.assign_and(nu, g.neighbors(i, v), nw);
                total += common.count_above(v, nw); // w > v > u: each triangle once
            }
        }
    }
    return total;
}

} // namespace ramsey
