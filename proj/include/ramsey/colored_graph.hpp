#ifndef RAMSEY_COLORED_GRAPH_HPP
#define RAMSEY_COLORED_GRAPH_HPP

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "ramsey/bitset.hpp"

namespace ramsey {

// Pairs not yet assigned a colour carry this value.
inline constexpr int kUncolored = 0;
inline constexpr int kMaxColors = 8;

// Edge-coloured complete graph on n vertices with c colours (1..c), kept as
// one bit-vector row per (colour, vertex). Partial colourings are allowed;
// statistics that need a total colouring check for it.
class ColoredCompleteGraph {
public:
    ColoredCompleteGraph(int n, int c);

    int order() const { return n_; }
    int colors() const { return c_; }
    int words() const { return nw_; }

    int color_of(int u, int v) const { return color_[u * n_ + v]; }

    // color may be kUncolored to erase an assignment; hot path of the search
    void set_color(int u, int v, int color) {
        if (u == v || u < 0 || v < 0 || u >= n_ || v >= n_)
            throw std::invalid_argument("bad vertex pair");
        if (color < 0 || color > c_) throw std::invalid_argument("bad color index");
        int old = color_[u * n_ + v];
        if (old == color) return;
        if (old != kUncolored) {
            adj_[(old - 1) * n_ + u].reset(v);
            adj_[(old - 1) * n_ + v].reset(u);
            ++uncolored_;
        }
        color_[u * n_ + v] = static_cast<std::uint8_t>(color);
        color_[v * n_ + u] = static_cast<std::uint8_t>(color);
        if (color != kUncolored) {
            adj_[(color - 1) * n_ + u].set(v);
            adj_[(color - 1) * n_ + v].set(u);
            --uncolored_;
        }
    }

    const Bitset& neighbors(int color, int v) const { return adj_[(color - 1) * n_ + v]; }

    bool is_total() const { return uncolored_ == 0; }
    int degree(int color, int v) const { return neighbors(color, v).count(nw_); }

    // number of colour-`color` edges in the whole graph
    long long edge_count(int color) const;

    bool operator==(const ColoredCompleteGraph& o) const {
        return n_ == o.n_ && c_ == o.c_ && color_ == o.color_;
    }

private:
    int n_, c_, nw_;
    long long uncolored_;
    std::vector<std::uint8_t> color_; // n*n, diagonal 0
    std::vector<Bitset> adj_;         // c rows of n bitsets
};

struct DegreeHistogram {
    int n = 0;
    std::vector<long long> counts; // index j = vertices of colour-1 degree j
};

// Induced subgraph on the colour-i neighbours of v, relabelled 0..deg-1 in
// increasing original-vertex order. Edges incident to v must be coloured.
ColoredCompleteGraph neighborhood_subgraph(const ColoredCompleteGraph& g, int v, int color);

DegreeHistogram degree_histogram(const ColoredCompleteGraph& g, int color);

// Triangles monochromatic in any colour, each counted once. Total graphs only.
long long mono_triangle_count(const ColoredCompleteGraph& g);

} // namespace ramsey

#endif
