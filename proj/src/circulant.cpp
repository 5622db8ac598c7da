#include "ramsey/circulant.hpp"

#include <numeric>
#include <stdexcept>

namespace ramsey {

CirculantColoring::CirculantColoring(int n, int c) : n_(n), c_(c), assign_(n / 2, 0) {
    if (n < 3 || n > kMaxVertices) throw std::invalid_argument("circulant modulus out of range");
    if (c < 2 || c > kMaxColors) throw std::invalid_argument("color count out of range");
}

int CirculantColoring::class_of(int d) const {
    d %= n_;
    if (d < 0) d += n_;
    if (d == 0) throw std::invalid_argument("difference 0 has no class");
    return d <= n_ - d ? d : n_ - d;
}

void CirculantColoring::set_class(int d, int color) {
    if (d < 1 || d > num_classes()) throw std::invalid_argument("bad class representative");
    if (color < 0 || color > c_) throw std::invalid_argument("bad color");
    assign_[d - 1] = static_cast<std::uint8_t>(color);
}

bool CirculantColoring::is_total() const {
    for (auto a : assign_)
        if (a == kUncolored) return false;
    return true;
}

std::vector<int> CirculantColoring::difference_set(int color) const {
    std::vector<int> out;
    for (int d = 1; d <= num_classes(); ++d)
        if (assign_[d - 1] == color) {
            out.push_back(d);
            if (n_ - d != d) out.push_back(n_ - d);
        }
    std::sort(out.begin(), out.end());
    return out;
}

ColoredCompleteGraph realize_circulant(const CirculantColoring& c) {
    int n = c.modulus();
    ColoredCompleteGraph g(n, c.colors());
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            int col = c.color_of_class(c.class_of(v - u));
            if (col != kUncolored) g.set_color(u, v, col);
        }
    return g;
}

std::vector<int> units_mod(int m) {
    std::vector<int> out;
    for (int q = 1; q < m; ++q)
        if (std::gcd(q, m) == 1) out.push_back(q);
    if (m == 1) out.push_back(1); // degenerate single-residue ring
    return out;
}

int compare_colorings(const CirculantColoring& a, const CirculantColoring& b) {
    for (int t = 1; t <= std::min(a.colors(), b.colors()); ++t) {
        auto sa = a.difference_set(t), sb = b.difference_set(t);
        if (sa != sb) return sa < sb ? -1 : 1;
    }
    return 0;
}

CirculantColoring unit_canonical_form(const CirculantColoring& c) {
    if (!c.is_total()) throw std::invalid_argument("canonical form needs a total coloring");
    int n = c.modulus();
    CirculantColoring best = c;
    for (int q : units_mod(n)) {
        if (q == 1) continue;
        CirculantColoring img(n, c.colors());
        for (int d = 1; d <= c.num_classes(); ++d)
            img.set_class(d, c.color_of_class(c.class_of(q * d)));
        if (compare_colorings(img, best) < 0) best = img;
    }
    return best;
}

} // namespace ramsey
