#ifndef RAMSEY_CIRCULANT_HPP
#define RAMSEY_CIRCULANT_HPP

#include <vector>

#include "ramsey/colored_graph.hpp"

namespace ramsey {

// Colouring of the difference classes of Z_n. Class d stands for the
// symmetric pair {d, n-d}; representatives run 1..floor(n/2).
class CirculantColoring {
public:
    CirculantColoring(int n, int c);

    int modulus() const { return n_; }
    int colors() const { return c_; }
    int num_classes() const { return n_ / 2; }

    // representative of the class containing difference d (any nonzero residue)
    int class_of(int d) const;

    int color_of_class(int d) const { return assign_[d - 1]; }
    void set_class(int d, int color);
    bool is_total() const;

    // full difference set of one colour, sorted, as a subset of {1..n-1}
    std::vector<int> difference_set(int color) const;

    bool operator==(const CirculantColoring&) const = default;

private:
    int n_, c_;
    std::vector<std::uint8_t> assign_; // per class rep, 0 = uncolored
};

ColoredCompleteGraph realize_circulant(const CirculantColoring& c);

// Minimal representative of c under multiplication by units of Z_n, using the
// per-colour sorted difference-set order (colour 1 first).
CirculantColoring unit_canonical_form(const CirculantColoring& c);

// units of Z_m in increasing order
std::vector<int> units_mod(int m);

// Lexicographic three-way compare of colourings by (colour-1 set, colour-2
// set, ...); shorter set is smaller on ties.
int compare_colorings(const CirculantColoring& a, const CirculantColoring& b);

} // namespace ramsey

#endif
