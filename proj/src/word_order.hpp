#ifndef RAMSEY_WORD_ORDER_HPP
#define RAMSEY_WORD_ORDER_HPP

// Internal helpers for comparing colour words (difference -> colour vectors)
// under the per-colour sorted-set order, including on partially decided words.

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "ramsey/colored_graph.hpp"

namespace ramsey::detail {

enum class POrd { Less, Equal, Greater, Unknown };

// Per-colour sorted-set comparison of two colour words over positions
// [from, m); entry 0 means undecided. The result is returned only when it is
// forced for every completion of the undecided positions.
inline POrd compare_partial_words(const std::vector<std::uint8_t>& a,
                                  const std::vector<std::uint8_t>& b, int c, int from) {
    int m = static_cast<int>(a.size());
    for (int t = 1; t <= c; ++t) {
        for (int e = from; e < m; ++e) {
            bool au = a[e] == kUncolored, bu = b[e] == kUncolored;
            if (au || bu) return POrd::Unknown;
            bool ain = a[e] == t, bin = b[e] == t;
            if (ain == bin) continue;
            // first divergence of colour-t membership; the side that still has
            // elements coming offers a larger element at this position
            const std::vector<std::uint8_t>& other = ain ? b : a;
            bool yes_later = false, unknown_later = false;
            for (int e2 = e + 1; e2 < m; ++e2) {
                if (other[e2] == t) {
                    yes_later = true;
                    break;
                }
                if (other[e2] == kUncolored) unknown_later = true;
            }
            if (yes_later) return ain ? POrd::Less : POrd::Greater;
            if (unknown_later) return POrd::Unknown;
            return ain ? POrd::Greater : POrd::Less; // the other set just ended
        }
    }
    return POrd::Equal;
}

inline int exact_compare(const std::vector<std::uint8_t>& a, const std::vector<std::uint8_t>& b,
                         int c, int from) {
    switch (compare_partial_words(a, b, c, from)) {
    case POrd::Less: return -1;
    case POrd::Greater: return 1;
    case POrd::Equal: return 0;
    default: throw std::logic_error("partial word in exact compare");
    }
}

// word of the set-shifted block: D -> D + s
inline std::vector<std::uint8_t> shifted_word(const std::vector<std::uint8_t>& w, int s) {
    int m = static_cast<int>(w.size());
    std::vector<std::uint8_t> out(m);
    for (int x = 0; x < m; ++x) out[x] = w[((x - s) % m + m) % m];
    return out;
}

// word of (-1) * D
inline std::vector<std::uint8_t> negated_word(const std::vector<std::uint8_t>& w) {
    int m = static_cast<int>(w.size());
    std::vector<std::uint8_t> out(m);
    for (int x = 0; x < m; ++x) out[x] = w[(m - x) % m];
    return out;
}

// word of q * D, given the inverse of q mod m
inline std::vector<std::uint8_t> unit_word(const std::vector<std::uint8_t>& w, int q_inv) {
    int m = static_cast<int>(w.size());
    std::vector<std::uint8_t> out(m);
    for (int x = 0; x < m; ++x)
        out[x] = w[(static_cast<long long>(q_inv) * x) % m];
    return out;
}

inline int inverse_mod(int q, int m) {
    if (m == 1) return 0;
    for (int r = 1; r < m; ++r)
        if ((static_cast<long long>(q) * r) % m == 1) return r;
    throw std::invalid_argument("not a unit");
}

// Two-colour positional test: is the set-shift s of the (partial) word proven
// strictly smaller than the word itself for every completion?
inline bool shift_proven_smaller(const std::vector<std::uint8_t>& w, int s) {
    int m = static_cast<int>(w.size());
    for (int x = 0; x < m; ++x) {
        std::uint8_t a = w[((x - s) % m + m) % m], b = w[x];
        if (a == kUncolored || b == kUncolored) return false;
        if (a != b) return a < b;
    }
    return false;
}

inline std::vector<std::uint8_t> minimal_shift_word(const std::vector<std::uint8_t>& w, int c) {
    std::vector<std::uint8_t> best = w;
    for (int s = 1; s < static_cast<int>(w.size()); ++s) {
        auto ws = shifted_word(w, s);
        if (exact_compare(ws, best, c, 0) < 0) best = std::move(ws);
    }
    return best;
}

} // namespace ramsey::detail

#endif
