#ifndef RAMSEY_BITSET_HPP
#define RAMSEY_BITSET_HPP

#include <array>
#include <bit>
#include <cstdint>

#include "ramsey/kernels.hpp"

namespace ramsey {

inline constexpr int kMaxVertices = 512;
inline constexpr int kMaxWords = kMaxVertices / 64;

inline int words_for(int n) { return (n + 63) / 64; }

// Fixed-capacity vertex set. Instances belonging to one graph all use the
// same word count, passed explicitly to the bulk operations.
struct Bitset {
    std::array<std::uint64_t, kMaxWords> w{};

    void clear() { w.fill(0); }
    void set(int i) { w[i >> 6] |= std::uint64_t(1) << (i & 63); }
    void reset(int i) { w[i >> 6] &= ~(std::uint64_t(1) << (i & 63)); }
    bool test(int i) const { return (w[i >> 6] >> (i & 63)) & 1; }

    // set bits 0..n-1
    void fill_first(int n) {
        clear();
        int full = n >> 6;
        for (int i = 0; i < full; ++i) w[i] = ~std::uint64_t(0);
        if (n & 63) w[full] = (std::uint64_t(1) << (n & 63)) - 1;
    }

    // single-word rows (n <= 64, the common search sizes) skip the kernel
    // dispatch; longer rows go through the runtime-selected kernels
    int count(int nw) const {
        if (nw == 1) return std::popcount(w[0]);
        return static_cast<int>(active_kernels().popcount(w.data(), nw));
    }

    int and_count(const Bitset& o, int nw) const {
        if (nw == 1) return std::popcount(w[0] & o.w[0]);
        return static_cast<int>(active_kernels().and_popcount(w.data(), o.w.data(), nw));
    }

    // *this = a & b, returns popcount
    int assign_and(const Bitset& a, const Bitset& b, int nw) {
        if (nw == 1) {
            w[0] = a.w[0] & b.w[0];
            return std::popcount(w[0]);
        }
        return static_cast<int>(
            active_kernels().and_into_popcount(w.data(), a.w.data(), b.w.data(), nw));
    }

    void operator_and(const Bitset& o, int nw) {
        if (nw == 1) {
            w[0] &= o.w[0];
            return;
        }
        active_kernels().and_into(w.data(), w.data(), o.w.data(), nw);
    }
    void operator_or(const Bitset& o, int nw) {
        if (nw == 1) {
            w[0] |= o.w[0];
            return;
        }
        active_kernels().or_into(w.data(), w.data(), o.w.data(), nw);
    }
    void operator_andnot(const Bitset& o, int nw) {
        if (nw == 1) {
            w[0] &= ~o.w[0];
            return;
        }
        active_kernels().andnot_into(w.data(), w.data(), o.w.data(), nw);
    }

    bool equals(const Bitset& o, int nw) const {
        if (nw == 1) return w[0] == o.w[0];
        return active_kernels().equal(w.data(), o.w.data(), nw);
    }

    bool none(int nw) const {
        for (int i = 0; i < nw; ++i)
            if (w[i]) return false;
        return true;
    }

    // clear bits 0..pos
    void clear_through(int pos) {
        int wi = pos >> 6;
        for (int k = 0; k < wi; ++k) w[k] = 0;
        if (wi < kMaxWords) w[wi] &= ~((std::uint64_t(2) << (pos & 63)) - 1);
    }

    // set bits at indices strictly greater than pos
    int count_above(int pos, int nw) const {
        int wi = pos >> 6;
        if (wi >= nw) return 0;
        int c = std::popcount(w[wi] & ~((std::uint64_t(2) << (pos & 63)) - 1));
        for (int k = wi + 1; k < nw; ++k) c += std::popcount(w[k]);
        return c;
    }

    // index of first set bit at position >= from, or -1
    int next(int from, int nw) const {
        int wi = from >> 6;
        if (wi >= nw) return -1;
        std::uint64_t cur = w[wi] & (~std::uint64_t(0) << (from & 63));
        while (true) {
            if (cur) return (wi << 6) + std::countr_zero(cur);
            if (++wi >= nw) return -1;
            cur = w[wi];
        }
    }
    int first(int nw) const { return next(0, nw); }
};

} // namespace ramsey

#endif
