#include "ramsey/kernels.hpp"

#include <bit>

namespace ramsey {
namespace {

std::uint64_t s_popcount(const std::uint64_t* a, std::size_t nw) {
    std::uint64_t c = 0;
    for (std::size_t i = 0; i < nw; ++i) c += std::popcount(a[i]);
    return c;
}

std::uint64_t s_and_popcount(const std::uint64_t* a, const std::uint64_t* b, std::size_t nw) {
    std::uint64_t c = 0;
    for (std::size_t i = 0; i < nw; ++i) c += std::popcount(a[i] & b[i]);
    return c;
}

std::uint64_t s_and_into_popcount(std::uint64_t* dst, const std::uint64_t* a,
                                  const std::uint64_t* b, std::size_t nw) {
    std::uint64_t c = 0;
    for (std::size_t i = 0; i < nw; ++i) {
        dst[i] = a[i] & b[i];
        c += std::popcount(dst[i]);
    }
    return c;
}

void s_and_into(std::uint64_t* dst, const std::uint64_t* a, const std::uint64_t* b,
                std::size_t nw) {
    for (std::size_t i = 0; i < nw; ++i) dst[i] = a[i] & b[i];
}

void s_or_into(std::uint64_t* dst, const std::uint64_t* a, const std::uint64_t* b,
               std::size_t nw) {
    for (std::size_t i = 0; i < nw; ++i) dst[i] = a[i] | b[i];
}

void s_andnot_into(std::uint64_t* dst, const std::uint64_t* a, const std::uint64_t* b,
                   std::size_t nw) {
    for (std::size_t i = 0; i < nw; ++i) dst[i] = a[i] & ~b[i];
}

bool s_equal(const std::uint64_t* a, const std::uint64_t* b, std::size_t nw) {
    for (std::size_t i = 0; i < nw; ++i)
        if (a[i] != b[i]) return false;
    return true;
}

} // namespace

const Kernels& scalar_kernels() {
    static const Kernels k = {
        "scalar",   s_popcount, s_and_popcount, s_and_into_popcount,
        s_and_into, s_or_into,  s_andnot_into,  s_equal,
    };
    return k;
}

} // namespace ramsey
