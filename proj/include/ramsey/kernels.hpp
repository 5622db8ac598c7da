#ifndef RAMSEY_KERNELS_HPP
#define RAMSEY_KERNELS_HPP

#include <cstddef>
#include <cstdint>

// Word-level kernels behind the adjacency bitsets. The search spends nearly
// all of its time in and/popcount over short uint64 rows, so these exist in
// a scalar reference version and an AVX2 version picked once at startup.
// Set RAMSEY_KERNELS=scalar|avx2 to force a variant.

namespace ramsey {

struct Kernels {
    const char* name;
    std::uint64_t (*popcount)(const std::uint64_t* a, std::size_t nw);
    std::uint64_t (*and_popcount)(const std::uint64_t* a, const std::uint64_t* b, std::size_t nw);
    // dst = a & b, returns popcount(dst)
    std::uint64_t (*and_into_popcount)(std::uint64_t* dst, const std::uint64_t* a,
                                       const std::uint64_t* b, std::size_t nw);
    void (*and_into)(std::uint64_t* dst, const std::uint64_t* a, const std::uint64_t* b,
                     std::size_t nw);
    void (*or_into)(std::uint64_t* dst, const std::uint64_t* a, const std::uint64_t* b,
                    std::size_t nw);
    // dst = a & ~b
    void (*andnot_into)(std::uint64_t* dst, const std::uint64_t* a, const std::uint64_t* b,
                        std::size_t nw);
    bool (*equal)(const std::uint64_t* a, const std::uint64_t* b, std::size_t nw);
};

const Kernels& scalar_kernels();

// nullptr when the CPU (or the build) lacks AVX2.
const Kernels* avx2_kernels();

// Runtime-selected kernel table; stable for the lifetime of the process.
const Kernels& active_kernels();

} // namespace ramsey

#endif
