#include "ramsey/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)
#define RAMSEY_HAVE_AVX2_BUILD 1
#include <immintrin.h>
#else
#define RAMSEY_HAVE_AVX2_BUILD 0
#endif

#include <bit>

namespace ramsey {

#if RAMSEY_HAVE_AVX2_BUILD

namespace {

// nibble-lookup popcount of one 256-bit lane, summed into a 4x64 accumulator
inline __m256i popcount256(__m256i v) {
    const __m256i lookup = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4, 0, 1,
                                            1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
    const __m256i low = _mm256_set1_epi8(0x0f);
    __m256i lo = _mm256_and_si256(v, low);
    __m256i hi = _mm256_and_si256(_mm256_srli_epi32(v, 4), low);
    __m256i cnt = _mm256_add_epi8(_mm256_shuffle_epi8(lookup, lo), _mm256_shuffle_epi8(lookup, hi));
    return _mm256_sad_epu8(cnt, _mm256_setzero_si256());
}

inline std::uint64_t hsum256(__m256i acc) {
    return static_cast<std::uint64_t>(_mm256_extract_epi64(acc, 0)) +
           static_cast<std::uint64_t>(_mm256_extract_epi64(acc, 1)) +
           static_cast<std::uint64_t>(_mm256_extract_epi64(acc, 2)) +
           static_cast<std::uint64_t>(_mm256_extract_epi64(acc, 3));
}

std::uint64_t v_popcount(const std::uint64_t* a, std::size_t nw) {
    __m256i acc = _mm256_setzero_si256();
    std::size_t i = 0;
    for (; i + 4 <= nw; i += 4) {
        __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        acc = _mm256_add_epi64(acc, popcount256(v));
    }
    std::uint64_t c = hsum256(acc);
    for (; i < nw; ++i) c += std::popcount(a[i]);
    return c;
}

std::uint64_t v_and_popcount(const std::uint64_t* a, const std::uint64_t* b, std::size_t nw) {
    __m256i acc = _mm256_setzero_si256();
    std::size_t i = 0;
    for (; i + 4 <= nw; i += 4) {
        __m256i v = _mm256_and_si256(_mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i)),
                                     _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i)));
        acc = _mm256_add_epi64(acc, popcount256(v));
    }
    std::uint64_t c = hsum256(acc);
    for (; i < nw; ++i) c += std::popcount(a[i] & b[i]);
    return c;
}

std::uint64_t v_and_into_popcount(std::uint64_t* dst, const std::uint64_t* a,
                                  const std::uint64_t* b, std::size_t nw) {
    __m256i acc = _mm256_setzero_si256();
    std::size_t i = 0;
    for (; i + 4 <= nw; i += 4) {
        __m256i v = _mm256_and_si256(_mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i)),
                                     _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i)));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), v);
        acc = _mm256_add_epi64(acc, popcount256(v));
    }
    std::uint64_t c = hsum256(acc);
    for (; i < nw; ++i) {
        dst[i] = a[i] & b[i];
        c += std::popcount(dst[i]);
    }
    return c;
}

void v_and_into(std::uint64_t* dst, const std::uint64_t* a, const std::uint64_t* b,
                std::size_t nw) {
    std::size_t i = 0;
    for (; i + 4 <= nw; i += 4) {
        __m256i v = _mm256_and_si256(_mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i)),
                                     _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i)));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), v);
    }
    for (; i < nw; ++i) dst[i] = a[i] & b[i];
}

void v_or_into(std::uint64_t* dst, const std::uint64_t* a, const std::uint64_t* b,
               std::size_t nw) {
    std::size_t i = 0;
    for (; i + 4 <= nw; i += 4) {
        __m256i v = _mm256_or_si256(_mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i)),
                                    _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i)));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), v);
    }
    for (; i < nw; ++i) dst[i] = a[i] | b[i];
}

void v_andnot_into(std::uint64_t* dst, const std::uint64_t* a, const std::uint64_t* b,
                   std::size_t nw) {
    std::size_t i = 0;
    for (; i + 4 <= nw; i += 4) {
        // _mm256_andnot_si256(x, y) = ~x & y
        __m256i v = _mm256_andnot_si256(_mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i)),
                                        _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i)));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), v);
    }
    for (; i < nw; ++i) dst[i] = a[i] & ~b[i];
}

bool v_equal(const std::uint64_t* a, const std::uint64_t* b, std::size_t nw) {
    std::size_t i = 0;
    for (; i + 4 <= nw; i += 4) {
        __m256i x = _mm256_xor_si256(_mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i)),
                                     _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i)));
        if (!_mm256_testz_si256(x, x)) return false;
    }
    for (; i < nw; ++i)
        if (a[i] != b[i]) return false;
    return true;
}

} // namespace

const Kernels* avx2_kernels() {
    if (!__builtin_cpu_supports("avx2")) return nullptr;
    static const Kernels k = {
        "avx2",     v_popcount, v_and_popcount, v_and_into_popcount,
        v_and_into, v_or_into,  v_andnot_into,  v_equal,
    };
    return &k;
}

#else

const Kernels* avx2_kernels() { return nullptr; }

#endif

} // namespace ramsey
