/*
   Copyright 2026 The skewlcp Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

// Compiled with -mavx2; only reached after a runtime CPU check.

#include <immintrin.h>

#include "skewlcp/kernels.hpp"

namespace skewlcp::kernels::detail {

namespace {

inline __m256i broadcast16(const std::array<std::uint8_t, 16>& t) {
    return _mm256_broadcastsi128_si256(_mm_load_si128(reinterpret_cast<const __m128i*>(t.data())));
}

inline __m256i mul32(__m256i x, __m256i lo, __m256i hi, __m256i mask) {
    const __m256i l = _mm256_shuffle_epi8(lo, _mm256_and_si256(x, mask));
    const __m256i h = _mm256_shuffle_epi8(hi, _mm256_and_si256(_mm256_srli_epi16(x, 4), mask));
    return _mm256_xor_si256(l, h);
}

// Tail bytes go through the same tables one at a time.
inline std::uint8_t mul1(std::uint8_t x, const NibbleTables& c) {
    return static_cast<std::uint8_t>(c.lo[x & 15] ^ c.hi[x >> 4]);
}

void axpy_avx2(std::uint8_t* y, const std::uint8_t* x, const NibbleTables& c, std::size_t len) {
    const __m256i lo = broadcast16(c.lo), hi = broadcast16(c.hi), mask = _mm256_set1_epi8(0x0f);
    std::size_t i = 0;
    for (; i + 32 <= len; i += 32) {
        const __m256i xv = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(x + i));
        __m256i yv = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(y + i));
        yv = _mm256_xor_si256(yv, mul32(xv, lo, hi, mask));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(y + i), yv);
    }
    if (i + 16 <= len) {
        const __m128i lo1 = _mm_load_si128(reinterpret_cast<const __m128i*>(c.lo.data()));
        const __m128i hi1 = _mm_load_si128(reinterpret_cast<const __m128i*>(c.hi.data()));
        const __m128i m1 = _mm_set1_epi8(0x0f);
        const __m128i xv = _mm_loadu_si128(reinterpret_cast<const __m128i*>(x + i));
        const __m128i p = _mm_xor_si128(_mm_shuffle_epi8(lo1, _mm_and_si128(xv, m1)),
                                        _mm_shuffle_epi8(hi1, _mm_and_si128(_mm_srli_epi16(xv, 4), m1)));
        __m128i yv = _mm_loadu_si128(reinterpret_cast<const __m128i*>(y + i));
        _mm_storeu_si128(reinterpret_cast<__m128i*>(y + i), _mm_xor_si128(yv, p));
        i += 16;
    }
    for (; i < len; ++i) y[i] ^= mul1(x[i], c);
}

void scale_avx2(std::uint8_t* y, const NibbleTables& c, std::size_t len) {
    const __m256i lo = broadcast16(c.lo), hi = broadcast16(c.hi), mask = _mm256_set1_epi8(0x0f);
    std::size_t i = 0;
    for (; i + 32 <= len; i += 32) {
        const __m256i yv = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(y + i));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(y + i), mul32(yv, lo, hi, mask));
    }
    for (; i < len; ++i) y[i] = mul1(y[i], c);
}

std::size_t count_avx2(const std::uint8_t* x, std::size_t len) {
    std::size_t n = 0, i = 0;
    const __m256i zero = _mm256_setzero_si256();
    for (; i + 32 <= len; i += 32) {
        const __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(x + i));
        const auto zmask = static_cast<std::uint32_t>(_mm256_movemask_epi8(_mm256_cmpeq_epi8(v, zero)));
        n += 32 - static_cast<std::size_t>(__builtin_popcount(zmask));
    }
    for (; i < len; ++i) n += x[i] != 0;
    return n;
}

}  // namespace

const Variant& avx2_variant() {
    static const Variant v{"avx2", axpy_avx2, scale_avx2, count_avx2};
    return v;
}

}  // namespace skewlcp::kernels::detail
