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

// Byte-vector kernels over GF(2^m), m <= 8, used by the distance engines.
//
// Elements are the packed indices of ExtField (bit i = coefficient of a^i),
// so addition is XOR and multiplication by a fixed c is GF(2)-linear:
// c*x = lo[x & 15] ^ hi[x >> 4]. Every variant must produce bit-identical
// output to the scalar reference.

#ifndef SKEWLCP_KERNELS_HPP
#define SKEWLCP_KERNELS_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "galois.hpp"

namespace skewlcp::kernels {

/// Nibble product tables for one multiplier.
struct NibbleTables {
    alignas(16) std::array<std::uint8_t, 16> lo;
    alignas(16) std::array<std::uint8_t, 16> hi;
};

/// y[i] ^= c * x[i]
using AxpyFn = void (*)(std::uint8_t* y, const std::uint8_t* x, const NibbleTables& c, std::size_t len);
/// y[i] = c * y[i]
using ScaleFn = void (*)(std::uint8_t* y, const NibbleTables& c, std::size_t len);
using CountFn = std::size_t (*)(const std::uint8_t* x, std::size_t len);

struct Variant {
    const char* name;
    AxpyFn axpy;
    ScaleFn scale;
    CountFn count_nonzero;
};

const Variant& scalar();
/// nullptr when the CPU (or the build) lacks AVX2.
const Variant* avx2();
/// Best supported variant, unless SKEWLCP_KERNEL=scalar forces the reference.
const Variant& active();

/// Full multiplication table of a characteristic-2 field with at most 256
/// elements, indexed by packed index.
class Gf2mTable {
   public:
    explicit Gf2mTable(const ExtField& field);

    static bool supports(const ExtField& field) { return field.characteristic() == 2 && field.degree() <= 8; }

    std::uint8_t mul(std::uint8_t a, std::uint8_t b) const { return mul_[a * 256u + b]; }
    std::uint8_t inv(std::uint8_t a) const { return inv_[a]; }
    const NibbleTables& nibbles(std::uint8_t c) const { return nib_[c]; }
    std::size_t order() const noexcept { return order_; }

   private:
    std::size_t order_;
    std::vector<std::uint8_t> mul_, inv_;
    std::vector<NibbleTables> nib_;
};

}  // namespace skewlcp::kernels

#endif
