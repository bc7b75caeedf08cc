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

#include "skewlcp/kernels.hpp"

namespace skewlcp::kernels {

namespace {

void axpy_ref(std::uint8_t* y, const std::uint8_t* x, const NibbleTables& c, std::size_t len) {
    for (std::size_t i = 0; i < len; ++i) y[i] ^= static_cast<std::uint8_t>(c.lo[x[i] & 15] ^ c.hi[x[i] >> 4]);
}

void scale_ref(std::uint8_t* y, const NibbleTables& c, std::size_t len) {
    for (std::size_t i = 0; i < len; ++i) y[i] = static_cast<std::uint8_t>(c.lo[y[i] & 15] ^ c.hi[y[i] >> 4]);
}

std::size_t count_ref(const std::uint8_t* x, std::size_t len) {
    std::size_t n = 0;
    for (std::size_t i = 0; i < len; ++i) n += x[i] != 0;
    return n;
}

}  // namespace

const Variant& scalar() {
    static const Variant v{"scalar", axpy_ref, scale_ref, count_ref};
    return v;
}

}  // namespace skewlcp::kernels
