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

#include <cstdlib>
#include <cstring>

#include "skewlcp/kernels.hpp"

namespace skewlcp::kernels {

#if defined(SKEWLCP_HAVE_AVX2)
namespace detail {
const Variant& avx2_variant();
}
#endif

const Variant* avx2() {
#if defined(SKEWLCP_HAVE_AVX2)
    static const bool ok = __builtin_cpu_supports("avx2");
    return ok ? &detail::avx2_variant() : nullptr;
#else
    return nullptr;
#endif
}

const Variant& active() {
    static const Variant& v = [] () -> const Variant& {
        const char* force = std::getenv("SKEWLCP_KERNEL");
        if (force && std::strcmp(force, "scalar") == 0) return scalar();
        if (const Variant* a = avx2()) return *a;
        return scalar();
    }();
    return v;
}

Gf2mTable::Gf2mTable(const ExtField& field) {
    if (!supports(field)) throw std::invalid_argument("byte kernels need GF(2^m) with m <= 8");
    order_ = static_cast<std::size_t>(field.order());
    mul_.assign(256 * 256, 0);
    inv_.assign(256, 0);
    nib_.resize(256);
    std::vector<Elem> el(order_);
    for (std::size_t i = 0; i < order_; ++i) el[i] = field.from_index(i);
    for (std::size_t a = 0; a < order_; ++a) {
        for (std::size_t b = a; b < order_; ++b) {
            const auto p = static_cast<std::uint8_t>(field.index(field.mul(el[a], el[b])));
            mul_[a * 256 + b] = mul_[b * 256 + a] = p;
            if (p == 1) inv_[a] = static_cast<std::uint8_t>(b), inv_[b] = static_cast<std::uint8_t>(a);
        }
    }
    for (std::size_t c = 0; c < order_; ++c)
        for (std::size_t k = 0; k < 16; ++k) {
            nib_[c].lo[k] = k < order_ ? mul_[c * 256 + k] : 0;
            nib_[c].hi[k] = (k << 4) < order_ ? mul_[c * 256 + (k << 4)] : 0;
        }
}

}  // namespace skewlcp::kernels
