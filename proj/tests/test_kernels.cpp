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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "skewlcp/kernels.hpp"
#include "skewlcp/rng.hpp"

using namespace skewlcp;
using namespace skewlcp::kernels;

namespace {

FieldPtr field_of_degree(std::size_t m) { return ExtField::canonical(2, m, "a"); }

std::vector<std::uint8_t> random_bytes(std::size_t len, std::size_t order, Rng& rng) {
    std::vector<std::uint8_t> v(len);
    for (auto& b : v) b = static_cast<std::uint8_t>(rng.below(order));
    return v;
}

}  // namespace

TEST_CASE("multiplication tables match field arithmetic") {
    for (std::size_t m = 1; m <= 8; ++m) {
        auto F = field_of_degree(m);
        Gf2mTable tab(*F);
        for (std::size_t a = 0; a < tab.order(); ++a) {
            for (std::size_t b = 0; b < tab.order(); ++b) {
                const auto want = F->index(F->mul(F->from_index(a), F->from_index(b)));
                CHECK(tab.mul(static_cast<std::uint8_t>(a), static_cast<std::uint8_t>(b)) == want);
                // the split-nibble identity the kernels rely on
                const auto& nt = tab.nibbles(static_cast<std::uint8_t>(a));
                CHECK((nt.lo[b & 15] ^ nt.hi[b >> 4]) == want);
            }
            if (a) CHECK(tab.mul(static_cast<std::uint8_t>(a), tab.inv(static_cast<std::uint8_t>(a))) == 1);
        }
    }
    CHECK_FALSE(Gf2mTable::supports(*ExtField::canonical(3, 2)));
    CHECK_FALSE(Gf2mTable::supports(*ExtField::canonical(2, 9)));
}

TEST_CASE("scalar kernels match element arithmetic") {
    Rng rng(3);
    const Variant& s = scalar();
    for (std::size_t m = 1; m <= 8; ++m) {
        auto F = field_of_degree(m);
        Gf2mTable tab(*F);
        for (int trial = 0; trial < 20; ++trial) {
            const std::size_t len = rng.below(70);
            auto x = random_bytes(len, tab.order(), rng), y = random_bytes(len, tab.order(), rng);
            const auto c = static_cast<std::uint8_t>(rng.below(tab.order()));
            auto want = y;
            for (std::size_t i = 0; i < len; ++i)
                want[i] = static_cast<std::uint8_t>(F->index(F->add(F->from_index(y[i]), F->mul(F->from_index(c), F->from_index(x[i])))));
            s.axpy(y.data(), x.data(), tab.nibbles(c), len);
            CHECK(y == want);
            std::size_t nz = 0;
            for (auto b : y) nz += b != 0;
            CHECK(s.count_nonzero(y.data(), len) == nz);
        }
    }
}

TEST_CASE("AVX2 kernels are bit-identical to the scalar reference") {
    const Variant* v = avx2();
    if (!v) {
        MESSAGE("AVX2 not available on this machine; equivalence not exercised");
        return;
    }
    const Variant& s = scalar();
    Rng rng(17);
    for (std::size_t m = 1; m <= 8; ++m) {
        auto F = field_of_degree(m);
        Gf2mTable tab(*F);
        for (int trial = 0; trial < 200; ++trial) {
            // lengths straddle the 32-byte lanes; offsets make the pointers unaligned
            const std::size_t len = rng.below(200), off = rng.below(7);
            auto x = random_bytes(len + off, tab.order(), rng), y = random_bytes(len + off, tab.order(), rng);
            if (trial % 5 == 0)
                for (std::size_t i = 0; i < y.size(); i += 3) y[i] = 0;
            const auto c = static_cast<std::uint8_t>(rng.below(tab.order()));
            auto ya = y, yb = y;
            s.axpy(ya.data() + off, x.data() + off, tab.nibbles(c), len);
            v->axpy(yb.data() + off, x.data() + off, tab.nibbles(c), len);
            CHECK(ya == yb);
            s.scale(ya.data() + off, tab.nibbles(c), len);
            v->scale(yb.data() + off, tab.nibbles(c), len);
            CHECK(ya == yb);
            CHECK(s.count_nonzero(y.data() + off, len) == v->count_nonzero(y.data() + off, len));
        }
    }
}
