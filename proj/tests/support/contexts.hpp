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

// Small rings shared by the code-level tests, plus brute-force enumerators.

#ifndef SKEWLCP_TESTS_CONTEXTS_HPP
#define SKEWLCP_TESTS_CONTEXTS_HPP

#include <functional>
#include <vector>

#include "skewlcp/codes.hpp"
#include "skewlcp/rng.hpp"

namespace ctx {

using namespace skewlcp;

// F = GF(4), sigma = Frobenius, K = GF(2); s = 2 gives n = 4, s = 3 gives n = 6.
inline CodeRingPtr gf4_ring(std::size_t s) {
    auto F = ExtField::create(2, {1, 1, 1}, "w");
    return CodeRing::create(FieldTower::build(F, 1, s), F->one());
}

// F = GF(16), sigma = Frob^2, K = GF(4), s = 2, n = 4, lambda a primitive
// element of K (so lambda^2 != 1).
inline CodeRingPtr gf16_ring() {
    auto F = ExtField::create(2, {1, 1, 0, 0, 1}, "a");
    auto t = FieldTower::build(F, 2, 2);
    // a^5 generates the copy of GF(4) inside GF(16)
    return CodeRing::create(t, F->gen_pow(5));
}

// F = GF(9), sigma = Frobenius, K = GF(3), s = 2, n = 4, lambda = -1.
inline CodeRingPtr gf9_ring() {
    auto F = ExtField::create(3, {2, 2, 1}, "b");
    return CodeRing::create(FieldTower::build(F, 1, 2), F->scalar(2));
}

// Every monic polynomial of degree < n that right-divides x^n - lambda, plus
// x^n - lambda itself, in enumeration order.
inline std::vector<SkewPoly> all_divisors(const CodeRing& ring) {
    const ExtField& F = ring.field();
    const auto q = static_cast<std::uint64_t>(F.order());
    std::vector<SkewPoly> out;
    for (std::size_t deg = 0; deg < ring.n(); ++deg) {
        std::uint64_t total = 1;
        for (std::size_t i = 0; i < deg; ++i) total *= q;
        for (std::uint64_t idx = 0; idx < total; ++idx) {
            std::vector<Elem> c(deg + 1);
            std::uint64_t v = idx;
            for (std::size_t i = 0; i < deg; ++i, v /= q) c[i] = F.from_index(v % q);
            c[deg] = F.one();
            SkewPoly g(ring.ring(), c);
            if (right_rem(ring.modulus(), g).is_zero()) out.push_back(g);
        }
    }
    out.push_back(ring.modulus());
    return out;
}

inline SkewPoly random_poly(const CodeRing& ring, std::size_t deg, Rng& rng) {
    std::vector<Elem> c(deg + 1);
    for (auto& e : c) e = ring.field().random(rng);
    c[deg] = ring.field().random_nonzero(rng);
    return ring.poly(c);
}

inline std::vector<Elem> random_word(const CodeRing& ring, Rng& rng) {
    std::vector<Elem> w(ring.n());
    for (auto& e : w) e = ring.field().random(rng);
    return w;
}

// Every subspace of K^n, as rref bases, by pivot set and free entries.
inline void for_each_subspace(const FieldPtr& K, std::size_t n, const std::function<void(const Matrix&)>& fn) {
    const auto q = static_cast<std::uint64_t>(K->order());
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        std::vector<std::size_t> piv;
        for (std::size_t c = 0; c < n; ++c)
            if (mask >> c & 1) piv.push_back(c);
        std::vector<std::pair<std::size_t, std::size_t>> free;
        for (std::size_t r = 0; r < piv.size(); ++r)
            for (std::size_t c = piv[r] + 1; c < n; ++c)
                if (!(mask >> c & 1)) free.emplace_back(r, c);
        std::uint64_t total = 1;
        for (std::size_t i = 0; i < free.size(); ++i) total *= q;
        for (std::uint64_t idx = 0; idx < total; ++idx) {
            Matrix m(K, piv.size(), n);
            for (std::size_t r = 0; r < piv.size(); ++r) m.at(r, piv[r]) = K->one();
            std::uint64_t v = idx;
            for (auto [r, c] : free) {
                m.at(r, c) = K->from_index(v % q);
                v /= q;
            }
            fn(m);
        }
    }
}

}  // namespace ctx

#endif
