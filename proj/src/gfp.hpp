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

// Prime-field helpers used while setting up extension fields: commutative
// polynomials over GF(p) and dense GF(p) matrices. Internal to the library.

#ifndef SKEWLCP_SRC_GFP_HPP
#define SKEWLCP_SRC_GFP_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

namespace skewlcp::gfp {

using Poly = std::vector<std::uint32_t>;
using Matrix = std::vector<std::vector<std::uint32_t>>;

inline std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
    // p is prime and small: Fermat.
    std::uint64_t r = 1, b = a % p;
    for (std::uint32_t e = p - 2; e; e >>= 1) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
    }
    return static_cast<std::uint32_t>(r);
}

inline void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline Poly sub(const Poly& a, const Poly& b, std::uint32_t p) {
    Poly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) {
        std::uint32_t x = i < a.size() ? a[i] : 0;
        std::uint32_t y = i < b.size() ? b[i] : 0;
        r[i] = (x + p - y) % p;
    }
    trim(r);
    return r;
}

inline Poly mul(const Poly& a, const Poly& b, std::uint32_t p) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    }
    trim(r);
    return r;
}

/// Remainder of a modulo f (f nonzero).
inline Poly mod(Poly a, const Poly& f, std::uint32_t p) {
    trim(a);
    const std::size_t df = f.size() - 1;
    const std::uint32_t lead_inv = inv_mod(f.back(), p);
    while (a.size() > df) {
        const std::uint32_t c = a.back() * lead_inv % p;
        const std::size_t shift = a.size() - 1 - df;
        for (std::size_t j = 0; j <= df; ++j) a[shift + j] = (a[shift + j] + (p - c) * f[j]) % p;
        trim(a);
    }
    return a;
}

inline Poly mulmod(const Poly& a, const Poly& b, const Poly& f, std::uint32_t p) { return mod(mul(a, b, p), f, p); }

inline Poly powmod(Poly base, std::uint64_t e, const Poly& f, std::uint32_t p) {
    Poly r{1};
    base = mod(base, f, p);
    while (e) {
        if (e & 1) r = mulmod(r, base, f, p);
        e >>= 1;
        if (e) base = mulmod(base, base, f, p);
    }
    return r;
}

inline Poly gcd(Poly a, Poly b, std::uint32_t p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly r = mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        const std::uint32_t li = inv_mod(a.back(), p);
        for (auto& c : a) c = c * li % p;
    }
    return a;
}

/// s with s a = gcd(a, f) (mod f); used for inverses modulo an irreducible f.
inline Poly inverse_mod(const Poly& a, const Poly& f, std::uint32_t p) {
    Poly r0 = f, r1 = a, s0{}, s1{1};
    trim(r1);
    while (!r1.empty()) {
        // q, r = divmod(r0, r1)
        Poly rem = r0;
        Poly q(r0.size() >= r1.size() ? r0.size() - r1.size() + 1 : 0, 0);
        const std::uint32_t li = inv_mod(r1.back(), p);
        while (rem.size() >= r1.size() && !rem.empty()) {
            const std::uint32_t c = rem.back() * li % p;
            const std::size_t shift = rem.size() - r1.size();
            q[shift] = c;
            for (std::size_t j = 0; j < r1.size(); ++j) rem[shift + j] = (rem[shift + j] + (p - c) * r1[j]) % p;
            trim(rem);
        }
        trim(q);
        Poly s2 = sub(s0, mul(q, s1, p), p);
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    // r0 is a nonzero constant when a is invertible.
    const std::uint32_t ci = inv_mod(r0.at(0), p);
    for (auto& c : s0) c = c * ci % p;
    return s0;
}

/// In-place reduced row echelon form; returns pivot columns.
inline std::vector<std::size_t> rref(Matrix& m, std::uint32_t p) {
    std::vector<std::size_t> pivots;
    if (m.empty()) return pivots;
    const std::size_t rows = m.size(), cols = m[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && m[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(m[piv], m[r]);
        const std::uint32_t li = inv_mod(m[r][c], p);
        for (auto& v : m[r]) v = v * li % p;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            const std::uint32_t f = m[i][c];
            for (std::size_t j = 0; j < cols; ++j) m[i][j] = (m[i][j] + (p - f) * m[r][j]) % p;
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

/// Basis of {v : m v = 0} (columns of m are the unknowns).
inline std::vector<std::vector<std::uint32_t>> nullspace(Matrix m, std::size_t cols, std::uint32_t p) {
    std::vector<std::size_t> pivots = rref(m, p);
    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<std::vector<std::uint32_t>> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<std::uint32_t> v(cols, 0);
        v[free] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = (p - m[r][free]) % p;
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Inverse of a square matrix; empty result when singular.
inline Matrix inverse(const Matrix& a, std::uint32_t p) {
    const std::size_t n = a.size();
    Matrix aug(n, std::vector<std::uint32_t>(2 * n, 0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug[i][j] = a[i][j] % p;
        aug[i][n + i] = 1;
    }
    auto piv = rref(aug, p);
    if (piv.size() < n || piv[n - 1] != n - 1) return {};
    Matrix inv(n, std::vector<std::uint32_t>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv[i][j] = aug[i][n + j];
    return inv;
}

}  // namespace skewlcp::gfp

#endif
