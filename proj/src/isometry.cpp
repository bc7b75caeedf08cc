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

#include "skewlcp/isometry.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <numeric>
#include <optional>
#include <thread>
#include <unordered_set>

#include "skewlcp/duality.hpp"
#include "skewlcp/lcp.hpp"

namespace skewlcp {

SkewPoly apply_phi_x(const CodeRing& ring, const SkewPoly& f, long long i) {
    const RingPtr& r = ring.ring();
    return map_coeffs(f, r, [&](const Elem& a) { return r->sigma(a, i); });
}

Elem target_lambda(const CodeRing& ring, const Elem& beta) {
    const ExtField& F = ring.field();
    // phi_beta(x^n) = N_n(beta^{-1}) x^n, so x^n - lambda maps to a unit times x^n - N_n(beta) lambda
    return F.mul(truncated_norm(ring.ring()->aut(), ring.n(), beta), ring.lambda());
}

SkewPoly apply_varphi_beta(const CodeRing& ring, const SkewPoly& f, const Elem& beta) {
    const ExtField& F = ring.field();
    if (F.is_zero(beta)) throw std::invalid_argument("phi_beta needs beta != 0");
    const Elem binv = F.inv(beta);
    std::vector<Elem> c(f.coeffs().size());
    Elem nj = F.one();
    for (std::size_t j = 0; j < c.size(); ++j) {
        c[j] = F.mul(nj, f.coeffs()[j]);
        nj = F.mul(nj, ring.ring()->sigma(binv, static_cast<long long>(j)));
    }
    return SkewPoly(ring.ring(), std::move(c));
}

SkewPoly apply(const CodeRing& ring, const IsometryElement& z, const SkewPoly& f) {
    return apply_varphi_beta(ring, apply_phi_x(ring, f, static_cast<long long>(z.i)), z.beta);
}

Code act_on_code(const IsometryElement& z, const Code& c) {
    const CodeRing& ring = c.ring();
    const Elem lam = target_lambda(ring, z.beta);
    CodeRingPtr target = lam == ring.lambda() ? c.ring_ptr() : ring.with_lambda(lam);
    if (c.is_zero_code()) return Code::from_divisor(target, target->modulus());
    return Code::from_generator(target, apply(ring, z, c.generator()));
}

namespace {

bool norm_power_is_one(const FieldTower& t, const Elem& beta) {
    const Elem nb = t.norm_F_K(beta);
    return t.F().is_one(t.F().pow(nb, t.s()));
}

std::vector<std::uint64_t> prime_factors(std::uint64_t v) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t p = 2; p * p <= v; ++p) {
        if (v % p) continue;
        out.push_back(p);
        while (v % p == 0) v /= p;
    }
    if (v > 1) out.push_back(v);
    return out;
}

Elem primitive_element(const ExtField& F) {
    if (F.order() - 1 > std::numeric_limits<std::uint64_t>::max()) throw std::invalid_argument("field too large for group enumeration");
    const auto qm1 = static_cast<std::uint64_t>(F.order() - 1);
    const auto primes = prime_factors(qm1);
    for (u128 idx = 2; idx < F.order(); ++idx) {
        const Elem c = F.from_index(idx);
        bool primitive = true;
        for (auto p : primes)
            if (F.is_one(F.pow(c, qm1 / p))) primitive = false;
        if (primitive) return c;
    }
    return F.from_index(1);  // GF(2)
}

// Elements beta of F* with N(beta)^s = target, sorted by packed index.
std::vector<Elem> norm_fibre(const FieldTower& t, const Elem& target) {
    const ExtField& F = t.F();
    std::vector<Elem> out;
    auto hit = [&](const Elem& b) { return F.pow(t.norm_F_K(b), t.s()) == target; };
    if (F.order() <= (u128{1} << 20)) {
        for (u128 idx = 1; idx < F.order(); ++idx) {
            const Elem b = F.from_index(idx);
            if (hit(b)) out.push_back(b);
        }
        return out;
    }
    // The kernel is generated by g^(|K*| / gcd(s, |K*|)); the fibre is a coset of it.
    const Elem g = primitive_element(F);
    const auto km1 = static_cast<std::uint64_t>(t.K().order() - 1);
    std::optional<Elem> base;
    Elem cur = F.one();
    for (std::uint64_t e = 0; e < km1 && !base; ++e, cur = F.mul(cur, g))
        if (hit(cur)) base = cur;
    if (!base) return out;
    const Elem step = F.pow(g, km1 / std::gcd(static_cast<std::uint64_t>(t.s()), km1));
    cur = *base;
    do {
        out.push_back(cur);
        cur = F.mul(cur, step);
    } while (cur != *base);
    std::sort(out.begin(), out.end(), [&](const Elem& a, const Elem& b) { return F.index(a) < F.index(b); });
    return out;
}

std::string key_of(const SkewPoly& g) {
    std::string k;
    const std::size_t m = g.field().degree();
    for (const auto& c : g.coeffs())
        for (std::size_t i = 0; i < m; ++i) k.push_back(static_cast<char>(c[i]));
    return k;
}

}  // namespace

IsometryGroup::IsometryGroup(CodeRingPtr ring) : ring_(std::move(ring)) {
    if (ring_->level() != Level::Base) throw std::invalid_argument("the isometry group acts on the base ring");
    elems_ = coset(ring_->lambda());
}

std::vector<IsometryElement> IsometryGroup::coset(const Elem& lambda_from) const {
    const ExtField& F = ring_->field();
    if (F.is_zero(lambda_from)) throw std::invalid_argument("lambda must be nonzero");
    const std::size_t mu = ring_->tower().mu();
    std::vector<IsometryElement> out;
    for (const auto& b : norm_fibre(ring_->tower(), F.mul(ring_->lambda(), F.inv(lambda_from))))
        for (std::size_t i = 0; i < mu; ++i) out.push_back({b, i});
    return out;
}

u128 IsometryGroup::formula_order() const {
    const FieldTower& t = ring_->tower();
    const u128 f1 = t.F().order() - 1, k1 = t.K().order() - 1;
    const u128 g = std::gcd(static_cast<std::uint64_t>(t.s()), static_cast<std::uint64_t>(k1));
    return t.mu() * (f1 / k1) * g;
}

IsometryElement IsometryGroup::identity() const { return {ring_->field().one(), 0}; }

IsometryElement IsometryGroup::compose(const IsometryElement& a, const IsometryElement& b) const {
    const ExtField& F = ring_->field();
    const std::size_t mu = ring_->tower().mu();
    return {F.mul(a.beta, ring_->ring()->sigma(b.beta, static_cast<long long>(a.i))), (a.i + b.i) % mu};
}

IsometryElement IsometryGroup::inverse(const IsometryElement& a) const {
    const ExtField& F = ring_->field();
    const std::size_t mu = ring_->tower().mu();
    return {ring_->ring()->sigma(F.inv(a.beta), -static_cast<long long>(a.i)), (mu - a.i % mu) % mu};
}

bool IsometryGroup::contains(const IsometryElement& a) const {
    return !ring_->field().is_zero(a.beta) && a.i < ring_->tower().mu() && norm_power_is_one(ring_->tower(), a.beta);
}

bool dual_commutation_check(const IsometryElement& z, const Code& d) {
    const ExtField& F = d.ring().field();
    Code lhs = dual(act_on_code(z, d));
    Code rhs = act_on_code({F.inv(z.beta), z.i}, dual(d));
    return lhs == rhs;
}

SupplementReport supplement_search(const Code& c, const SkewPoly& seed, const IsometryGroup& group, unsigned threads) {
    if (!c.ring().same_as(group.ring())) throw RingMismatch("group and code live in different rings");
    if (seed.is_zero() || static_cast<std::size_t>(seed.degree()) + c.redundancy() != c.length())
        throw std::invalid_argument("seed degree must complement the code's redundancy");
    Code base = Code::from_generator(c.ring_ptr(), seed);
    if (static_cast<long>(base.redundancy()) != seed.degree())
        throw std::invalid_argument("seed does not right-divide x^n - lambda");
    return supplement_search(c, base, group, threads);
}

SupplementReport supplement_search(const Code& c, const Code& base, const IsometryGroup& group, unsigned threads) {
    if (!c.ring().same_as(group.ring())) throw RingMismatch("group and code live in different rings");
    if (base.ring().tower_ptr() != c.ring().tower_ptr() || base.ring().level() != Level::Base)
        throw RingMismatch("seed code lives over a different tower");
    if (base.redundancy() + c.redundancy() != c.length())
        throw std::invalid_argument("seed degree must complement the code's redundancy");

    const auto elems = base.ring().lambda() == c.ring().lambda() ? group.elements() : group.coset(base.ring().lambda());
    std::vector<std::optional<Code>> images(elems.size());
    std::vector<char> ok(elems.size(), 0);
    auto work = [&](std::size_t k) {
        Code img = act_on_code(elems[k], base);
        ok[k] = img.ring().same_as(c.ring()) && is_lcp_fast(c, img);
        images[k] = std::move(img);
    };
    threads = std::max(1u, threads);
    if (threads == 1) {
        for (std::size_t k = 0; k < elems.size(); ++k) work(k);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t)
            pool.emplace_back([&] {
                for (std::size_t k; (k = next.fetch_add(1)) < elems.size();) work(k);
            });
        for (auto& th : pool) th.join();
    }

    SupplementReport rep;
    rep.candidates = elems.size();
    std::unordered_set<std::string> seen, seen_ok;
    for (std::size_t k = 0; k < elems.size(); ++k) {
        const std::string key = key_of(images[k]->generator());
        seen.insert(key);
        if (!ok[k]) continue;
        ++rep.successes;
        seen_ok.insert(key);
        if (elems[k] == group.identity()) rep.identity_succeeds = true;
        rep.lcps.push_back({k, elems[k], *images[k]});
    }
    rep.distinct_candidates = seen.size();
    rep.distinct_successes = seen_ok.size();
    return rep;
}

}  // namespace skewlcp
