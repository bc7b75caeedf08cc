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

#include "skewlcp/duality.hpp"

namespace skewlcp {

ThetaMap::ThetaMap(CodeRingPtr source)
    : src_(std::move(source)), dst_(src_->with_lambda(src_->field().inv(src_->lambda()))) {}

SkewPoly ThetaMap::apply(const CodeRing& from, const CodeRing& to, const SkewPoly& f) {
    const ExtField& F = from.field();
    const std::size_t n = from.n();
    SkewPoly r = from.reduce(f);
    std::vector<Elem> out(n);
    // x^{-i} = lambda_from x^{n-i} in the target ring
    for (std::size_t i = 0; i < r.coeffs().size(); ++i) {
        const Elem a = from.ring()->sigma(r.coeffs()[i], -static_cast<long long>(i));
        if (i == 0)
            out[0] = F.add(out[0], a);
        else
            out[n - i] = F.add(out[n - i], F.mul(a, from.lambda()));
    }
    return to.poly(std::move(out));
}

SkewPoly ThetaMap::operator()(const SkewPoly& f) const { return apply(*src_, *dst_, f); }

SkewPoly ThetaMap::inverse(const SkewPoly& f) const { return apply(*dst_, *src_, f); }

SkewPoly monic_reciprocal(const SkewPoly& h) {
    if (h.is_zero()) throw std::invalid_argument("reciprocal of zero");
    const ExtField& F = h.field();
    if (F.is_zero(h.coeff(0))) throw std::invalid_argument("reciprocal needs a nonzero constant term");
    const std::size_t k = static_cast<std::size_t>(h.degree());
    const Elem scale = F.inv(h.ring().sigma(h.coeff(0), static_cast<long long>(k)));
    std::vector<Elem> c(k + 1);
    for (std::size_t i = 0; i <= k; ++i)
        c[i] = F.mul(scale, h.ring().sigma(h.coeff(k - i), static_cast<long long>(i)));
    return SkewPoly(h.ring_ptr(), std::move(c));
}

SkewPoly check_partner(const Code& c) {
    DivResult d = right_div(c.ring().modulus(), c.generator());
    if (!d.r.is_zero()) throw std::logic_error("generator does not divide x^n - lambda");
    return d.q;
}

Code dual(const Code& c) {
    const CodeRing& ring = c.ring();
    auto dual_ring = ring.with_lambda(ring.field().inv(ring.lambda()));
    SkewPoly h = check_partner(c);
    if (h.degree() == static_cast<long>(ring.n())) return Code::from_divisor(dual_ring, dual_ring->modulus());
    SkewPoly ht(dual_ring->ring(), monic_reciprocal(h).coeffs());
    return Code::from_generator(dual_ring, ht);
}

Elem gamma_of(const FieldTower& tower, const Elem& lambda_top, const Elem& u, const Elem& alpha) {
    const ExtField& L = tower.L();
    const FieldAut& th = tower.theta();
    if (L.is_zero(alpha)) throw std::invalid_argument("alpha must be nonzero");
    const std::size_t n = tower.n();
    auto ring = make_ring(th);
    const Elem ua = L.mul(L.mul(th(alpha), u), L.inv(alpha));
    std::vector<Elem> betas;
    for (std::size_t i = 1; i < n; ++i) betas.push_back(th.pow(ua, static_cast<long long>(i)));
    SkewPoly p = lclm_linear(ring, betas);
    if (p.degree() != static_cast<long>(n) - 1) throw std::invalid_argument("alpha is not a cyclic vector");
    std::vector<Elem> m(n + 1);
    m[0] = L.neg(lambda_top);
    m[n] = L.one();
    SkewPoly mod(ring, m);
    DivResult d = right_div(mod, p);
    if (!d.r.is_zero() || d.q.degree() != 1) throw std::invalid_argument("alpha is not a cyclic vector");
    const Elem gamma = L.neg(d.q.coeff(0));
    if (!(SkewPoly::linear(ring, gamma) * p == mod)) throw std::logic_error("gamma factorization check failed");
    return gamma;
}

SkewPoly dual_linear_factorization(const CodeRing& ring, std::span<const Elem> gammas) {
    const FieldTower& t = ring.tower();
    const ExtField& L = t.L();
    auto top = make_ring(t.theta());
    std::vector<Elem> m(t.n() + 1);
    m[0] = L.neg(ring.lambda_top());
    m[t.n()] = L.one();
    SkewPoly mod(top, m);
    std::vector<Elem> betas;
    for (const auto& g : gammas) {
        if (L.is_zero(g) || !L.is_zero(left_eval(mod, g))) throw std::invalid_argument("not a left root of x^n - lambda");
        betas.push_back(t.theta()(L.inv(g)));
    }
    return lclm_linear(top, betas);
}

}  // namespace skewlcp
