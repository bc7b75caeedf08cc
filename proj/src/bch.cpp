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

#include "skewlcp/bch.hpp"

#include "skewlcp/duality.hpp"

namespace skewlcp {

Elem conjugate(const FieldTower& tower, const Elem& a, const Elem& b) {
    const ExtField& L = tower.L();
    if (L.is_zero(b)) throw std::invalid_argument("conjugation by zero");
    return L.mul(L.mul(tower.theta()(b), a), L.inv(b));
}

void BchSpec::validate() const {
    if (!ring) throw std::invalid_argument("BCH spec without ring");
    if (ring->level() != Level::Base) throw std::invalid_argument("BCH codes live in the base ring");
    const FieldTower& t = ring->tower();
    if (!(t.norm_L_K(u) == ring->lambda_top())) throw std::invalid_argument("u is not a norm preimage of lambda");
    if (t.L().is_zero(alpha) || !is_cyclic_vector(t, u, alpha)) throw std::invalid_argument("alpha is not a cyclic vector");
    if (r >= t.n()) throw std::invalid_argument("offset r out of range");
    if (delta < 2 || delta > t.mu()) throw std::invalid_argument("designed distance out of range");
}

SkewPoly bch_lclm(const FieldTower& tower, const Elem& u, const Elem& alpha, const std::vector<std::size_t>& indices) {
    const Elem ua = conjugate(tower, u, alpha);
    std::vector<Elem> betas;
    for (auto i : indices)
        for (std::size_t j = 0; j < tower.s(); ++j)
            betas.push_back(tower.theta().pow(ua, static_cast<long long>(i + j * tower.mu())));
    return lclm_linear(make_ring(tower.theta()), betas);
}

Code bch_code(const CodeRingPtr& ring, const Elem& u, const Elem& alpha, const std::vector<std::size_t>& indices) {
    SkewPoly top = bch_lclm(ring->tower(), u, alpha, indices);
    auto down = ring->descend(top);
    if (!down) throw std::logic_error("BCH generator has coefficients outside F");
    return Code::from_divisor(ring, *down);
}

namespace {

std::vector<std::size_t> window(std::size_t from, std::size_t to) {
    std::vector<std::size_t> v;
    for (std::size_t i = from; i <= to; ++i) v.push_back(i);
    return v;
}

}  // namespace

Code bch_generator(const BchSpec& spec) {
    spec.validate();
    Code c = bch_code(spec.ring, spec.u, spec.alpha, window(spec.r, spec.r + spec.delta - 2));
    return c.with_bound({spec.delta, BoundProvenance::BchDesigned});
}

std::pair<Code, Code> bch_lcp(const BchSpec& spec) {
    Code c = bch_generator(spec);
    const std::size_t mu = spec.ring->tower().mu();
    Code d = bch_code(spec.ring, spec.u, spec.alpha, window(spec.r + spec.delta - 1, spec.r + mu - 1));
    return {c, d.with_bound({mu - spec.delta + 2, BoundProvenance::BchDesigned})};
}

Code bch_dual(const BchSpec& spec) {
    spec.validate();
    const FieldTower& t = spec.ring->tower();
    const ExtField& L = t.L();
    const Elem gamma = gamma_of(t, spec.ring->lambda_top(), spec.u, spec.alpha);
    const Elem gp = L.inv(t.theta()(gamma));
    std::vector<Elem> betas;
    for (std::size_t i = spec.r + spec.delta - 1; i <= spec.r + t.mu() - 1; ++i)
        for (std::size_t j = 0; j < t.s(); ++j)
            betas.push_back(t.theta().pow(gp, static_cast<long long>(i + j * t.mu())));
    SkewPoly top = lclm_linear(make_ring(t.theta()), betas);
    auto dual_ring = spec.ring->with_lambda(spec.ring->field().inv(spec.ring->lambda()));
    auto down = dual_ring->descend(top);
    if (!down) throw std::logic_error("dual BCH generator has coefficients outside F");
    return Code::from_divisor(dual_ring, *down).with_bound({t.mu() - spec.delta + 2, BoundProvenance::BchDesigned});
}

SkewPoly split_product(const FieldTower& tower, const Elem& lambda_top, const Elem& u, const Elem& alpha,
                       const std::vector<bool>& in_t) {
    const Elem gamma = gamma_of(tower, lambda_top, u, alpha);
    const Elem ua = conjugate(tower, u, alpha);
    std::vector<Elem> left, right;
    for (std::size_t i = 0; i < tower.n(); ++i) {
        const auto k = static_cast<long long>(i);
        if (i < in_t.size() && in_t[i])
            right.push_back(tower.theta().pow(ua, k));
        else
            left.push_back(tower.theta().pow(gamma, k));
    }
    auto ring = make_ring(tower.theta());
    return lcrm_linear(ring, left) * lclm_linear(ring, right);
}

}  // namespace skewlcp
