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

#include "skewlcp/skewpoly.hpp"

#include <algorithm>

namespace skewlcp {

SkewRing::SkewRing(FieldAut aut) : aut_(std::move(aut)) {}

SkewPoly::SkewPoly(RingPtr ring, std::vector<Elem> coeffs) : ring_(std::move(ring)), c_(std::move(coeffs)) {
    if (!ring_) throw std::invalid_argument("polynomial without ring");
    while (!c_.empty() && ring_->field().is_zero(c_.back())) c_.pop_back();
}

SkewPoly SkewPoly::one(const RingPtr& ring) { return constant(ring, ring->field().one()); }

SkewPoly SkewPoly::x_pow(const RingPtr& ring, std::size_t k) {
    std::vector<Elem> c(k + 1);
    c[k] = ring->field().one();
    return SkewPoly(ring, std::move(c));
}

SkewPoly SkewPoly::constant(const RingPtr& ring, const Elem& a) { return SkewPoly(ring, {a}); }

SkewPoly SkewPoly::linear(const RingPtr& ring, const Elem& beta) {
    return SkewPoly(ring, {ring->field().neg(beta), ring->field().one()});
}

bool SkewPoly::is_one() const { return c_.size() == 1 && field().is_one(c_[0]); }

bool SkewPoly::is_monic() const { return !c_.empty() && field().is_one(c_.back()); }

void SkewPoly::check_same(const SkewPoly& o) const {
    if (!ring_ || !o.ring_ || !ring_->same_as(*o.ring_)) throw RingMismatch("polynomials from different rings");
}

SkewPoly SkewPoly::operator+(const SkewPoly& o) const {
    check_same(o);
    const ExtField& f = field();
    std::vector<Elem> c(std::max(c_.size(), o.c_.size()));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = f.add(coeff(i), o.coeff(i));
    return SkewPoly(ring_, std::move(c));
}

SkewPoly SkewPoly::operator-(const SkewPoly& o) const {
    check_same(o);
    const ExtField& f = field();
    std::vector<Elem> c(std::max(c_.size(), o.c_.size()));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = f.sub(coeff(i), o.coeff(i));
    return SkewPoly(ring_, std::move(c));
}

SkewPoly SkewPoly::operator-() const {
    std::vector<Elem> c(c_.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = field().neg(c_[i]);
    return SkewPoly(ring_, std::move(c));
}

SkewPoly SkewPoly::operator*(const SkewPoly& o) const {
    check_same(o);
    if (is_zero() || o.is_zero()) return zero(ring_);
    const ExtField& f = field();
    std::vector<Elem> c(c_.size() + o.c_.size() - 1);
    // tw holds sigma^i(o_j) for the current i.
    std::vector<Elem> tw = o.c_;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (i > 0)
            for (auto& b : tw) b = ring_->sigma(b);
        if (f.is_zero(c_[i])) continue;
        for (std::size_t j = 0; j < tw.size(); ++j) c[i + j] = f.add(c[i + j], f.mul(c_[i], tw[j]));
    }
    return SkewPoly(ring_, std::move(c));
}

SkewPoly SkewPoly::left_scale(const Elem& a) const {
    std::vector<Elem> c(c_.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = field().mul(a, c_[i]);
    return SkewPoly(ring_, std::move(c));
}

SkewPoly SkewPoly::right_scale(const Elem& a) const {
    std::vector<Elem> c(c_.size());
    Elem t = a;
    for (std::size_t i = 0; i < c.size(); ++i) {
        c[i] = field().mul(c_[i], t);
        t = ring_->sigma(t);
    }
    return SkewPoly(ring_, std::move(c));
}

SkewPoly SkewPoly::shift(std::size_t k) const {
    if (is_zero()) return *this;
    std::vector<Elem> c(k);
    c.insert(c.end(), c_.begin(), c_.end());
    return SkewPoly(ring_, std::move(c));
}

SkewPoly SkewPoly::left_monic() const {
    if (is_zero()) throw std::domain_error("zero polynomial has no monic form");
    return left_scale(field().inv(lead()));
}

SkewPoly SkewPoly::right_monic() const {
    if (is_zero()) throw std::domain_error("zero polynomial has no monic form");
    // (c x^d) b = c sigma^d(b) x^d
    return right_scale(ring_->sigma(field().inv(lead()), -degree()));
}

std::string SkewPoly::format(const std::string& var) const {
    if (is_zero()) return "0";
    const ExtField& f = field();
    std::string out;
    for (std::size_t k = c_.size(); k-- > 0;) {
        if (f.is_zero(c_[k])) continue;
        if (!out.empty()) out += " + ";
        std::string a = f.format(c_[k]);
        const bool compound = a.find(' ') != std::string::npos;
        if (k == 0) {
            out += a;
            continue;
        }
        if (!f.is_one(c_[k])) out += compound ? "(" + a + ")" : a;
        out += var;
        if (k > 1) out += "^" + std::to_string(k);
    }
    return out;
}

DivResult right_div(const SkewPoly& f, const SkewPoly& g) {
    if (g.is_zero()) throw std::domain_error("division by zero polynomial");
    if (!f.ring().same_as(g.ring())) throw RingMismatch("polynomials from different rings");
    const RingPtr& ring = f.ring_ptr();
    const ExtField& F = f.field();
    std::vector<Elem> r = f.coeffs();
    const long dg = g.degree();
    if (f.degree() < dg) return {SkewPoly::zero(ring), f};
    std::vector<Elem> q(static_cast<std::size_t>(f.degree() - dg) + 1);
    const auto& gc = g.coeffs();
    for (long d = f.degree() - dg; d >= 0; --d) {
        const std::size_t top = static_cast<std::size_t>(d + dg);
        if (F.is_zero(r[top])) continue;
        // (c x^d) g has leading coefficient c sigma^d(g_lead).
        std::vector<Elem> tg(gc.size());
        for (std::size_t j = 0; j < gc.size(); ++j) tg[j] = ring->sigma(gc[j], d);
        const Elem c = F.mul(r[top], F.inv(tg.back()));
        q[static_cast<std::size_t>(d)] = c;
        for (std::size_t j = 0; j < gc.size(); ++j)
            r[j + static_cast<std::size_t>(d)] = F.sub(r[j + static_cast<std::size_t>(d)], F.mul(c, tg[j]));
    }
    r.resize(static_cast<std::size_t>(dg));
    return {SkewPoly(ring, std::move(q)), SkewPoly(ring, std::move(r))};
}

DivResult left_div(const SkewPoly& f, const SkewPoly& g) {
    if (g.is_zero()) throw std::domain_error("division by zero polynomial");
    if (!f.ring().same_as(g.ring())) throw RingMismatch("polynomials from different rings");
    const RingPtr& ring = f.ring_ptr();
    const ExtField& F = f.field();
    std::vector<Elem> r = f.coeffs();
    const long dg = g.degree();
    if (f.degree() < dg) return {SkewPoly::zero(ring), f};
    std::vector<Elem> q(static_cast<std::size_t>(f.degree() - dg) + 1);
    const auto& gc = g.coeffs();
    const Elem lead_inv = F.inv(g.lead());
    for (long d = f.degree() - dg; d >= 0; --d) {
        const std::size_t top = static_cast<std::size_t>(d + dg);
        if (F.is_zero(r[top])) continue;
        // g (c x^d) = sum g_j sigma^j(c) x^{j+d}
        const Elem c = ring->sigma(F.mul(lead_inv, r[top]), -dg);
        q[static_cast<std::size_t>(d)] = c;
        Elem sc = c;
        for (std::size_t j = 0; j < gc.size(); ++j) {
            r[j + static_cast<std::size_t>(d)] = F.sub(r[j + static_cast<std::size_t>(d)], F.mul(gc[j], sc));
            sc = ring->sigma(sc);
        }
    }
    r.resize(static_cast<std::size_t>(dg));
    return {SkewPoly(ring, std::move(q)), SkewPoly(ring, std::move(r))};
}

SkewPoly gcrd(const SkewPoly& f, const SkewPoly& g) {
    if (f.is_zero() && g.is_zero()) throw std::domain_error("gcrd of zero polynomials");
    SkewPoly a = f, b = g;
    while (!b.is_zero()) {
        SkewPoly r = right_rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return a.left_monic();
}

SkewPoly gcld(const SkewPoly& f, const SkewPoly& g) {
    if (f.is_zero() && g.is_zero()) throw std::domain_error("gcld of zero polynomials");
    SkewPoly a = f, b = g;
    while (!b.is_zero()) {
        SkewPoly r = left_rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return a.right_monic();
}

SkewPoly lclm(const SkewPoly& f, const SkewPoly& g) {
    if (f.is_zero() || g.is_zero()) throw std::domain_error("lclm with a zero polynomial");
    // r_i = s_i f + t_i g; the first vanishing r gives s f = -t g.
    SkewPoly r0 = f, r1 = g;
    SkewPoly s0 = SkewPoly::one(f.ring_ptr()), s1 = SkewPoly::zero(f.ring_ptr());
    while (!r1.is_zero()) {
        DivResult d = right_div(r0, r1);
        SkewPoly s2 = s0 - d.q * s1;
        r0 = std::move(r1);
        r1 = std::move(d.r);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    return (s1 * f).left_monic();
}

SkewPoly lcrm(const SkewPoly& f, const SkewPoly& g) {
    if (f.is_zero() || g.is_zero()) throw std::domain_error("lcrm with a zero polynomial");
    // r_i = f s_i + g t_i
    SkewPoly r0 = f, r1 = g;
    SkewPoly s0 = SkewPoly::one(f.ring_ptr()), s1 = SkewPoly::zero(f.ring_ptr());
    while (!r1.is_zero()) {
        DivResult d = left_div(r0, r1);
        SkewPoly s2 = s0 - s1 * d.q;
        r0 = std::move(r1);
        r1 = std::move(d.r);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    return (f * s1).right_monic();
}

SkewPoly gcrd(std::span<const SkewPoly> fs) {
    if (fs.empty()) throw std::domain_error("gcrd of an empty list");
    SkewPoly acc = fs[0];
    for (std::size_t i = 1; i < fs.size(); ++i) acc = acc.is_zero() && fs[i].is_zero() ? acc : gcrd(acc, fs[i]);
    if (acc.is_zero()) throw std::domain_error("gcrd of zero polynomials");
    return acc.left_monic();
}

SkewPoly gcld(std::span<const SkewPoly> fs) {
    if (fs.empty()) throw std::domain_error("gcld of an empty list");
    SkewPoly acc = fs[0];
    for (std::size_t i = 1; i < fs.size(); ++i) acc = acc.is_zero() && fs[i].is_zero() ? acc : gcld(acc, fs[i]);
    if (acc.is_zero()) throw std::domain_error("gcld of zero polynomials");
    return acc.right_monic();
}

SkewPoly lclm(const RingPtr& ring, std::span<const SkewPoly> fs) {
    SkewPoly acc = SkewPoly::one(ring);
    for (const auto& f : fs) acc = lclm(acc, f);
    return acc;
}

SkewPoly lcrm(const RingPtr& ring, std::span<const SkewPoly> fs) {
    SkewPoly acc = SkewPoly::one(ring);
    for (const auto& f : fs) acc = lcrm(acc, f);
    return acc;
}

SkewPoly lclm_linear(const RingPtr& ring, std::span<const Elem> betas) {
    SkewPoly acc = SkewPoly::one(ring);
    for (const auto& b : betas) acc = lclm(acc, SkewPoly::linear(ring, b));
    return acc;
}

SkewPoly lcrm_linear(const RingPtr& ring, std::span<const Elem> betas) {
    SkewPoly acc = SkewPoly::one(ring);
    for (const auto& b : betas) acc = lcrm(acc, SkewPoly::linear(ring, b));
    return acc;
}

Elem right_eval(const SkewPoly& g, const Elem& gamma) {
    const ExtField& F = g.field();
    Elem acc{}, n = F.one();
    for (std::size_t i = 0; i < g.coeffs().size(); ++i) {
        acc = F.add(acc, F.mul(g.coeffs()[i], n));
        n = F.mul(n, g.ring().sigma(gamma, static_cast<long long>(i)));
    }
    return acc;
}

Elem left_eval(const SkewPoly& g, const Elem& gamma) {
    const ExtField& F = g.field();
    Elem acc{}, n = F.one();
    for (std::size_t i = 0; i < g.coeffs().size(); ++i) {
        const long long k = static_cast<long long>(i);
        acc = F.add(acc, F.mul(g.ring().sigma(g.coeffs()[i], -k), n));
        n = F.mul(n, g.ring().sigma(gamma, -k));
    }
    return acc;
}

bool is_p_independent(const RingPtr& ring, std::span<const Elem> betas) {
    return lclm_linear(ring, betas).degree() == static_cast<long>(betas.size());
}

}  // namespace skewlcp
