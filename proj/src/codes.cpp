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

#include "skewlcp/codes.hpp"

namespace skewlcp {

CodeRingPtr CodeRing::create(TowerPtr tower, const Elem& lambda, Level level) {
    if (!tower) throw std::invalid_argument("code ring without tower");
    const ExtField& coeff = level == Level::Base ? tower->F() : tower->L();
    if (coeff.is_zero(lambda)) throw std::invalid_argument("lambda must be nonzero");
    const FieldAut& aut = level == Level::Base ? tower->sigma() : tower->theta();
    if (!(aut(lambda) == lambda)) throw std::invalid_argument("lambda must lie in the fixed field K");

    std::shared_ptr<CodeRing> r(new CodeRing());
    r->tower_ = tower;
    r->level_ = level;
    r->base_ring_ = make_ring(tower->sigma());
    r->top_ring_ = make_ring(tower->theta());
    r->ring_ = level == Level::Base ? r->base_ring_ : r->top_ring_;
    r->lambda_ = lambda;
    r->lambda_top_ = level == Level::Base ? tower->F_in_L()(lambda) : lambda;
    std::vector<Elem> m(tower->n() + 1);
    m[0] = coeff.neg(lambda);
    m[tower->n()] = coeff.one();
    r->modulus_ = SkewPoly(r->ring_, std::move(m));
    return r;
}

CodeRingPtr CodeRing::with_lambda(const Elem& lambda) const { return create(tower_, lambda, level_); }

CodeRingPtr CodeRing::at_level(Level level) const {
    if (level == level_) return create(tower_, lambda_, level_);
    if (level == Level::Top) return create(tower_, lambda_top_, level);
    auto down = tower_->F_in_L().preimage(lambda_);
    if (!down) throw std::logic_error("lambda outside F");
    return create(tower_, *down, level);
}

SkewPoly CodeRing::reduce(const SkewPoly& f) const {
    const std::size_t n = tower_->n();
    if (f.degree() < static_cast<long>(n)) return f.ring().same_as(*ring_) ? f : SkewPoly(ring_, f.coeffs());
    const ExtField& F = field();
    std::vector<Elem> c = f.coeffs();
    // a x^{i} = a x^{i-n} x^n = a lambda x^{i-n} since lambda is central
    for (std::size_t i = c.size(); i-- > n;) {
        if (F.is_zero(c[i])) continue;
        c[i - n] = F.add(c[i - n], F.mul(c[i], lambda_));
        c[i] = Elem{};
    }
    return SkewPoly(ring_, std::move(c));
}

std::vector<Elem> CodeRing::vec(const SkewPoly& f) const {
    SkewPoly r = reduce(f);
    std::vector<Elem> v(n());
    for (std::size_t i = 0; i < r.coeffs().size(); ++i) v[i] = r.coeffs()[i];
    return v;
}

SkewPoly CodeRing::lift(const SkewPoly& f) const {
    if (f.ring().same_as(*top_ring_)) return SkewPoly(top_ring_, f.coeffs());
    if (!f.ring().same_as(*base_ring_)) throw RingMismatch("polynomial is not over this tower");
    const Embedding& e = tower_->F_in_L();
    return map_coeffs(f, top_ring_, [&](const Elem& a) { return e(a); });
}

std::optional<SkewPoly> CodeRing::descend(const SkewPoly& f) const {
    if (!f.ring().same_as(*top_ring_)) {
        if (f.ring().same_as(*base_ring_)) return SkewPoly(base_ring_, f.coeffs());
        throw RingMismatch("polynomial is not over this tower");
    }
    std::vector<Elem> c;
    for (const auto& a : f.coeffs()) {
        auto p = tower_->F_in_L().preimage(a);
        if (!p) return std::nullopt;
        c.push_back(*p);
    }
    return SkewPoly(base_ring_, std::move(c));
}

bool CodeRing::same_as(const CodeRing& o) const noexcept {
    if (this == &o) return true;
    if (level_ != o.level_ || !(lambda_ == o.lambda_)) return false;
    if (tower_ == o.tower_) return true;
    return tower_->L().same_as(o.tower_->L()) && tower_->F().same_as(o.tower_->F()) &&
           tower_->theta().same_as(o.tower_->theta()) && tower_->mu() == o.tower_->mu() &&
           tower_->F_in_L().generator_image() == o.tower_->F_in_L().generator_image();
}

const char* to_string(BoundProvenance p) {
    switch (p) {
        case BoundProvenance::BchDesigned:
            return "bch-designed";
        case BoundProvenance::ExternallyAsserted:
            return "externally-asserted";
        case BoundProvenance::Computed:
            return "computed";
    }
    return "unknown";
}

namespace {

SkewPoly in_ring(const CodeRing& ring, const SkewPoly& f) {
    if (f.ring().same_as(*ring.ring())) return SkewPoly(ring.ring(), f.coeffs());
    if (ring.level() == Level::Top) return ring.lift(f);
    auto d = ring.descend(f);
    if (!d) throw RingMismatch("coefficients outside the code ring's field");
    return *d;
}

}  // namespace

Code Code::from_generator(CodeRingPtr ring, const SkewPoly& f) {
    if (f.is_zero()) throw std::invalid_argument("zero generator");
    SkewPoly g = gcrd(ring->reduce(in_ring(*ring, f)), ring->modulus());
    return Code(std::move(ring), std::move(g));
}

Code Code::from_divisor(CodeRingPtr ring, const SkewPoly& g) {
    SkewPoly h = in_ring(*ring, g);
    if (!h.is_monic()) throw std::invalid_argument("generator must be monic");
    if (!right_rem(ring->modulus(), h).is_zero()) throw std::invalid_argument("generator does not right-divide x^n - lambda");
    return Code(std::move(ring), std::move(h));
}

Matrix Code::generator_matrix() const {
    if (is_zero_code()) throw std::domain_error("zero code has no generator matrix");
    const std::size_t k = dimension(), n = length();
    Matrix m(ring_->field_ptr(), k, n);
    SkewPoly row = g_;
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < row.coeffs().size(); ++j) m.at(i, j) = row.coeffs()[j];
        row = ring_->reduce(SkewPoly::x_pow(ring_->ring(), 1) * row);
    }
    return m;
}

Matrix Code::parity_check_matrix() const {
    const std::size_t r = redundancy(), n = length();
    if (r == 0) throw std::domain_error("full code has no parity-check matrix");
    Matrix m(ring_->field_ptr(), r, n);
    SkewPoly xi = SkewPoly::one(ring_->ring());
    const SkewPoly x = SkewPoly::x_pow(ring_->ring(), 1);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < xi.coeffs().size(); ++j) m.at(j, i) = xi.coeffs()[j];
        xi = right_rem(x * xi, g_);
    }
    return m;
}

bool Code::contains(const SkewPoly& c) const { return right_rem(ring_->reduce(in_ring(*ring_, c)), g_).is_zero(); }

bool Code::contains(std::span<const Elem> word) const {
    return contains(ring_->poly({word.begin(), word.end()}));
}

bool Code::is_over_subfield() const {
    if (ring_->level() == Level::Base) return true;
    return ring_->descend(g_).has_value();
}

Code Code::with_bound(DistanceBound b) const {
    Code c = *this;
    c.bound_ = b;
    return c;
}

std::size_t weight(std::span<const Elem> word, const ExtField& field) {
    std::size_t w = 0;
    for (const auto& e : word) w += field.is_zero(e) ? 0 : 1;
    return w;
}

std::size_t weight(const CodeRing& ring, const SkewPoly& f) {
    auto v = ring.vec(f);
    return weight(v, ring.field());
}

namespace {

void require_preimage(const CodeRing& ring, const Elem& u) {
    if (!(ring.tower().norm_L_K(u) == ring.lambda_top())) throw NotNormPreimage("u is not a norm preimage of lambda");
}

}  // namespace

ESpace e_space(const CodeRing& ring, const SkewPoly& g, const Elem& u) {
    require_preimage(ring, u);
    const FieldTower& t = ring.tower();
    const ExtField& L = t.L();
    const FieldAut& th = t.theta();
    SkewPoly gl = ring.lift(g);
    const std::size_t n = t.n();
    // columns: K-coordinates of g(T_u)(l^j), T_u^i(a) = theta^i(a) N_i(u)
    std::vector<Elem> nu(gl.coeffs().size());
    for (std::size_t i = 0; i < nu.size(); ++i) nu[i] = truncated_norm(th, i, u);
    Matrix m(t.K_ptr(), n, n);
    for (std::size_t j = 0; j < n; ++j) {
        const Elem a = L.gen_pow(j);
        Elem img{}, ti = a;
        for (std::size_t i = 0; i < gl.coeffs().size(); ++i) {
            img = L.add(img, L.mul(gl.coeffs()[i], L.mul(ti, nu[i])));
            ti = th(ti);
        }
        auto kc = t.k_coords(img);
        for (std::size_t r = 0; r < n; ++r) m.at(r, j) = kc[r];
    }
    return {m.nullspace(), u};
}

SkewPoly divisor_from_subspace(const CodeRing& ring, const Matrix& v, const Elem& u) {
    require_preimage(ring, u);
    const FieldTower& t = ring.tower();
    if (v.rows() && v.rank() != v.rows()) throw std::invalid_argument("subspace basis is linearly dependent");
    const ExtField& L = t.L();
    std::vector<Elem> betas;
    for (std::size_t i = 0; i < v.rows(); ++i) {
        auto row = v.row(i);
        const Elem a = t.from_k_coords(row);
        betas.push_back(L.mul(L.mul(L.inv(a), u), t.theta()(a)));
    }
    return lclm_linear(make_ring(t.theta()), betas);
}

std::optional<Elem> w_polynomial_context(const CodeRing& ring, std::uint64_t seed) {
    const ExtField& L = ring.tower().L();
    if (L.is_one(ring.lambda_top())) return L.one();
    return norm_preimage(ring.tower(), ring.lambda_top(), seed);
}

}  // namespace skewlcp
