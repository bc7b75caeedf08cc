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

#include "skewlcp/galois.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "gfp.hpp"

namespace skewlcp {

namespace {

std::vector<std::uint32_t> prime_factors(std::size_t n) {
    std::vector<std::uint32_t> out;
    for (std::size_t d = 2; d * d <= n; ++d) {
        if (n % d) continue;
        out.push_back(static_cast<std::uint32_t>(d));
        while (n % d == 0) n /= d;
    }
    if (n > 1) out.push_back(static_cast<std::uint32_t>(n));
    return out;
}

long long mod_ll(long long a, long long m) {
    long long r = a % m;
    return r < 0 ? r + m : r;
}

}  // namespace

std::size_t Elem::hash() const noexcept {
    std::uint64_t h = 1469598103934665603ULL;
    for (auto c : c_) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return static_cast<std::size_t>(h);
}

// ---------------------------------------------------------------------------
// prime / irreducibility tests

bool is_prime(std::uint64_t p) {
    if (p < 2) return false;
    for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

bool is_irreducible(std::uint32_t p, std::span<const std::uint32_t> poly) {
    gfp::Poly f(poly.begin(), poly.end());
    gfp::trim(f);
    if (f.size() < 2) return false;
    const std::size_t m = f.size() - 1;
    if (m == 1) return true;
    if (f[0] == 0) return false;
    // xp[k] = x^(p^k) mod f
    std::vector<gfp::Poly> xp(m + 1);
    xp[0] = {0, 1};
    for (std::size_t k = 1; k <= m; ++k) xp[k] = gfp::powmod(xp[k - 1], p, f, p);
    const gfp::Poly x{0, 1};
    if (gfp::sub(xp[m], x, p).size() != 0) return false;
    for (auto r : prime_factors(m)) {
        gfp::Poly g = gfp::gcd(gfp::sub(xp[m / r], x, p), f, p);
        if (g.size() != 1) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// ExtField

ExtField::ExtField(std::uint32_t p, std::vector<std::uint32_t> modulus, std::string name)
    : p_(p), m_(modulus.size() - 1), modulus_(std::move(modulus)), name_(std::move(name)) {
    order_ = 1;
    for (std::size_t i = 0; i < m_; ++i) order_ *= p_;
    inv_mod_p_.assign(p_, 0);
    for (std::uint32_t a = 1; a < p_; ++a) inv_mod_p_[a] = static_cast<std::uint8_t>(gfp::inv_mod(a, p_));
    build_frobenius();
}

std::shared_ptr<const ExtField> ExtField::create(std::uint32_t p, std::vector<std::uint32_t> modulus,
                                                 std::string name) {
    if (!is_prime(p)) throw FieldError("characteristic " + std::to_string(p) + " is not prime");
    if (p > kMaxCharacteristic) throw FieldError("characteristic " + std::to_string(p) + " is too large");
    if (modulus.size() < 2) throw FieldError("modulus must have degree at least 1");
    if (modulus.size() - 1 > kMaxDegree) throw FieldError("modulus degree exceeds " + std::to_string(kMaxDegree));
    for (auto c : modulus)
        if (c >= p) throw FieldError("modulus coefficient out of range");
    if (modulus.back() != 1) throw FieldError("modulus is not monic");
    const std::size_t m = modulus.size() - 1;
    if (m == 1 && modulus[0] != 0) throw FieldError("degree-1 fields use the modulus x");
    if (m > 1 && !is_irreducible(p, modulus)) throw FieldError("modulus is reducible");
    u128 order = 1;
    const u128 max = ~u128{0};
    for (std::size_t i = 0; i < m; ++i) {
        if (order > max / p) throw FieldError("field order does not fit in 128 bits");
        order *= p;
    }
    if (name.empty()) name = "a";
    return std::shared_ptr<const ExtField>(new ExtField(p, std::move(modulus), std::move(name)));
}

std::shared_ptr<const ExtField> ExtField::canonical(std::uint32_t p, std::size_t m, std::string name) {
    if (m == 0) throw FieldError("degree must be positive");
    if (!is_prime(p)) throw FieldError("characteristic " + std::to_string(p) + " is not prime");
    if (m == 1) return create(p, {0, 1}, std::move(name));
    std::vector<std::uint32_t> f(m + 1, 0);
    f[m] = 1;
    // Increment the low m coefficients as a base-p counter.
    for (;;) {
        std::size_t i = 0;
        while (i < m && ++f[i] == p) f[i++] = 0;
        if (i == m) throw FieldError("no irreducible polynomial found");
        if (f[0] != 0 && is_irreducible(p, f)) return create(p, f, std::move(name));
    }
}

void ExtField::build_frobenius() {
    const std::size_t m = m_;
    frob_.assign(m, std::vector<std::uint8_t>(m * m, 0));
    for (std::size_t i = 0; i < m; ++i) frob_[0][i * m + i] = 1;
    if (m == 1) return;
    // Column j of frob_[1] is (x^p)^j.
    Elem xp = pow(generator(), p_);
    Elem col = one();
    for (std::size_t j = 0; j < m; ++j) {
        for (std::size_t i = 0; i < m; ++i) frob_[1][i * m + j] = col[i];
        col = mul(col, xp);
    }
    for (std::size_t e = 2; e < m; ++e) {
        for (std::size_t j = 0; j < m; ++j) {
            for (std::size_t i = 0; i < m; ++i) {
                std::uint32_t acc = 0;
                for (std::size_t k = 0; k < m; ++k) acc += frob_[1][i * m + k] * frob_[e - 1][k * m + j];
                frob_[e][i * m + j] = static_cast<std::uint8_t>(acc % p_);
            }
        }
    }
}

Elem ExtField::one() const {
    Elem e;
    e[0] = 1;
    return e;
}

Elem ExtField::generator() const {
    Elem e;
    if (m_ > 1) e[1] = 1;
    return e;
}

Elem ExtField::scalar(std::uint64_t c) const {
    Elem e;
    e[0] = static_cast<std::uint8_t>(c % p_);
    return e;
}

Elem ExtField::from_coeffs(std::span<const std::uint32_t> coeffs) const {
    // Longer inputs are reduced modulo the modulus.
    if (coeffs.size() > m_) {
        gfp::Poly a(coeffs.begin(), coeffs.end());
        for (auto& c : a) c %= p_;
        a = gfp::mod(a, modulus_, p_);
        return from_coeffs(a);
    }
    Elem e;
    for (std::size_t i = 0; i < coeffs.size(); ++i) e[i] = static_cast<std::uint8_t>(coeffs[i] % p_);
    return e;
}

std::vector<std::uint32_t> ExtField::coeffs(const Elem& a) const {
    std::vector<std::uint32_t> out(m_);
    for (std::size_t i = 0; i < m_; ++i) out[i] = a[i];
    return out;
}

u128 ExtField::index(const Elem& a) const {
    u128 idx = 0;
    for (std::size_t i = m_; i-- > 0;) idx = idx * p_ + a[i];
    return idx;
}

Elem ExtField::from_index(u128 idx) const {
    if (idx >= order_) throw FieldError("element index out of range");
    Elem e;
    for (std::size_t i = 0; i < m_; ++i) {
        e[i] = static_cast<std::uint8_t>(idx % p_);
        idx /= p_;
    }
    return e;
}

bool ExtField::is_one(const Elem& a) const noexcept { return a == one(); }

Elem ExtField::add(const Elem& a, const Elem& b) const {
    Elem r;
    if (p_ == 2) {
        for (std::size_t i = 0; i < m_; ++i) r[i] = a[i] ^ b[i];
        return r;
    }
    for (std::size_t i = 0; i < m_; ++i) {
        unsigned s = a[i] + b[i];
        r[i] = static_cast<std::uint8_t>(s >= p_ ? s - p_ : s);
    }
    return r;
}

Elem ExtField::sub(const Elem& a, const Elem& b) const {
    if (p_ == 2) return add(a, b);
    Elem r;
    for (std::size_t i = 0; i < m_; ++i) {
        unsigned s = a[i] + p_ - b[i];
        r[i] = static_cast<std::uint8_t>(s >= p_ ? s - p_ : s);
    }
    return r;
}

Elem ExtField::neg(const Elem& a) const { return sub(Elem{}, a); }

Elem ExtField::mul(const Elem& a, const Elem& b) const {
    const std::size_t m = m_;
    std::uint32_t acc[2 * kMaxDegree] = {};
    std::size_t top_a = m, top_b = m;
    while (top_a > 0 && a[top_a - 1] == 0) --top_a;
    while (top_b > 0 && b[top_b - 1] == 0) --top_b;
    if (top_a == 0 || top_b == 0) return Elem{};
    for (std::size_t i = 0; i < top_a; ++i) {
        const std::uint32_t ai = a[i];
        if (!ai) continue;
        for (std::size_t j = 0; j < top_b; ++j) acc[i + j] += ai * b[j];
    }
    const std::size_t len = top_a + top_b - 1;
    for (std::size_t i = 0; i < len; ++i) acc[i] %= p_;
    // x^m = -(modulus_0 + ... + modulus_{m-1} x^{m-1})
    for (std::size_t i = len; i-- > m;) {
        const std::uint32_t c = acc[i] % p_;
        if (!c) continue;
        const std::uint32_t nc = p_ - c;
        for (std::size_t j = 0; j < m; ++j) {
            if (modulus_[j]) acc[i - m + j] = (acc[i - m + j] + nc * modulus_[j]) % p_;
        }
    }
    Elem r;
    for (std::size_t i = 0; i < m; ++i) r[i] = static_cast<std::uint8_t>(acc[i] % p_);
    return r;
}

Elem ExtField::scale(std::uint32_t c, const Elem& a) const {
    c %= p_;
    Elem r;
    for (std::size_t i = 0; i < m_; ++i) r[i] = static_cast<std::uint8_t>(c * a[i] % p_);
    return r;
}

Elem ExtField::inv(const Elem& a) const {
    if (is_zero(a)) throw FieldError("inverse of zero");
    if (m_ == 1) return scalar(inv_mod_p_[a[0]]);
    gfp::Poly s = gfp::inverse_mod(coeffs(a), modulus_, p_);
    return from_coeffs(s);
}

Elem ExtField::pow(const Elem& a, u128 e) const {
    if (e == 0) return one();
    if (is_zero(a)) return Elem{};
    e %= (order_ - 1);
    Elem r = one(), b = a;
    while (e) {
        if (e & 1) r = mul(r, b);
        e >>= 1;
        if (e) b = mul(b, b);
    }
    return r;
}

Elem ExtField::frobenius(const Elem& a, long long e) const {
    const std::size_t k = static_cast<std::size_t>(mod_ll(e, static_cast<long long>(m_)));
    if (k == 0) return a;
    const std::size_t m = m_;
    const auto& f = frob_[k];
    Elem r;
    for (std::size_t i = 0; i < m; ++i) {
        std::uint32_t acc = 0;
        for (std::size_t j = 0; j < m; ++j) acc += f[i * m + j] * a[j];
        r[i] = static_cast<std::uint8_t>(acc % p_);
    }
    return r;
}

Elem ExtField::random(Rng& rng) const {
    Elem e;
    for (std::size_t i = 0; i < m_; ++i) e[i] = static_cast<std::uint8_t>(rng.below(p_));
    return e;
}

Elem ExtField::random_nonzero(Rng& rng) const {
    for (;;) {
        Elem e = random(rng);
        if (!is_zero(e)) return e;
    }
}

std::string ExtField::format(const Elem& a) const {
    if (is_zero(a)) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = m_; i-- > 0;) {
        const unsigned c = a[i];
        if (!c) continue;
        if (!first) os << " + ";
        first = false;
        if (i == 0) {
            os << c;
            continue;
        }
        if (c != 1) os << c;
        os << name_;
        if (i > 1) os << '^' << i;
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// automorphisms and norms

FieldAut::FieldAut(FieldPtr field, std::size_t t) : field_(std::move(field)) {
    if (!field_) throw FieldError("automorphism without a field");
    const std::size_t m = field_->degree();
    t_ = t % m;
    order_ = m / std::gcd(m, t_);
}

Elem FieldAut::pow(const Elem& a, long long k) const {
    const long long m = static_cast<long long>(field_->degree());
    return field_->frobenius(a, mod_ll(mod_ll(k, m) * static_cast<long long>(t_), m));
}

FieldAut FieldAut::power(long long k) const {
    const long long m = static_cast<long long>(field_->degree());
    return FieldAut(field_, static_cast<std::size_t>(mod_ll(mod_ll(k, m) * static_cast<long long>(t_), m)));
}

Elem truncated_norm(const FieldAut& aut, std::size_t i, const Elem& a) {
    const ExtField& f = aut.field();
    Elem r = f.one(), c = a;
    for (std::size_t j = 0; j < i; ++j) {
        r = f.mul(r, c);
        if (j + 1 < i) c = aut(c);
    }
    return r;
}

Elem norm(const FieldAut& aut, const Elem& a) { return truncated_norm(aut, aut.order(), a); }

// ---------------------------------------------------------------------------
// embeddings

namespace {

Elem eval_prime_poly(const ExtField& f, std::span<const std::uint32_t> poly, const Elem& x) {
    Elem r;
    for (std::size_t i = poly.size(); i-- > 0;) r = f.add(f.mul(r, x), f.scalar(poly[i]));
    return r;
}

}  // namespace

Embedding::Embedding(FieldPtr sub, FieldPtr sup, const Elem& generator_image)
    : sub_(std::move(sub)), sup_(std::move(sup)), gen_image_(generator_image) {
    const std::size_t d = sub_->degree(), m = sup_->degree();
    const std::uint32_t p = sup_->characteristic();
    basis_images_.resize(d);
    Elem cur = sup_->one();
    for (std::size_t j = 0; j < d; ++j) {
        basis_images_[j] = cur;
        cur = sup_->mul(cur, gen_image_);
    }
    // [M | I] with M's columns the basis images; after elimination the
    // right block maps sup coordinates to sub coordinates.
    gfp::Matrix aug(m, std::vector<std::uint32_t>(d + m, 0));
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < d; ++j) aug[i][j] = basis_images_[j][i];
        aug[i][d + i] = 1;
    }
    auto piv = gfp::rref(aug, p);
    if (piv.size() < d || piv[d - 1] != d - 1) throw FieldError("embedding images are dependent");
    solver_rows_.assign(m, std::vector<std::uint32_t>(m));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) solver_rows_[i][j] = aug[i][d + j];
    solver_pivots_.assign(piv.begin(), piv.begin() + static_cast<std::ptrdiff_t>(d));
}

Embedding Embedding::via_image(FieldPtr sub, FieldPtr sup, const Elem& generator_image) {
    if (!sub || !sup) throw FieldError("embedding without fields");
    if (sub->characteristic() != sup->characteristic()) throw FieldError("embedding across characteristics");
    if (sup->degree() % sub->degree()) throw FieldError("subfield degree does not divide field degree");
    if (!sup->is_zero(eval_prime_poly(*sup, sub->modulus(), generator_image)))
        throw FieldError("image is not a root of the subfield modulus");
    return Embedding(std::move(sub), std::move(sup), generator_image);
}

Embedding Embedding::canonical(FieldPtr sub, FieldPtr sup) {
    if (!sub || !sup) throw FieldError("embedding without fields");
    if (sub->characteristic() != sup->characteristic()) throw FieldError("embedding across characteristics");
    if (sup->degree() % sub->degree()) throw FieldError("subfield degree does not divide field degree");
    if (sub->same_as(*sup)) return Embedding(sub, sup, sup->generator());
    const std::size_t d = sub->degree();
    const std::uint32_t p = sup->characteristic();
    // The roots live in the subfield of degree d, spanned by this basis.
    std::vector<Elem> basis = fixed_subspace_basis(FieldAut(sup, d));
    std::vector<std::uint32_t> digits(basis.size(), 0);
    std::optional<Elem> root;
    for (;;) {
        Elem x;
        for (std::size_t i = 0; i < basis.size(); ++i)
            if (digits[i]) x = sup->add(x, sup->scale(digits[i], basis[i]));
        if (sup->is_zero(eval_prime_poly(*sup, sub->modulus(), x))) {
            root = x;
            break;
        }
        std::size_t i = 0;
        while (i < digits.size() && ++digits[i] == p) digits[i++] = 0;
        if (i == digits.size()) break;
    }
    if (!root) throw FieldError("subfield modulus has no root");
    // All roots are the conjugates of the first one; keep the smallest.
    Elem best = *root, c = *root;
    for (std::size_t i = 1; i < d; ++i) {
        c = sup->frobenius(c, 1);
        if (sup->index(c) < sup->index(best)) best = c;
    }
    return Embedding(std::move(sub), std::move(sup), best);
}

Elem Embedding::operator()(const Elem& a) const {
    Elem r;
    for (std::size_t j = 0; j < basis_images_.size(); ++j)
        if (a[j]) r = sup_->add(r, sup_->scale(a[j], basis_images_[j]));
    return r;
}

std::optional<Elem> Embedding::preimage(const Elem& b) const {
    const std::size_t d = sub_->degree(), m = sup_->degree();
    const std::uint32_t p = sup_->characteristic();
    Elem out;
    for (std::size_t i = 0; i < m; ++i) {
        std::uint32_t acc = 0;
        for (std::size_t j = 0; j < m; ++j) acc = (acc + solver_rows_[i][j] * b[j]) % p;
        if (i < d)
            out[i] = static_cast<std::uint8_t>(acc);
        else if (acc)
            return std::nullopt;
    }
    return out;
}

Embedding Embedding::then(const Embedding& next) const {
    if (!sup_->same_as(next.sub())) throw FieldError("embeddings do not compose");
    return Embedding(sub_, next.sup_ptr(), next(gen_image_));
}

std::vector<std::uint32_t> minimal_polynomial(const ExtField& field, const Elem& a) {
    std::vector<Elem> conj{a};
    for (Elem c = field.frobenius(a, 1); c != a; c = field.frobenius(c, 1)) conj.push_back(c);
    // prod (x - c) with coefficients in the field, constant term first.
    std::vector<Elem> poly{field.one()};
    for (const auto& c : conj) {
        std::vector<Elem> next(poly.size() + 1);
        for (std::size_t i = 0; i < poly.size(); ++i) {
            next[i + 1] = field.add(next[i + 1], poly[i]);
            next[i] = field.sub(next[i], field.mul(c, poly[i]));
        }
        poly = std::move(next);
    }
    std::vector<std::uint32_t> out(poly.size());
    for (std::size_t i = 0; i < poly.size(); ++i) out[i] = poly[i][0];
    return out;
}

std::vector<Elem> fixed_subspace_basis(const FieldAut& aut) {
    const ExtField& f = aut.field();
    const std::size_t m = f.degree();
    const std::uint32_t p = f.characteristic();
    gfp::Matrix a(m, std::vector<std::uint32_t>(m, 0));
    for (std::size_t j = 0; j < m; ++j) {
        Elem e;
        e[j] = 1;
        Elem img = aut(e);
        for (std::size_t i = 0; i < m; ++i) a[i][j] = (img[i] + p - (i == j ? 1u : 0u)) % p;
    }
    std::vector<Elem> out;
    for (const auto& v : gfp::nullspace(a, m, p)) out.push_back(f.from_coeffs(v));
    return out;
}

// ---------------------------------------------------------------------------
// towers

std::size_t theta_exponent_for(std::size_t e, std::size_t j, std::size_t s) {
    if (e == 0 || s == 0) throw FieldError("degrees must be positive");
    j %= e;
    const std::size_t target = std::gcd(e, j);
    for (std::size_t t = j; t < e * s; t += e)
        if (std::gcd(e * s, t) == target) return t;
    throw FieldError("no admissible extension of the automorphism");
}

std::shared_ptr<const FieldTower> FieldTower::build(FieldPtr F, std::size_t sigma_exponent, std::size_t s) {
    if (!F) throw FieldError("tower without a base field");
    if (s == 0) throw FieldError("extension degree must be positive");
    const std::size_t e = F->degree();
    const std::uint32_t p = F->characteristic();
    const std::size_t j = sigma_exponent % e;
    auto tower = std::shared_ptr<FieldTower>(new FieldTower());
    tower->F_ = F;
    tower->sigma_.emplace(F, j);
    tower->mu_ = tower->sigma_->order();
    tower->s_ = s;
    tower->n_ = s * tower->mu_;
    if (s == 1) {
        tower->L_ = F;
        tower->f_in_l_.emplace(Embedding::via_image(F, F, F->generator()));
    } else {
        tower->L_ = ExtField::canonical(p, e * s, "l");
        tower->f_in_l_.emplace(Embedding::canonical(F, tower->L_));
    }
    tower->theta_.emplace(tower->L_, theta_exponent_for(e, j, s));
    const std::size_t kd = std::gcd(e, j);
    if (kd == e) {
        tower->K_ = F;
        tower->k_in_f_.emplace(Embedding::via_image(F, F, F->generator()));
    } else {
        tower->K_ = ExtField::canonical(p, kd, "k");
        tower->k_in_f_.emplace(Embedding::canonical(tower->K_, F));
    }
    tower->k_in_l_.emplace(tower->k_in_f_->then(*tower->f_in_l_));
    tower->finish();
    return tower;
}

std::shared_ptr<const FieldTower> FieldTower::from_top(FieldPtr L, std::size_t theta_exponent, std::size_t mu,
                                                       std::optional<Elem> f_generator, std::string f_name) {
    if (!L) throw FieldError("tower without a top field");
    const std::uint32_t p = L->characteristic();
    auto tower = std::shared_ptr<FieldTower>(new FieldTower());
    tower->L_ = L;
    tower->theta_.emplace(L, theta_exponent);
    const std::size_t n = tower->theta_->order();
    if (mu == 0 || n % mu) throw FieldError("mu must divide the order of theta");
    const std::size_t s = n / mu;
    const std::size_t e = L->degree() / s;
    FieldAut theta_mu = tower->theta_->power(static_cast<long long>(mu));
    if (f_generator) {
        if (theta_mu(*f_generator) != *f_generator) throw FieldError("F generator is not fixed by theta^mu");
        auto mp = minimal_polynomial(*L, *f_generator);
        if (mp.size() - 1 != e) throw FieldError("F generator does not generate the fixed field of theta^mu");
        tower->F_ = e == 1 ? ExtField::create(p, {0, 1}, f_name) : ExtField::create(p, mp, f_name);
        tower->f_in_l_.emplace(e == 1 ? Embedding::canonical(tower->F_, L)
                                      : Embedding::via_image(tower->F_, L, *f_generator));
    } else if (s == 1) {
        tower->F_ = L;
        tower->f_in_l_.emplace(Embedding::via_image(L, L, L->generator()));
    } else {
        tower->F_ = ExtField::canonical(p, e, "b");
        tower->f_in_l_.emplace(Embedding::canonical(tower->F_, L));
    }
    const std::size_t j = tower->theta_->frobenius_exponent() % e;
    tower->sigma_.emplace(tower->F_, j);
    tower->mu_ = mu;
    tower->s_ = s;
    tower->n_ = n;
    const std::size_t kd = std::gcd(e, j);
    if (kd == e) {
        tower->K_ = tower->F_;
        tower->k_in_f_.emplace(Embedding::via_image(tower->F_, tower->F_, tower->F_->generator()));
    } else {
        tower->K_ = ExtField::canonical(p, kd, "k");
        tower->k_in_f_.emplace(Embedding::canonical(tower->K_, tower->F_));
    }
    tower->k_in_l_.emplace(tower->k_in_f_->then(*tower->f_in_l_));
    tower->finish();
    return tower;
}

void FieldTower::finish() {
    const std::size_t m = L_->degree(), kd = K_->degree();
    const std::uint32_t p = L_->characteristic();
    if (kd * n_ != m) throw FieldError("tower degrees are inconsistent");
    l_powers_.resize(n_);
    const Elem ell = n_ == 1 ? L_->one() : L_->generator();
    l_powers_[0] = L_->one();
    for (std::size_t j = 1; j < n_; ++j) l_powers_[j] = L_->mul(l_powers_[j - 1], ell);
    std::vector<Elem> kappa(kd);
    kappa[0] = L_->one();
    const Elem kgen = (*k_in_l_)(K_->generator());
    for (std::size_t a = 1; a < kd; ++a) kappa[a] = L_->mul(kappa[a - 1], kgen);
    gfp::Matrix b(m, std::vector<std::uint32_t>(m, 0));
    for (std::size_t j = 0; j < n_; ++j) {
        for (std::size_t a = 0; a < kd; ++a) {
            const Elem v = L_->mul(kappa[a], l_powers_[j]);
            for (std::size_t i = 0; i < m; ++i) b[i][j * kd + a] = v[i];
        }
    }
    coord_inverse_ = gfp::inverse(b, p);
    if (coord_inverse_.empty()) throw FieldError("powers of the generator do not form a basis over K");
    validate();
}

std::vector<Elem> FieldTower::k_coords(const Elem& a) const {
    const std::size_t m = L_->degree(), kd = K_->degree();
    const std::uint32_t p = L_->characteristic();
    std::vector<Elem> out(n_);
    for (std::size_t i = 0; i < m; ++i) {
        std::uint32_t acc = 0;
        for (std::size_t j = 0; j < m; ++j) acc = (acc + coord_inverse_[i][j] * a[j]) % p;
        out[i / kd][i % kd] = static_cast<std::uint8_t>(acc);
    }
    return out;
}

Elem FieldTower::from_k_coords(std::span<const Elem> coords) const {
    if (coords.size() != n_) throw FieldError("wrong number of K-coordinates");
    Elem r;
    for (std::size_t j = 0; j < n_; ++j) r = L_->add(r, L_->mul((*k_in_l_)(coords[j]), l_powers_[j]));
    return r;
}

void FieldTower::validate() const {
    if (n_ != s_ * mu_) throw FieldError("n != s mu");
    if (theta_->order() != n_) throw FieldError("theta has the wrong order");
    if (sigma_->order() != mu_) throw FieldError("sigma has the wrong order");
    if (L_->degree() != F_->degree() * s_) throw FieldError("[L:F] != s");
    const Elem b = F_->generator();
    if ((*theta_)((*f_in_l_)(b)) != (*f_in_l_)((*sigma_)(b))) throw FieldError("theta does not extend sigma");
    const Elem k = K_->generator();
    if ((*sigma_)((*k_in_f_)(k)) != (*k_in_f_)(k)) throw FieldError("K is not fixed by sigma");
    if (fixed_subspace_basis(*theta_).size() != K_->degree()) throw FieldError("L^theta != K");
    if (fixed_subspace_basis(*sigma_).size() != K_->degree()) throw FieldError("F^sigma != K");
    if (k_in_l_->generator_image() != (*f_in_l_)(k_in_f_->generator_image()))
        throw FieldError("K embeddings disagree");
}

// ---------------------------------------------------------------------------
// constructive existence results

Elem norm_preimage(const FieldTower& tower, const Elem& lambda, std::uint64_t seed, std::uint64_t retry_budget) {
    const ExtField& L = tower.L();
    if (L.is_zero(lambda)) throw FieldError("norm preimage of zero");
    if (!tower.K_in_L().contains(lambda)) throw FieldError("lambda does not lie in K");
    if (L.is_one(lambda)) return L.one();
    Rng rng(seed);
    for (std::uint64_t tries = 0; tries < retry_budget; ++tries) {
        Elem u = L.random_nonzero(rng);
        if (tower.norm_L_K(u) == lambda) return u;
    }
    throw FieldError("norm preimage search exhausted its budget");
}

Elem hilbert90_solve(const FieldAut& aut, const Elem& beta, std::uint64_t seed, std::uint64_t retry_budget) {
    const ExtField& f = aut.field();
    if (f.is_zero(beta) || !f.is_one(norm(aut, beta))) throw FieldError("Hilbert 90 needs an element of norm 1");
    if (f.is_one(beta)) return f.one();
    const Elem binv = f.inv(beta);
    auto check = [&](const Elem& a) { return !f.is_zero(a) && f.mul(f.inv(a), aut(a)) == beta; };
    // alpha = sum_i N_i(beta^{-1}) aut^i(c) satisfies aut(alpha) = beta alpha.
    Rng rng(seed);
    for (std::uint64_t tries = 0; tries < retry_budget; ++tries) {
        const Elem c = f.random_nonzero(rng);
        Elem alpha, nb = f.one(), tc = c;
        for (std::size_t i = 0; i < aut.order(); ++i) {
            alpha = f.add(alpha, f.mul(nb, tc));
            nb = f.mul(nb, aut.pow(binv, static_cast<long long>(i)));
            tc = aut(tc);
        }
        if (check(alpha)) return alpha;
    }
    if (f.order() <= (u128{1} << 16)) {
        for (u128 i = 1; i < f.order(); ++i) {
            Elem a = f.from_index(i);
            if (check(a)) return a;
        }
    }
    throw FieldError("Hilbert 90 search exhausted its budget");
}

bool is_cyclic_vector(const FieldTower& tower, const Elem& u, const Elem& alpha) {
    const ExtField& L = tower.L();
    if (L.is_zero(alpha) || L.is_zero(u)) return false;
    const std::size_t m = L.degree(), kd = tower.K().degree();
    const std::uint32_t p = L.characteristic();
    std::vector<Elem> kappa(kd);
    kappa[0] = L.one();
    const Elem kgen = tower.K_in_L()(tower.K().generator());
    for (std::size_t a = 1; a < kd; ++a) kappa[a] = L.mul(kappa[a - 1], kgen);
    // K-span of the vectors is the GF(p)-span of their kappa multiples.
    gfp::Matrix rows;
    Elem ta = alpha, nu = L.one();
    for (std::size_t i = 0; i < tower.n(); ++i) {
        const Elem v = L.mul(ta, nu);
        for (std::size_t a = 0; a < kd; ++a) {
            const Elem w = L.mul(kappa[a], v);
            rows.emplace_back(m);
            for (std::size_t c = 0; c < m; ++c) rows.back()[c] = w[c];
        }
        nu = L.mul(nu, tower.theta().pow(u, static_cast<long long>(i)));
        ta = tower.theta()(ta);
    }
    return gfp::rref(rows, p).size() == m;
}

Elem cyclic_vector(const FieldTower& tower, const Elem& u, std::uint64_t seed, std::uint64_t retry_budget) {
    const ExtField& L = tower.L();
    if (L.is_zero(u)) throw FieldError("cyclic vector needs a nonzero u");
    Rng rng(seed);
    for (std::uint64_t tries = 0; tries < retry_budget; ++tries) {
        Elem a = L.random_nonzero(rng);
        if (is_cyclic_vector(tower, u, a)) return a;
    }
    throw FieldError("cyclic vector search exhausted its budget");
}

}  // namespace skewlcp
