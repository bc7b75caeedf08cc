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

#include "skewlcp/galois.hpp"
#include "support/oracle.hpp"

using namespace skewlcp;

namespace {

oracle::Vec to_vec(const ExtField& f, const Elem& a) {
    oracle::Vec v(f.degree());
    for (std::size_t i = 0; i < f.degree(); ++i) v[i] = a[i];
    return v;
}

oracle::Vec modulus_vec(const ExtField& f) { return {f.modulus().begin(), f.modulus().end()}; }

Elem el(const ExtField& f, std::vector<std::uint32_t> c) { return f.from_coeffs(c); }

// GF(2^8) with a^8 + a^4 + a^3 + a^2 + 1 = 0.
FieldPtr gf256() { return ExtField::create(2, {1, 0, 1, 1, 1, 0, 0, 0, 1}, "a"); }
// GF(9) with alpha^2 = alpha + 1.
FieldPtr gf9() { return ExtField::create(3, {2, 2, 1}, "alpha"); }

}  // namespace

TEST_CASE("field construction accepts irreducible moduli and rejects the rest") {
    CHECK(gf256()->order() == 256);
    CHECK(gf9()->order() == 9);
    CHECK_THROWS_AS(ExtField::create(4, {1, 1, 1}), FieldError);
    CHECK_THROWS_AS(ExtField::create(2, {1, 0, 1}), FieldError);     // (x+1)^2
    CHECK_THROWS_AS(ExtField::create(3, {2, 2, 2}), FieldError);     // not monic
    CHECK_THROWS_AS(ExtField::create(2, {1, 1}), FieldError);        // degree 1 must be x
    CHECK_THROWS_AS(ExtField::create(2, {1}), FieldError);
    auto f2 = ExtField::create(2, {0, 1});
    CHECK(f2->order() == 2);
    CHECK(f2->is_one(f2->mul(f2->one(), f2->one())));
}

TEST_CASE("canonical fields take the first irreducible modulus in index order") {
    // Oracle: brute-force irreducibility by trial division over all monic
    // lower-degree polynomials.
    auto irreducible = [](std::vector<long long> f, long long p) {
        const std::size_t m = f.size() - 1;
        for (std::size_t d = 1; d <= m / 2; ++d) {
            std::size_t count = 1;
            for (std::size_t i = 0; i < d; ++i) count *= static_cast<std::size_t>(p);
            for (std::size_t idx = 0; idx < count; ++idx) {
                std::vector<long long> g(d + 1, 0);
                g[d] = 1;
                std::size_t t = idx;
                for (std::size_t i = 0; i < d; ++i) g[i] = static_cast<long long>(t % p), t /= p;
                std::vector<long long> r = f;
                for (std::size_t i = r.size(); i-- > d;) {
                    long long c = oracle::md(r[i], p);
                    for (std::size_t j = 0; j <= d; ++j) r[i - d + j] = oracle::md(r[i - d + j] - c * g[j], p);
                }
                bool zero = true;
                for (std::size_t i = 0; i < d; ++i) zero = zero && oracle::md(r[i], p) == 0;
                if (zero) return false;
            }
        }
        return true;
    };
    for (auto [p, m] : {std::pair{2u, 4u}, {2u, 6u}, {3u, 3u}, {5u, 2u}}) {
        auto f = ExtField::canonical(p, m);
        std::vector<long long> expect;
        std::size_t count = 1;
        for (unsigned i = 0; i < m; ++i) count *= p;
        for (std::size_t idx = 0; idx < count && expect.empty(); ++idx) {
            std::vector<long long> g(m + 1, 0);
            g[m] = 1;
            std::size_t t = idx;
            for (unsigned i = 0; i < m; ++i) g[i] = static_cast<long long>(t % p), t /= p;
            if (g[0] != 0 && irreducible(g, p)) expect = g;
        }
        CHECK(std::vector<long long>(f->modulus().begin(), f->modulus().end()) == expect);
    }
}

TEST_CASE("multiplication, inversion and Frobenius agree with the shift-and-add oracle") {
    Rng rng(7);
    for (auto f : {gf256(), gf9(), ExtField::create(5, {2, 1, 4, 2, 3, 3, 0, 0, 0, 0, 1})}) {
        const auto mod = modulus_vec(*f);
        const long long p = f->characteristic();
        for (int trial = 0; trial < 200; ++trial) {
            Elem a = f->random(rng), b = f->random(rng);
            CHECK(to_vec(*f, f->mul(a, b)) == oracle::field_mul(to_vec(*f, a), to_vec(*f, b), mod, p));
            CHECK(to_vec(*f, f->add(a, b)) == oracle::field_add(to_vec(*f, a), to_vec(*f, b), p));
            CHECK(f->add(f->sub(a, b), b) == a);
            if (!f->is_zero(a)) CHECK(f->is_one(f->mul(a, f->inv(a))));
            CHECK(to_vec(*f, f->frobenius(a, 1)) == oracle::field_pow(to_vec(*f, a), p, mod, p));
        }
    }
}

TEST_CASE("index round trip and formatting") {
    auto f = gf9();
    for (u128 i = 0; i < 9; ++i) CHECK(f->index(f->from_index(i)) == i);
    CHECK(f->format(el(*f, {1, 2})) == "2alpha + 1");
    CHECK(f->format(f->zero()) == "0");
    auto g = gf256();
    CHECK(g->format(g->gen_pow(3)) == "a^3");
}

TEST_CASE("norms: the GF(9)/GF(3) example and the truncated-norm laws") {
    auto f = gf9();
    FieldAut frob(f, 1);
    const Elem alpha = f->generator();
    // alpha * alpha^3 computed directly.
    CHECK(f->mul(alpha, f->pow(alpha, 3)) == f->scalar(2));
    CHECK(norm(frob, alpha) == f->scalar(2));
    CHECK(f->is_one(truncated_norm(frob, 0, alpha)));
    CHECK(f->is_one(norm(frob, f->one())));

    auto L = ExtField::canonical(2, 12);
    FieldAut th(L, 1);
    Rng rng(3);
    for (int trial = 0; trial < 200; ++trial) {
        Elem a = L->random_nonzero(rng), b = L->random_nonzero(rng);
        CHECK(norm(th, L->mul(a, b)) == L->mul(norm(th, a), norm(th, b)));
        const std::size_t i = rng.below(13), j = rng.below(13);
        CHECK(truncated_norm(th, i + j, a) == L->mul(truncated_norm(th, i, a), th.pow(truncated_norm(th, j, a), i)));
    }
}

TEST_CASE("automorphism order is exact") {
    auto L = ExtField::canonical(2, 12);
    Rng rng(11);
    for (std::size_t t : {1u, 2u, 3u, 4u, 8u, 9u}) {
        FieldAut aut(L, t);
        CHECK(aut.order() == 12 / std::gcd<std::size_t>(12, t));
        std::vector<Elem> sample;
        for (int i = 0; i < 200; ++i) sample.push_back(L->random(rng));
        for (std::size_t k = 1; k <= aut.order(); ++k) {
            bool all_fixed = true;
            for (const auto& a : sample) all_fixed = all_fixed && aut.pow(a, static_cast<long long>(k)) == a;
            CHECK(all_fixed == (k == aut.order()));
        }
    }
    CHECK(FieldAut(L, 0).order() == 1);
}

TEST_CASE("canonical embedding matches an exhaustive scan for the first root") {
    auto sub = ExtField::canonical(2, 6);
    auto sup = ExtField::canonical(2, 12);
    auto emb = Embedding::canonical(sub, sup);
    const auto mod = modulus_vec(*sub);
    const auto supmod = modulus_vec(*sup);
    std::optional<u128> first;
    for (u128 i = 0; i < sup->order() && !first; ++i) {
        oracle::Vec x = to_vec(*sup, sup->from_index(i)), acc(sup->degree(), 0);
        for (std::size_t k = mod.size(); k-- > 0;) {
            acc = oracle::field_mul(acc, x, supmod, 2);
            acc[0] = oracle::md(acc[0] + mod[k], 2);
        }
        bool zero = true;
        for (auto c : acc) zero = zero && c == 0;
        if (zero) first = i;
    }
    REQUIRE(first);
    CHECK(sup->index(emb.generator_image()) == *first);
    // Ring homomorphism and preimage.
    Rng rng(5);
    for (int trial = 0; trial < 100; ++trial) {
        Elem a = sub->random(rng), b = sub->random(rng);
        CHECK(emb(sub->mul(a, b)) == sup->mul(emb(a), emb(b)));
        CHECK(emb.preimage(emb(a)) == a);
    }
    CHECK_FALSE(emb.contains(sup->generator()));

    auto f2 = ExtField::create(2, {0, 1});
    auto e2 = Embedding::canonical(f2, gf256());
    CHECK(gf256()->is_one(e2(f2->one())));
    auto f9 = gf9();
    auto id = Embedding::canonical(f9, f9);
    CHECK(id(f9->generator()) == f9->generator());
    CHECK_THROWS_AS(Embedding::canonical(ExtField::canonical(2, 5), sup), FieldError);
    CHECK_THROWS_AS(Embedding::canonical(gf9(), sup), FieldError);
}

TEST_CASE("tower construction") {
    SUBCASE("GF(2^6), Frobenius, s = 2") {
        auto t = FieldTower::build(ExtField::canonical(2, 6), 1, 2);
        CHECK(t->L().degree() == 12);
        CHECK(t->theta().frobenius_exponent() == 1);
        CHECK(t->n() == 12);
        CHECK(t->mu() == 6);
        CHECK(t->K().degree() == 1);
    }
    SUBCASE("GF(2^8), Frobenius^2, s = 5") {
        auto t = FieldTower::build(gf256(), 2, 5);
        CHECK(t->L().degree() == 40);
        CHECK(t->theta().frobenius_exponent() == 2);
        CHECK(t->n() == 20);
        CHECK(t->K().degree() == 2);
        CHECK(fixed_subspace_basis(t->theta()).size() == 2);
        CHECK(t->theta().order() == 20);
    }
    SUBCASE("s = 1 keeps L = F") {
        auto F = gf256();
        auto t = FieldTower::build(F, 2, 1);
        CHECK(t->L().same_as(*F));
        CHECK(t->theta().frobenius_exponent() == 2);
        CHECK(t->n() == 4);
    }
    SUBCASE("theta exponent search") {
        CHECK(theta_exponent_for(8, 2, 5) == 2);
        CHECK(theta_exponent_for(2, 1, 22) == 1);
        CHECK(theta_exponent_for(8, 2, 3) == 2);
        CHECK(theta_exponent_for(4, 0, 3) == 4);
        // Every admissible choice: theta restricts to sigma and has order e s / gcd(e, j).
        for (std::size_t e = 1; e <= 6; ++e)
            for (std::size_t j = 0; j < e; ++j)
                for (std::size_t s = 1; s <= 5; ++s) {
                    const std::size_t t = theta_exponent_for(e, j, s);
                    CHECK(t % e == j);
                    CHECK(e * s / std::gcd(e * s, t) == s * (e / std::gcd(e, j)));
                }
    }
    SUBCASE("norm of an F element over K is the F-norm to the s") {
        auto t = FieldTower::build(gf256(), 2, 3);
        Rng rng(9);
        for (int trial = 0; trial < 200; ++trial) {
            Elem a = t->F().random(rng);
            CHECK(t->norm_L_K(t->F_in_L()(a)) == t->F_in_L()(t->F().pow(t->norm_F_K(a), t->s())));
        }
    }
    SUBCASE("K coordinates round trip") {
        auto t = FieldTower::build(gf256(), 2, 3);
        Rng rng(13);
        for (int trial = 0; trial < 50; ++trial) {
            Elem a = t->L().random(rng);
            auto c = t->k_coords(a);
            CHECK(c.size() == t->n());
            CHECK(t->from_k_coords(c) == a);
        }
    }
}

TEST_CASE("towers given from the top field") {
    // L = GF(2^12) with gamma^12 + gamma^7 + gamma^6 + gamma^5 + gamma^3 + gamma + 1 = 0.
    auto L = ExtField::create(2, {1, 1, 0, 1, 0, 1, 1, 1, 0, 0, 0, 0, 1}, "gamma");
    const Elem eta = el(*L, {0, 1, 1, 0, 1, 1, 0, 0, 0, 1});
    auto t = FieldTower::from_top(L, 1, 6, eta);
    CHECK(t->n() == 12);
    CHECK(t->s() == 2);
    CHECK(t->F().degree() == 6);
    CHECK(t->F_in_L()(t->F().generator()) == eta);
    CHECK(is_cyclic_vector(*t, L->one(), L->gen_pow(5)));
    CHECK_FALSE(is_cyclic_vector(*t, L->one(), L->zero()));
    CHECK_FALSE(is_cyclic_vector(*t, L->one(), L->one()));

    auto L5 = ExtField::create(5, {2, 1, 4, 2, 3, 3, 0, 0, 0, 0, 1}, "gamma");
    const Elem alpha = el(*L5, {3, 1, 0, 2, 0, 3, 1, 1, 0, 1});
    CHECK(L5->gen_pow(7861528) == alpha);
    auto t5 = FieldTower::from_top(L5, 1, 5, L5->gen_pow(15630));
    CHECK(t5->n() == 10);
    CHECK(t5->F().order() == 3125);
    CHECK(is_cyclic_vector(*t5, L5->one(), alpha));
}

TEST_CASE("norm preimages, Hilbert 90 and cyclic vectors") {
    auto F = gf256();
    auto t = FieldTower::build(F, 2, 5);
    const Elem a = F->generator();
    const Elem lambda_F = el(*F, {0, 1, 1, 0, 1, 0, 1, 1});  // a^7 + a^6 + a^4 + a^2 + a
    CHECK(F->mul(lambda_F, lambda_F) == F->add(lambda_F, F->one()));
    CHECK(t->norm_F_K(a) == lambda_F);
    const Elem lambda = t->F_in_L()(lambda_F);
    CHECK(t->L().is_one(norm_preimage(*t, t->L().one())));
    const Elem u = norm_preimage(*t, lambda, 1);
    CHECK(t->norm_L_K(u) == lambda);
    CHECK(norm_preimage(*t, lambda, 1) == u);
    CHECK_THROWS_AS(norm_preimage(*t, t->L().zero()), FieldError);
    CHECK_THROWS_AS(norm_preimage(*t, t->L().generator()), FieldError);

    SUBCASE("Hilbert 90 round trips") {
        auto L = ExtField::canonical(2, 12);
        FieldAut th(L, 1);
        CHECK(L->is_one(hilbert90_solve(th, L->one())));
        Rng rng(21);
        for (int trial = 0; trial < 30; ++trial) {
            Elem x = L->random_nonzero(rng);
            Elem beta = L->mul(L->inv(x), th(x));
            Elem y = hilbert90_solve(th, beta, trial);
            CHECK(L->mul(L->inv(y), th(y)) == beta);
        }
        // Over GF(2) every nonzero norm is 1; use theta^2, fixing GF(4).
        FieldAut th2(L, 2);
        Elem bad = L->generator();
        while (L->is_one(norm(th2, bad))) bad = L->mul(bad, L->generator());
        CHECK_THROWS_AS(hilbert90_solve(th2, bad), FieldError);
        CHECK_THROWS_AS(hilbert90_solve(th, L->zero()), FieldError);
    }
    SUBCASE("cyclic vectors") {
        const Elem c1 = cyclic_vector(*t, u, 4);
        CHECK(is_cyclic_vector(*t, u, c1));
        CHECK(cyclic_vector(*t, u, 4) == c1);
    }
}
