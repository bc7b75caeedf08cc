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

#include "skewlcp/duality.hpp"
#include "support/contexts.hpp"

using namespace skewlcp;

namespace {

std::vector<CodeRingPtr> rings() { return {ctx::gf4_ring(2), ctx::gf4_ring(3), ctx::gf16_ring(), ctx::gf9_ring()}; }

// A random left root of x^n - lambda in L, found by rejection.
Elem random_left_root(const CodeRing& ring, const SkewPoly& mod, Rng& rng) {
    const ExtField& L = ring.tower().L();
    for (;;) {
        const Elem g = L.random_nonzero(rng);
        if (L.is_zero(left_eval(mod, g))) return g;
    }
}

}  // namespace

TEST_CASE("theta on simple elements") {
    for (auto ring : rings()) {
        ThetaMap th(ring);
        const ExtField& F = ring->field();
        CHECK(th.target()->lambda() == F.inv(ring->lambda()));
        CHECK(th(SkewPoly::one(ring->ring())).is_one());
        Rng rng(1);
        const Elem a = F.random_nonzero(rng);
        std::vector<Elem> want(ring->n());
        want[ring->n() - 1] = F.mul(ring->ring()->sigma(a, -1), ring->lambda());
        CHECK(th(ring->poly({F.zero(), a})) == ring->poly(want));
        // x x^{-1} = 1 in the target ring
        auto tgt = th.target();
        CHECK(tgt->reduce(SkewPoly::x_pow(tgt->ring(), 1) * th(SkewPoly::x_pow(ring->ring(), 1))).is_one());
    }
}

TEST_CASE("theta is an anti-isomorphism with the expected inverse") {
    Rng rng(21);
    for (auto ring : rings()) {
        ThetaMap th(ring);
        auto tgt = th.target();
        for (int trial = 0; trial < 200; ++trial) {
            SkewPoly f = ctx::random_poly(*ring, rng.below(ring->n()), rng);
            SkewPoly g = ctx::random_poly(*ring, rng.below(ring->n()), rng);
            CHECK(th(ring->reduce(f * g)) == tgt->reduce(th(g) * th(f)));
            CHECK(th.inverse(th(f)) == ring->reduce(f));
            CHECK(th(f + g) == th(f) + th(g));
        }
    }
}

TEST_CASE("monic reciprocal matches normalized x^k theta(h)") {
    Rng rng(3);
    for (auto ring : rings()) {
        ThetaMap th(ring);
        auto tgt = th.target();
        const ExtField& F = ring->field();
        for (int trial = 0; trial < 100; ++trial) {
            const std::size_t k = rng.below(ring->n());
            SkewPoly h = ctx::random_poly(*ring, k, rng);
            if (F.is_zero(h.coeff(0))) {
                CHECK_THROWS(monic_reciprocal(h));
                continue;
            }
            SkewPoly ht = monic_reciprocal(h);
            CHECK(ht.is_monic());
            CHECK(ht.degree() == static_cast<long>(k));
            SkewPoly route = tgt->reduce(SkewPoly::x_pow(tgt->ring(), static_cast<long>(k)) * th(h)).left_monic();
            CHECK(SkewPoly(tgt->ring(), ht.coeffs()) == route);
        }
        // h = x - c gives x - sigma(c)^{-1}
        const Elem c = F.random_nonzero(rng);
        SkewPoly lin = monic_reciprocal(SkewPoly::linear(ring->ring(), c));
        CHECK(lin == SkewPoly::linear(ring->ring(), F.inv(ring->ring()->sigma(c))));
        CHECK_THROWS(monic_reciprocal(SkewPoly::x_pow(ring->ring(), 2)));
    }
}

TEST_CASE("dual codes over every divisor of small rings") {
    for (auto ring : rings()) {
        for (const auto& g : ctx::all_divisors(*ring)) {
            Code c = Code::from_divisor(ring, g);
            Code d = dual(c);
            CHECK(d.ring().lambda() == ring->field().inv(ring->lambda()));
            CHECK(c.dimension() + d.dimension() == ring->n());
            // hg = x^n - lambda and gh = x^n - lambda together
            SkewPoly h = check_partner(c);
            CHECK(h * g == ring->modulus());
            CHECK(g * h == ring->modulus());
            CHECK(dual(d) == c);
            if (c.is_zero_code()) {
                CHECK(d.dimension() == ring->n());
                continue;
            }
            if (d.is_zero_code()) {
                CHECK(c.dimension() == ring->n());
                continue;
            }
            Matrix gc = c.generator_matrix(), gd = d.generator_matrix();
            CHECK((gd * gc.transpose()).is_zero());
            CHECK(same_row_space(c.parity_check_matrix(), gd));
        }
    }
}

TEST_CASE("gamma and the dual linear factorization") {
    Rng rng(12);
    for (auto ring : {ctx::gf16_ring(), ctx::gf9_ring(), ctx::gf4_ring(3)}) {
        const FieldTower& t = ring->tower();
        const ExtField& L = t.L();
        const Elem u = *w_polynomial_context(*ring, 2);
        for (int trial = 0; trial < 10; ++trial) {
            const Elem alpha = cyclic_vector(t, u, rng.next());
            const Elem gamma = gamma_of(t, ring->lambda_top(), u, alpha);
            CHECK(t.norm_L_K(gamma) == ring->lambda_top());
            const Elem gp = L.inv(t.theta()(gamma));
            CHECK(t.norm_L_K(gp) == L.inv(ring->lambda_top()));
        }
        CHECK_THROWS(gamma_of(t, ring->lambda_top(), u, L.zero()));

        auto top = ring->at_level(Level::Top);
        auto top_hat = top->with_lambda(L.inv(top->lambda()));
        for (int trial = 0; trial < 20; ++trial) {
            std::vector<Elem> gammas;
            const std::size_t m = 1 + rng.below(t.n() - 1);
            for (std::size_t i = 0; i < m; ++i) gammas.push_back(random_left_root(*top, top->modulus(), rng));
            SkewPoly h = lcrm_linear(top->ring(), gammas);
            SkewPoly hh = dual_linear_factorization(*ring, gammas);
            // h is a left divisor of x^n - lambda, so x^n - lambda = h k for some k
            DivResult dv = left_div(top->modulus(), h);
            REQUIRE(dv.r.is_zero());
            // the dual ideal through Theta(h) and through hat h coincide
            ThetaMap th(top);
            Code via_theta = Code::from_generator(top_hat, th(h));
            Code via_roots = Code::from_generator(top_hat, SkewPoly(top_hat->ring(), hh.coeffs()));
            CHECK(via_theta == via_roots);
            if (m == 1) CHECK(hh == SkewPoly::linear(top->ring(), t.theta()(L.inv(gammas[0]))));
        }
        CHECK_THROWS(dual_linear_factorization(*ring, std::vector<Elem>{L.zero()}));
    }
}
