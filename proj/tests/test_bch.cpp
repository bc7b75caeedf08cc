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

#include "skewlcp/bch.hpp"
#include "skewlcp/duality.hpp"
#include "skewlcp/lcp.hpp"
#include "support/contexts.hpp"

using namespace skewlcp;

namespace {

// Small towers with mu >= 3 so that several designed distances are possible.
std::vector<TowerPtr> towers() {
    return {
        FieldTower::build(ExtField::create(2, {1, 1, 0, 1}, "c"), 1, 2),     // GF(8), mu 3, n 6
        FieldTower::build(ExtField::create(2, {1, 1, 0, 0, 1}, "a"), 1, 2),  // GF(16), mu 4, n 8
        FieldTower::build(ExtField::create(3, {1, 2, 0, 1}, "e"), 1, 2),     // GF(27), mu 3, n 6
        FieldTower::build(ExtField::create(2, {1, 1, 0, 0, 1}, "a"), 2, 3),  // GF(16) over GF(4), n 6
    };
}

BchSpec random_spec(const TowerPtr& t, Rng& rng) {
    const ExtField& F = t->F();
    // lambda ranges over K inside F
    Elem lam;
    do {
        lam = t->K_in_F()(t->K().random_nonzero(rng));
    } while (F.is_zero(lam));
    auto ring = CodeRing::create(t, lam);
    BchSpec spec;
    spec.ring = ring;
    spec.u = norm_preimage(*t, ring->lambda_top(), rng.next());
    spec.alpha = cyclic_vector(*t, spec.u, rng.next());
    spec.r = rng.below(t->n());
    spec.delta = 2 + rng.below(t->mu() - 1);
    return spec;
}

}  // namespace

TEST_CASE("conjugation") {
    Rng rng(6);
    for (const auto& t : towers()) {
        const ExtField& L = t->L();
        const Elem u = L.random_nonzero(rng);
        CHECK(conjugate(*t, u, L.one()) == u);
        CHECK_THROWS(conjugate(*t, u, L.zero()));
        for (int k = 0; k < 20; ++k) {
            const Elem b = L.random_nonzero(rng);
            CHECK(t->norm_L_K(conjugate(*t, u, b)) == t->norm_L_K(u));
        }
        // theta^i(u^{theta^j(alpha) N_j(u)}) = theta^{i+j}(u^alpha)
        const Elem alpha = L.random_nonzero(rng);
        for (int k = 0; k < 10; ++k) {
            const auto i = static_cast<long long>(rng.below(t->n())), j = static_cast<long long>(rng.below(t->n()));
            const Elem b = L.mul(t->theta().pow(alpha, j), truncated_norm(t->theta(), static_cast<std::size_t>(j), u));
            CHECK(t->theta().pow(conjugate(*t, u, b), i) == t->theta().pow(conjugate(*t, u, alpha), i + j));
        }
    }
}

TEST_CASE("spec validation") {
    auto t = towers()[0];
    auto ring = CodeRing::create(t, t->F().one());
    BchSpec spec{ring, t->L().one(), cyclic_vector(*t, t->L().one(), 1), 0, 2};
    CHECK_NOTHROW(spec.validate());
    auto bad = spec;
    bad.delta = 1;
    CHECK_THROWS(bad.validate());
    bad.delta = t->mu() + 1;
    CHECK_THROWS(bad.validate());
    bad = spec;
    bad.r = t->n();
    CHECK_THROWS(bad.validate());
    bad = spec;
    bad.alpha = t->L().zero();
    CHECK_THROWS(bad.validate());
    bad = spec;
    bad.u = t->L().generator();  // norm is not 1
    CHECK_THROWS(bad.validate());
}

TEST_CASE("designed distance holds on random specs") {
    Rng rng(2024);
    auto ts = towers();
    for (int trial = 0; trial < 20; ++trial) {
        const auto& t = ts[trial % ts.size()];
        BchSpec spec = random_spec(t, rng);
        const std::size_t s = t->s(), mu = t->mu(), n = t->n();
        Code c = bch_generator(spec);
        CAPTURE(trial);
        CHECK(c.is_over_subfield());
        CHECK(c.redundancy() == s * (spec.delta - 1));
        CHECK(c.dimension() == n - s * spec.delta + s);
        REQUIRE(c.bound());
        CHECK(c.bound()->value == spec.delta);
        CHECK(c.bound()->provenance == BoundProvenance::BchDesigned);

        auto dc = min_distance(c);
        REQUIRE(dc.distance);
        CHECK(*dc.distance >= spec.delta);

        Code d = dual(c);
        Code bd = bch_dual(spec);
        CHECK(bd == d);
        CHECK(bd.dimension() == s * spec.delta - s);
        CHECK(bd.bound()->value == mu - spec.delta + 2);
        auto dd = min_distance(d);
        REQUIRE(dd.distance);
        CHECK(*dd.distance >= mu - spec.delta + 2);

        auto [cc, dpart] = bch_lcp(spec);
        CHECK(cc == c);
        CHECK(gcrd(cc.generator(), dpart.generator()).is_one());
        CHECK(lclm(cc.generator(), dpart.generator()) == spec.ring->modulus());
        CHECK(cc.redundancy() + dpart.redundancy() == n);
        LcpReport rep = is_lcp(cc, dpart, LcpMode::Audit, spec.u);
        CHECK(rep.verdict);
        CHECK(rep.criteria.size() == 9);
        auto sp = security_parameter(cc, dpart);
        REQUIRE(sp.value);
        CHECK(*sp.value >= spec.delta);
    }
}

TEST_CASE("small designed distances and full windows") {
    Rng rng(31);
    for (const auto& t : towers()) {
        BchSpec spec = random_spec(t, rng);
        spec.r = 0;
        spec.delta = 2;
        CHECK(bch_generator(spec).redundancy() == t->s());
        spec.delta = t->mu();
        auto [c, d] = bch_lcp(spec);
        CHECK(d.redundancy() == t->s());
        // the window i = 0..n-1 gives the whole modulus
        std::vector<std::size_t> all;
        for (std::size_t i = 0; i < t->mu(); ++i) all.push_back(i);
        CHECK(bch_code(spec.ring, spec.u, spec.alpha, all).is_zero_code());
    }
}

TEST_CASE("T and T^c split x^n - lambda") {
    Rng rng(77);
    for (const auto& t : towers()) {
        for (int trial = 0; trial < 10; ++trial) {
            BchSpec spec = random_spec(t, rng);
            auto top = spec.ring->at_level(Level::Top);
            std::vector<bool> in_t(t->n());
            for (std::size_t i = 0; i < t->n(); ++i) in_t[i] = rng.below(2);
            if (trial == 0) in_t.assign(t->n(), false);
            SkewPoly p = split_product(*t, spec.ring->lambda_top(), spec.u, spec.alpha, in_t);
            CHECK(SkewPoly(top->ring(), p.coeffs()) == top->modulus());
        }
    }
}
