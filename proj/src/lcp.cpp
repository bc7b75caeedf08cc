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

#include "skewlcp/lcp.hpp"

#include "skewlcp/duality.hpp"

namespace skewlcp {

namespace {

Matrix span_of(const Code& c) {
    if (c.is_zero_code()) return Matrix(c.ring().field_ptr(), 0, c.length());
    return c.generator_matrix();
}

}  // namespace

bool is_lcp_fast(const Code& c, const Code& d) {
    if (!c.ring().same_as(d.ring())) throw RingMismatch("codes live in different rings");
    if (c.redundancy() + d.redundancy() != c.length()) return false;
    return gcrd(c.generator(), d.generator()).is_one();
}

LcpReport is_lcp(const Code& c, const Code& d, LcpMode mode, const std::optional<Elem>& u) {
    if (!c.ring().same_as(d.ring())) throw RingMismatch("codes live in different rings");
    const CodeRing& ring = c.ring();
    const std::size_t n = ring.n();
    const SkewPoly& g = c.generator();
    const SkewPoly& h = d.generator();

    LcpReport rep;
    rep.gcrd = gcrd(g, h);
    rep.lclm = lclm(g, h);
    rep.degree_sum = c.redundancy() + d.redundancy();
    const bool deg_ok = rep.degree_sum == n;
    const bool gcd_one = rep.gcrd.is_one();
    const bool lcm_full = rep.lclm == ring.modulus();

    auto add = [&](int id, std::string text, bool holds) { rep.criteria.push_back({id, std::move(text), holds}); };

    if (mode == LcpMode::Audit) {
        Matrix a = span_of(c), b = span_of(d);
        const bool sum_full = subspace_sum(a, b).rows() == n;
        const bool meet_zero = subspace_intersection(a, b).rows() == 0;
        const bool dim_ok = c.dimension() + d.dimension() == n;
        add(1, "C (+) D = R", sum_full && meet_zero);
        add(2, "C + D = R and dim C + dim D = n", sum_full && dim_ok);
        add(3, "C cap D = 0 and dim C + dim D = n", meet_zero && dim_ok);
    }
    add(4, "gcrd(g,h) = 1 and lclm(g,h) = x^n - lambda", gcd_one && lcm_full);
    add(5, "gcrd(g,h) = 1 and deg g + deg h = n", gcd_one && deg_ok);
    add(6, "lclm(g,h) = x^n - lambda and deg g + deg h = n", lcm_full && deg_ok);
    if (mode == LcpMode::Audit && u) {
        ESpace eg = e_space(ring, g, *u), eh = e_space(ring, h, *u);
        const bool sum_full = subspace_sum(eg.basis, eh.basis).rows() == n;
        const bool meet_zero = subspace_intersection(eg.basis, eh.basis).rows() == 0;
        add(7, "E(g,u) (+) E(h,u) = L", sum_full && meet_zero);
        add(8, "E(g,u) cap E(h,u) = 0 and deg g + deg h = n", meet_zero && deg_ok);
        add(9, "E(g,u) + E(h,u) = L and deg g + deg h = n", sum_full && deg_ok);
        rep.e_space_checked = true;
    }
    rep.verdict = rep.criteria.front().holds;
    for (const auto& cr : rep.criteria)
        if (cr.holds != rep.verdict)
            throw CriteriaDisagree("criterion " + std::to_string(cr.id) + " disagrees with criterion " +
                                   std::to_string(rep.criteria.front().id));
    return rep;
}

SecurityParameter security_parameter(const Code& c, const Code& d, const DistanceOptions& opt) {
    return security_parameter(c, d, opt, opt);
}

SecurityParameter security_parameter(const Code& c, const Code& d, const DistanceOptions& opt_c,
                                     const DistanceOptions& opt_dual) {
    SecurityParameter sp;
    sp.primal = min_distance(c, opt_c);
    sp.dual = min_distance(dual(d), opt_dual);
    if (sp.primal.distance && sp.dual.distance) sp.value = std::min(*sp.primal.distance, *sp.dual.distance);
    return sp;
}

}  // namespace skewlcp
