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

#ifndef SKEWLCP_DUALITY_HPP
#define SKEWLCP_DUALITY_HPP

#include <span>

#include "codes.hpp"

namespace skewlcp {

/// The anti-isomorphism from R/R(x^n - lambda) to R/R(x^n - lambda^{-1}),
/// sum a_i x^i -> sum sigma^{-i}(a_i) x^{-i} with x^{-1} = lambda x^{n-1}.
class ThetaMap {
   public:
    explicit ThetaMap(CodeRingPtr source);

    const CodeRingPtr& source() const noexcept { return src_; }
    const CodeRingPtr& target() const noexcept { return dst_; }

    SkewPoly operator()(const SkewPoly& f) const;
    /// The same construction started from the target ring; inverse of operator().
    SkewPoly inverse(const SkewPoly& f) const;

   private:
    static SkewPoly apply(const CodeRing& from, const CodeRing& to, const SkewPoly& f);

    CodeRingPtr src_, dst_;
};

/// h^Theta = sigma^k(a_0)^{-1} sum_i sigma^i(a_{k-i}) x^i for h of degree k.
SkewPoly monic_reciprocal(const SkewPoly& h);

/// The partner h with x^n - lambda = h g.
SkewPoly check_partner(const Code& c);

/// Dual code, living in the ring with lambda^{-1}.
Code dual(const Code& c);

/// gamma with (x - gamma) lclm{x - theta^i(u^alpha) : 1 <= i < n} = x^n - lambda.
/// Throws when alpha is not a cyclic vector.
Elem gamma_of(const FieldTower& tower, const Elem& lambda_top, const Elem& u, const Elem& alpha);

/// lclm{x - theta(gamma_i^{-1})}: the dual route for h = lcrm{x - gamma_i}.
/// Throws when some gamma_i is not a left root of x^n - lambda.
SkewPoly dual_linear_factorization(const CodeRing& ring, std::span<const Elem> gammas);

}  // namespace skewlcp

#endif
