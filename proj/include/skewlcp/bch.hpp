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

#ifndef SKEWLCP_BCH_HPP
#define SKEWLCP_BCH_HPP

#include <utility>
#include <vector>

#include "codes.hpp"

namespace skewlcp {

/// a^b = theta(b) a b^{-1}.
Elem conjugate(const FieldTower& tower, const Elem& a, const Elem& b);

/// Parameters of a skew BCH code: window r..r+delta-2 of theta-powers of u^alpha.
struct BchSpec {
    CodeRingPtr ring;  // base level
    Elem u;            // N_{L/K}(u) = lambda
    Elem alpha;        // cyclic vector for u
    std::size_t r = 0;
    std::size_t delta = 2;

    /// Throws std::invalid_argument on any violated precondition.
    void validate() const;
};

/// lclm{x - theta^{i + j mu}(u^alpha) : i in indices, j < s}, coefficients in L.
SkewPoly bch_lclm(const FieldTower& tower, const Elem& u, const Elem& alpha, const std::vector<std::size_t>& indices);
/// The same lclm brought down to F; throws if some coefficient is outside F.
Code bch_code(const CodeRingPtr& ring, const Elem& u, const Elem& alpha, const std::vector<std::size_t>& indices);

/// Designed-distance code, declared bound delta.
Code bch_generator(const BchSpec& spec);
/// (C, D): D uses the complementary window r+delta-1..r+mu-1.
std::pair<Code, Code> bch_lcp(const BchSpec& spec);
/// The dual of bch_generator(spec) rebuilt from gamma' = theta(gamma)^{-1}.
Code bch_dual(const BchSpec& spec);

/// lcrm{x - theta^i(gamma) : i in T^c} lclm{x - theta^i(u^alpha) : i in T}.
SkewPoly split_product(const FieldTower& tower, const Elem& lambda_top, const Elem& u, const Elem& alpha,
                       const std::vector<bool>& in_t);

}  // namespace skewlcp

#endif
