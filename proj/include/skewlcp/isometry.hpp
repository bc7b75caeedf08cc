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

#ifndef SKEWLCP_ISOMETRY_HPP
#define SKEWLCP_ISOMETRY_HPP

#include <cstdint>
#include <vector>

#include "codes.hpp"

namespace skewlcp {

/// phi_beta o phi_x^i with beta in F*.
struct IsometryElement {
    Elem beta;
    std::size_t i = 0;

    friend bool operator==(const IsometryElement&, const IsometryElement&) = default;
};

/// phi_x^i(sum a_j x^j) = sum sigma^i(a_j) x^j; i may be any integer.
SkewPoly apply_phi_x(const CodeRing& ring, const SkewPoly& f, long long i);
/// phi_beta(sum a_j x^j) = sum N_j(beta^{-1}) a_j x^j, landing in the ring
/// with lambda' = N_{F/K}(beta)^s lambda.
SkewPoly apply_varphi_beta(const CodeRing& ring, const SkewPoly& f, const Elem& beta);
/// N_{F/K}(beta)^s lambda.
Elem target_lambda(const CodeRing& ring, const Elem& beta);

SkewPoly apply(const CodeRing& ring, const IsometryElement& z, const SkewPoly& f);
/// Image code, in the ring with lambda' (equal to the source ring for group elements).
Code act_on_code(const IsometryElement& z, const Code& c);

/// The isometry group G of a base-level ring.
class IsometryGroup {
   public:
    explicit IsometryGroup(CodeRingPtr ring);

    const CodeRing& ring() const noexcept { return *ring_; }
    const std::vector<IsometryElement>& elements() const noexcept { return elems_; }
    std::size_t order() const noexcept { return elems_.size(); }
    /// mu |F*| / |K*| gcd(s, |K*|).
    u128 formula_order() const;

    IsometryElement identity() const;
    /// a o b as maps.
    IsometryElement compose(const IsometryElement& a, const IsometryElement& b) const;
    IsometryElement inverse(const IsometryElement& a) const;
    bool contains(const IsometryElement& a) const;
    /// Maps (beta, i) carrying x^n - lambda_from onto this ring's modulus, in
    /// group order; the group itself when lambda_from is the ring's lambda.
    std::vector<IsometryElement> coset(const Elem& lambda_from) const;

   private:
    CodeRingPtr ring_;
    std::vector<IsometryElement> elems_;
};

/// (z(D))^perp and (phi_{beta^{-1}} o phi_x^i)(D^perp) as the same left ideal.
bool dual_commutation_check(const IsometryElement& z, const Code& d);

struct Supplement {
    std::size_t element;  // index into the candidate list
    IsometryElement map;
    Code code;
};

struct SupplementReport {
    std::size_t candidates = 0;          // group elements tried
    std::size_t successes = 0;           // group elements giving an LCP
    std::size_t distinct_candidates = 0; // distinct image codes
    std::size_t distinct_successes = 0;  // distinct image codes giving an LCP
    bool identity_succeeds = false;
    std::vector<Supplement> lcps;        // in group order
};

/// Tries every group image of R seed as a partner of c.
SupplementReport supplement_search(const Code& c, const SkewPoly& seed, const IsometryGroup& group,
                                   unsigned threads = 1);
/// Same, for a seed code over the same tower; when its lambda differs, the
/// candidates are the maps carrying its ring onto c's ring.
SupplementReport supplement_search(const Code& c, const Code& base, const IsometryGroup& group,
                                   unsigned threads = 1);

}  // namespace skewlcp

#endif
