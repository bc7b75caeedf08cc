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

#ifndef SKEWLCP_SKEWPOLY_HPP
#define SKEWLCP_SKEWPOLY_HPP

#include <climits>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "galois.hpp"

namespace skewlcp {

/// F[x; sigma]: coefficient field plus the twisting automorphism.
class SkewRing {
   public:
    explicit SkewRing(FieldAut aut);

    const ExtField& field() const noexcept { return aut_.field(); }
    const FieldPtr& field_ptr() const noexcept { return aut_.field_ptr(); }
    const FieldAut& aut() const noexcept { return aut_; }
    /// sigma^k(a), k may be negative.
    Elem sigma(const Elem& a, long long k = 1) const { return aut_.pow(a, k); }

    bool same_as(const SkewRing& other) const noexcept { return this == &other || aut_.same_as(other.aut_); }

   private:
    FieldAut aut_;
};

using RingPtr = std::shared_ptr<const SkewRing>;

inline RingPtr make_ring(const FieldAut& aut) { return std::make_shared<const SkewRing>(aut); }

/// Raised when two polynomials from different rings meet.
class RingMismatch : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// Polynomial with coefficients on the left, sum c_i x^i.
class SkewPoly {
   public:
    static constexpr long kZeroDegree = LONG_MIN;

    SkewPoly() = default;
    SkewPoly(RingPtr ring, std::vector<Elem> coeffs);

    static SkewPoly zero(RingPtr ring) { return SkewPoly(std::move(ring), {}); }
    static SkewPoly one(const RingPtr& ring);
    static SkewPoly x_pow(const RingPtr& ring, std::size_t k);
    static SkewPoly constant(const RingPtr& ring, const Elem& a);
    /// x - beta.
    static SkewPoly linear(const RingPtr& ring, const Elem& beta);

    const SkewRing& ring() const noexcept { return *ring_; }
    const RingPtr& ring_ptr() const noexcept { return ring_; }
    const ExtField& field() const noexcept { return ring_->field(); }

    long degree() const noexcept { return c_.empty() ? kZeroDegree : static_cast<long>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }
    bool is_one() const;
    bool is_monic() const;
    /// Coefficient of x^i; zero past the degree.
    Elem coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Elem{}; }
    const std::vector<Elem>& coeffs() const noexcept { return c_; }
    const Elem& lead() const { return c_.back(); }

    SkewPoly operator+(const SkewPoly& o) const;
    SkewPoly operator-(const SkewPoly& o) const;
    SkewPoly operator-() const;
    SkewPoly operator*(const SkewPoly& o) const;
    /// a * f.
    SkewPoly left_scale(const Elem& a) const;
    /// f * a.
    SkewPoly right_scale(const Elem& a) const;
    /// f * x^k.
    SkewPoly shift(std::size_t k) const;

    /// lead^{-1} f: monic, same left ideal.
    SkewPoly left_monic() const;
    /// f c with lead(f c) = 1: monic, same right ideal.
    SkewPoly right_monic() const;

    friend bool operator==(const SkewPoly& a, const SkewPoly& b) {
        return a.ring_->same_as(*b.ring_) && a.c_ == b.c_;
    }

    std::string format(const std::string& var = "x") const;

   private:
    void check_same(const SkewPoly& o) const;

    RingPtr ring_;
    std::vector<Elem> c_;
};

struct DivResult {
    SkewPoly q, r;
};

/// f = q g + r with deg r < deg g.
DivResult right_div(const SkewPoly& f, const SkewPoly& g);
/// f = g q + r with deg r < deg g.
DivResult left_div(const SkewPoly& f, const SkewPoly& g);

inline SkewPoly right_rem(const SkewPoly& f, const SkewPoly& g) { return right_div(f, g).r; }
inline SkewPoly left_rem(const SkewPoly& f, const SkewPoly& g) { return left_div(f, g).r; }

/// Monic generator of R f + R g. Throws when both are zero.
SkewPoly gcrd(const SkewPoly& f, const SkewPoly& g);
/// Monic generator of f R + g R.
SkewPoly gcld(const SkewPoly& f, const SkewPoly& g);
/// Monic generator of R f ∩ R g. Throws on a zero input.
SkewPoly lclm(const SkewPoly& f, const SkewPoly& g);
/// Monic generator of f R ∩ g R.
SkewPoly lcrm(const SkewPoly& f, const SkewPoly& g);

// List versions fold the binary ones from the left. An empty list of
// multiples gives 1; an empty gcd list is an error.
SkewPoly gcrd(std::span<const SkewPoly> fs);
SkewPoly gcld(std::span<const SkewPoly> fs);
SkewPoly lclm(const RingPtr& ring, std::span<const SkewPoly> fs);
SkewPoly lcrm(const RingPtr& ring, std::span<const SkewPoly> fs);

/// lclm of x - beta over the list.
SkewPoly lclm_linear(const RingPtr& ring, std::span<const Elem> betas);
SkewPoly lcrm_linear(const RingPtr& ring, std::span<const Elem> betas);

/// sum g_i N_i(gamma): the remainder of g on right division by x - gamma.
Elem right_eval(const SkewPoly& g, const Elem& gamma);
/// sum sigma^{-i}(g_i) N^{sigma^{-1}}_i(gamma): the remainder on left division.
Elem left_eval(const SkewPoly& g, const Elem& gamma);

bool is_p_independent(const RingPtr& ring, std::span<const Elem> betas);

/// Maps every coefficient through fn into another ring.
template <class Fn>
SkewPoly map_coeffs(const SkewPoly& f, const RingPtr& target, Fn&& fn) {
    std::vector<Elem> c;
    c.reserve(f.coeffs().size());
    for (const auto& a : f.coeffs()) c.push_back(fn(a));
    return SkewPoly(target, std::move(c));
}

}  // namespace skewlcp

#endif
