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

#ifndef SKEWLCP_CODES_HPP
#define SKEWLCP_CODES_HPP

#include <memory>
#include <optional>
#include <span>
#include <string>

#include "galois.hpp"
#include "linalg.hpp"
#include "skewpoly.hpp"

namespace skewlcp {

/// Which field of the tower carries the code coefficients: F (the ring R
/// and its quotient) or L (the ring S).
enum class Level { Base, Top };

class CodeRing;
using CodeRingPtr = std::shared_ptr<const CodeRing>;

/// R / R(x^n - lambda) with n = |theta|, over F or over L.
class CodeRing {
   public:
    /// lambda is an element of the coefficient field of `level` lying in K.
    static CodeRingPtr create(TowerPtr tower, const Elem& lambda, Level level = Level::Base);

    const FieldTower& tower() const noexcept { return *tower_; }
    const TowerPtr& tower_ptr() const noexcept { return tower_; }
    Level level() const noexcept { return level_; }
    std::size_t n() const noexcept { return tower_->n(); }
    const ExtField& field() const noexcept { return ring_->field(); }
    const FieldPtr& field_ptr() const noexcept { return ring_->field_ptr(); }
    const RingPtr& ring() const noexcept { return ring_; }
    /// lambda in the coefficient field.
    const Elem& lambda() const noexcept { return lambda_; }
    /// lambda as an element of L.
    const Elem& lambda_top() const noexcept { return lambda_top_; }
    /// x^n - lambda.
    const SkewPoly& modulus() const noexcept { return modulus_; }

    /// Same tower and level, different constant (which must lie in K).
    CodeRingPtr with_lambda(const Elem& lambda) const;
    /// The ring of the other level with the same lambda.
    CodeRingPtr at_level(Level level) const;

    /// Representative of degree < n.
    SkewPoly reduce(const SkewPoly& f) const;
    SkewPoly poly(std::vector<Elem> coeffs) const { return SkewPoly(ring_, std::move(coeffs)); }
    /// Coefficient vector of length n of the reduced representative.
    std::vector<Elem> vec(const SkewPoly& f) const;

    /// F coefficients to L coefficients (identity at the top level).
    SkewPoly lift(const SkewPoly& f) const;
    /// L coefficients back to F; nullopt when some coefficient is outside F.
    std::optional<SkewPoly> descend(const SkewPoly& f) const;

    bool same_as(const CodeRing& o) const noexcept;

   private:
    CodeRing() = default;

    TowerPtr tower_;
    Level level_ = Level::Base;
    RingPtr ring_, base_ring_, top_ring_;
    Elem lambda_, lambda_top_;
    SkewPoly modulus_;
};

/// Tag carried with a declared minimum distance bound.
enum class BoundProvenance { BchDesigned, ExternallyAsserted, Computed };

const char* to_string(BoundProvenance p);

struct DistanceBound {
    std::size_t value = 0;
    BoundProvenance provenance = BoundProvenance::Computed;
};

/// Left ideal R g of the quotient ring, g a monic right divisor of x^n - lambda.
class Code {
   public:
    /// g = gcrd(f, x^n - lambda).
    static Code from_generator(CodeRingPtr ring, const SkewPoly& f);
    /// g must already be a monic right divisor.
    static Code from_divisor(CodeRingPtr ring, const SkewPoly& g);

    const CodeRing& ring() const noexcept { return *ring_; }
    const CodeRingPtr& ring_ptr() const noexcept { return ring_; }
    const SkewPoly& generator() const noexcept { return g_; }
    std::size_t length() const noexcept { return ring_->n(); }
    std::size_t dimension() const noexcept { return ring_->n() - static_cast<std::size_t>(g_.degree()); }
    std::size_t redundancy() const noexcept { return static_cast<std::size_t>(g_.degree()); }
    bool is_zero_code() const noexcept { return dimension() == 0; }

    /// k x n, row i holds x^i g.
    Matrix generator_matrix() const;
    /// (n-k) x n, column i holds x^i mod_r g.
    Matrix parity_check_matrix() const;

    bool contains(const SkewPoly& c) const;
    bool contains(std::span<const Elem> word) const;
    /// True when every generator coefficient lies in F.
    bool is_over_subfield() const;

    const std::optional<DistanceBound>& bound() const noexcept { return bound_; }
    Code with_bound(DistanceBound b) const;

    /// Same ring and same generator.
    friend bool operator==(const Code& a, const Code& b) {
        return a.ring_->same_as(*b.ring_) && a.g_ == b.g_;
    }

   private:
    Code(CodeRingPtr ring, SkewPoly g) : ring_(std::move(ring)), g_(std::move(g)) {}

    CodeRingPtr ring_;
    SkewPoly g_;
    std::optional<DistanceBound> bound_;
};

/// Number of nonzero coefficients.
std::size_t weight(std::span<const Elem> word, const ExtField& field);
std::size_t weight(const CodeRing& ring, const SkewPoly& f);

/// K-subspace of L with rows holding K-coordinates (basis 1, l, l^2, ...).
struct ESpace {
    Matrix basis;
    Elem u;
    std::size_t dimension() const { return basis.rows(); }
};

/// Raised when u does not satisfy N_{L/K}(u) = lambda.
class NotNormPreimage : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// Kernel of g(T_u), T_u(a) = theta(a) u, as a K-subspace of L.
ESpace e_space(const CodeRing& ring, const SkewPoly& g, const Elem& u);
/// lclm{x - a^{-1} u theta(a)} over a basis of v, with coefficients in L.
SkewPoly divisor_from_subspace(const CodeRing& ring, const Matrix& v, const Elem& u);
/// A norm preimage of lambda in L; 1 when lambda = 1.
std::optional<Elem> w_polynomial_context(const CodeRing& ring, std::uint64_t seed = 0);

}  // namespace skewlcp

#endif
