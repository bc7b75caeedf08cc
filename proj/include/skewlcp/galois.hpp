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

#ifndef SKEWLCP_GALOIS_HPP
#define SKEWLCP_GALOIS_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "rng.hpp"

namespace skewlcp {

using u128 = unsigned __int128;

/// Largest supported extension degree over the prime field.
inline constexpr std::size_t kMaxDegree = 64;
/// Largest supported characteristic (coefficients are stored in bytes).
inline constexpr std::uint32_t kMaxCharacteristic = 251;

/// Raised for malformed field data: composite characteristic, reducible
/// modulus, incompatible embeddings and the like.
class FieldError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// Field element as a little-endian coefficient vector over GF(p).
///
/// Entries beyond the field degree are always zero, so equality is plain
/// value equality. The owning ExtField interprets the coefficients.
class Elem {
   public:
    constexpr Elem() = default;

    std::uint8_t operator[](std::size_t i) const { return c_[i]; }
    std::uint8_t& operator[](std::size_t i) { return c_[i]; }

    friend bool operator==(const Elem&, const Elem&) = default;

    std::size_t hash() const noexcept;

   private:
    std::array<std::uint8_t, kMaxDegree> c_{};
};

struct ElemHash {
    std::size_t operator()(const Elem& e) const noexcept { return e.hash(); }
};

/// GF(p^m) = GF(p)[x]/(modulus). The modulus is monic and irreducible;
/// degree 1 uses the modulus x so that elements are plain residues.
class ExtField {
   public:
    static std::shared_ptr<const ExtField> create(std::uint32_t p, std::vector<std::uint32_t> modulus,
                                                  std::string name = {});
    /// GF(p^m) with the first monic irreducible modulus in index order
    /// (for m = 1 the modulus x).
    static std::shared_ptr<const ExtField> canonical(std::uint32_t p, std::size_t m, std::string name = {});

    std::uint32_t characteristic() const noexcept { return p_; }
    std::size_t degree() const noexcept { return m_; }
    u128 order() const noexcept { return order_; }
    const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }
    const std::string& name() const noexcept { return name_; }

    Elem zero() const { return Elem{}; }
    Elem one() const;
    /// The class of x, i.e. the root of the modulus.
    Elem generator() const;
    Elem scalar(std::uint64_t c) const;
    Elem from_coeffs(std::span<const std::uint32_t> coeffs) const;
    std::vector<std::uint32_t> coeffs(const Elem& a) const;

    /// Packed index sum_i c_i p^i; the order used by every deterministic scan.
    u128 index(const Elem& a) const;
    Elem from_index(u128 idx) const;

    bool is_zero(const Elem& a) const noexcept { return a == Elem{}; }
    bool is_one(const Elem& a) const noexcept;

    Elem add(const Elem& a, const Elem& b) const;
    Elem sub(const Elem& a, const Elem& b) const;
    Elem neg(const Elem& a) const;
    Elem mul(const Elem& a, const Elem& b) const;
    Elem scale(std::uint32_t c, const Elem& a) const;
    Elem inv(const Elem& a) const;
    Elem div(const Elem& a, const Elem& b) const { return mul(a, inv(b)); }
    Elem pow(const Elem& a, u128 e) const;
    Elem gen_pow(u128 e) const { return pow(generator(), e); }

    /// a^(p^e); e is reduced modulo the degree (negative values allowed).
    Elem frobenius(const Elem& a, long long e) const;

    Elem random(Rng& rng) const;
    Elem random_nonzero(Rng& rng) const;

    /// Human-readable polynomial in the generator, e.g. "a^3 + 2a + 1".
    std::string format(const Elem& a) const;

    bool same_as(const ExtField& other) const noexcept {
        return this == &other || (p_ == other.p_ && modulus_ == other.modulus_);
    }

   private:
    ExtField(std::uint32_t p, std::vector<std::uint32_t> modulus, std::string name);
    void build_frobenius();

    std::uint32_t p_;
    std::size_t m_;
    std::vector<std::uint32_t> modulus_;
    std::string name_;
    u128 order_;
    std::vector<std::uint8_t> inv_mod_p_;
    // frob_[e][i * m + j]: coefficient i of x^(j p^e).
    std::vector<std::vector<std::uint8_t>> frob_;
};

using FieldPtr = std::shared_ptr<const ExtField>;

bool is_prime(std::uint64_t p);
/// Rabin's test for a monic polynomial over GF(p).
bool is_irreducible(std::uint32_t p, std::span<const std::uint32_t> poly);

/// The automorphism a -> a^(p^t) of a finite field.
class FieldAut {
   public:
    FieldAut(FieldPtr field, std::size_t t);

    const ExtField& field() const noexcept { return *field_; }
    const FieldPtr& field_ptr() const noexcept { return field_; }
    std::size_t frobenius_exponent() const noexcept { return t_; }
    std::size_t order() const noexcept { return order_; }

    Elem operator()(const Elem& a) const { return field_->frobenius(a, static_cast<long long>(t_)); }
    /// aut^k applied to a; k may be negative.
    Elem pow(const Elem& a, long long k) const;
    FieldAut power(long long k) const;

    bool same_as(const FieldAut& other) const noexcept {
        return field_->same_as(*other.field_) && t_ == other.t_;
    }

   private:
    FieldPtr field_;
    std::size_t t_;
    std::size_t order_;
};

/// N_i(a) = a aut(a) ... aut^(i-1)(a), N_0(a) = 1.
Elem truncated_norm(const FieldAut& aut, std::size_t i, const Elem& a);
/// Norm down to the fixed field of aut: N_{|aut|}(a).
Elem norm(const FieldAut& aut, const Elem& a);

/// Injective homomorphism sub -> sup given by the image of sub's generator.
class Embedding {
   public:
    /// Sends the generator of sub to the root of sub's modulus with the
    /// smallest packed index in sup.
    static Embedding canonical(FieldPtr sub, FieldPtr sup);
    static Embedding via_image(FieldPtr sub, FieldPtr sup, const Elem& generator_image);

    const ExtField& sub() const noexcept { return *sub_; }
    const ExtField& sup() const noexcept { return *sup_; }
    const FieldPtr& sub_ptr() const noexcept { return sub_; }
    const FieldPtr& sup_ptr() const noexcept { return sup_; }
    const Elem& generator_image() const noexcept { return gen_image_; }

    Elem operator()(const Elem& a) const;
    std::optional<Elem> preimage(const Elem& b) const;
    bool contains(const Elem& b) const { return preimage(b).has_value(); }

    /// sub -> sup -> next composed.
    Embedding then(const Embedding& next) const;

   private:
    Embedding(FieldPtr sub, FieldPtr sup, const Elem& generator_image);

    FieldPtr sub_;
    FieldPtr sup_;
    Elem gen_image_;
    // basis_images_[j]: image of x^j.
    std::vector<Elem> basis_images_;
    // Reduced system used by preimage().
    std::vector<std::vector<std::uint32_t>> solver_rows_;
    std::vector<std::size_t> solver_pivots_;
};

/// Minimal polynomial of a over GF(p), monic, little-endian.
std::vector<std::uint32_t> minimal_polynomial(const ExtField& field, const Elem& a);

/// Basis (over GF(p)) of the elements fixed by aut.
std::vector<Elem> fixed_subspace_basis(const FieldAut& aut);

/// Chain K ⊆ F ⊆ L with theta on L extending sigma on F, |theta| = n = s mu
/// and L^theta = F^sigma = K.
class FieldTower {
   public:
    /// Builds L of degree s over F and searches theta as described in the
    /// README (smallest admissible Frobenius exponent).
    static std::shared_ptr<const FieldTower> build(FieldPtr F, std::size_t sigma_exponent, std::size_t s);
    /// Starts from L and theta; F is the fixed field of theta^mu. When
    /// f_generator is given, F is represented as GF(p)[f_generator].
    static std::shared_ptr<const FieldTower> from_top(FieldPtr L, std::size_t theta_exponent, std::size_t mu,
                                                      std::optional<Elem> f_generator = std::nullopt,
                                                      std::string f_name = "b");

    const ExtField& L() const noexcept { return *L_; }
    const ExtField& F() const noexcept { return *F_; }
    const ExtField& K() const noexcept { return *K_; }
    const FieldPtr& L_ptr() const noexcept { return L_; }
    const FieldPtr& F_ptr() const noexcept { return F_; }
    const FieldPtr& K_ptr() const noexcept { return K_; }
    const FieldAut& theta() const noexcept { return *theta_; }
    const FieldAut& sigma() const noexcept { return *sigma_; }
    const Embedding& F_in_L() const noexcept { return *f_in_l_; }
    const Embedding& K_in_F() const noexcept { return *k_in_f_; }
    const Embedding& K_in_L() const noexcept { return *k_in_l_; }
    std::size_t mu() const noexcept { return mu_; }
    std::size_t s() const noexcept { return s_; }
    std::size_t n() const noexcept { return n_; }

    /// N_{L/K}(a), returned as an element of L lying in K.
    Elem norm_L_K(const Elem& a) const { return norm(*theta_, a); }
    /// N_{F/K}(a), returned as an element of F lying in K.
    Elem norm_F_K(const Elem& a) const { return norm(*sigma_, a); }

    /// Coordinates over K of an element of L in the basis 1, l, ..., l^(n-1)
    /// where l is L's generator. Entries are elements of K.
    std::vector<Elem> k_coords(const Elem& a) const;
    Elem from_k_coords(std::span<const Elem> coords) const;

    /// Re-checks every structural invariant; throws FieldError on failure.
    void validate() const;

   private:
    FieldTower() = default;
    void finish();

    FieldPtr L_, F_, K_;
    std::optional<FieldAut> theta_, sigma_;
    std::optional<Embedding> f_in_l_, k_in_f_, k_in_l_;
    std::size_t mu_ = 0, s_ = 0, n_ = 0;
    std::vector<Elem> l_powers_;
    // Inverse of the GF(p)-matrix with columns kappa^a l^j.
    std::vector<std::vector<std::uint32_t>> coord_inverse_;
};

using TowerPtr = std::shared_ptr<const FieldTower>;

/// Theta exponent chosen by FieldTower::build for F = GF(p^e), sigma =
/// Frobenius^j and degree s.
std::size_t theta_exponent_for(std::size_t e, std::size_t j, std::size_t s);

inline constexpr std::uint64_t kDefaultRetryBudget = 1'000'000;

/// u in L with N_{L/K}(u) = lambda (lambda given as an element of L in K).
Elem norm_preimage(const FieldTower& tower, const Elem& lambda, std::uint64_t seed = 0,
                   std::uint64_t retry_budget = kDefaultRetryBudget);

/// alpha != 0 with beta = alpha^{-1} aut(alpha); requires norm(aut, beta) = 1.
Elem hilbert90_solve(const FieldAut& aut, const Elem& beta, std::uint64_t seed = 0,
                     std::uint64_t retry_budget = kDefaultRetryBudget);

/// True when {theta^i(alpha) N_i(u) : i < n} is a K-basis of L.
bool is_cyclic_vector(const FieldTower& tower, const Elem& u, const Elem& alpha);

Elem cyclic_vector(const FieldTower& tower, const Elem& u, std::uint64_t seed = 0,
                   std::uint64_t retry_budget = kDefaultRetryBudget);

}  // namespace skewlcp

#endif
