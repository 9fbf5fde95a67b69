/**************************************************************************
 * Copyright 2026 The kummer-lcp Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 **************************************************************************/

#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

namespace kummer {

/// Element of a finite field, stored as its canonical integer encoding
/// enc = sum coeffs[i] * p^i over the polynomial basis of the field.
struct Elem {
    std::uint32_t enc = 0;

    constexpr auto operator<=>(const Elem&) const = default;
};

inline constexpr std::uint32_t kDefaultFieldCap = 1u << 20;

/// GF(p^k) with the lexicographically least monic irreducible modulus.
///
/// Multiplication uses exp/log tables over a primitive element; addition
/// uses a Zech-logarithm table, so every operation is O(1). Instances are
/// immutable and meant to be shared through FieldPtr.
class Field {
public:
    Field(int p, int k, std::uint32_t cap = kDefaultFieldCap);

    int p() const noexcept { return p_; }
    int k() const noexcept { return k_; }
    std::uint32_t q() const noexcept { return q_; }
    /// Monic modulus, constant term first (k + 1 entries).
    const std::vector<int>& modulus() const noexcept { return modulus_; }

    Elem zero() const noexcept { return Elem{0}; }
    Elem one() const noexcept { return Elem{1}; }
    /// Image of an integer in the prime subfield.
    Elem from_int(long long v) const noexcept;
    /// Element with the given encoding; throws InvalidSpec when enc >= q.
    Elem element(std::uint32_t enc) const;
    std::vector<int> coeffs(Elem a) const;

    Elem add(Elem a, Elem b) const noexcept;
    Elem sub(Elem a, Elem b) const noexcept { return add(a, neg(b)); }
    Elem neg(Elem a) const noexcept { return Elem{neg_[a.enc]}; }
    Elem mul(Elem a, Elem b) const noexcept;
    /// Inverse of a nonzero element; throws on zero.
    Elem inv(Elem a) const;
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
    /// a^e for any integer e (negative e requires a != 0).
    Elem pow(Elem a, long long e) const;

    Elem primitive() const noexcept { return Elem{exp_[1]}; }
    /// Discrete log base primitive(); a must be nonzero.
    std::uint32_t log(Elem a) const noexcept { return log_[a.enc]; }
    Elem exp(long long e) const noexcept;
    /// Multiplicative order of a nonzero element.
    std::uint64_t order(Elem a) const;

    bool operator==(const Field& other) const noexcept {
        return p_ == other.p_ && k_ == other.k_;
    }

private:
    int p_;
    int k_;
    std::uint32_t q_;
    std::vector<int> modulus_;
    std::vector<std::uint32_t> exp_;  // size q-1
    std::vector<std::uint32_t> log_;  // size q, log_[0] unused
    std::vector<std::uint32_t> neg_;  // size q
    std::vector<std::int64_t> zech_;  // zech_[i] = log(1 + g^i), -1 when 1 + g^i = 0
};

using FieldPtr = std::shared_ptr<const Field>;

/// Builds GF(p^k). Throws NotPrime, DegreeZero or FieldTooLarge.
FieldPtr make_field(int p, int k, std::uint32_t cap = kDefaultFieldCap);

bool is_prime(long long n);

/// All y with y^n = c, sorted by encoding.
std::vector<Elem> nth_roots(const Field& f, Elem c, unsigned n);

/// Dense univariate polynomial over a Field, constant term first, with
/// trailing zeros trimmed. The zero polynomial has no coefficients.
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<Elem> coeffs);

    static Poly constant(Elem c) { return Poly({c}); }
    /// x - a
    static Poly linear(const Field& f, Elem a);

    const std::vector<Elem>& coeffs() const noexcept { return c_; }
    bool is_zero() const noexcept { return c_.empty(); }
    /// Degree, or -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    Elem leading() const noexcept { return c_.empty() ? Elem{} : c_.back(); }
    Elem coeff(std::size_t i) const noexcept { return i < c_.size() ? c_[i] : Elem{}; }

    bool operator==(const Poly&) const = default;

private:
    std::vector<Elem> c_;
};

Poly poly_add(const Field& f, const Poly& a, const Poly& b);
Poly poly_sub(const Field& f, const Poly& a, const Poly& b);
Poly poly_mul(const Field& f, const Poly& a, const Poly& b);
Poly poly_scale(const Field& f, const Poly& a, Elem c);
/// Quotient and remainder; b must be nonzero.
std::pair<Poly, Poly> poly_divmod(const Field& f, const Poly& a, const Poly& b);
/// Monic gcd (zero when both inputs are zero).
Poly poly_gcd(const Field& f, Poly a, Poly b);
Poly poly_derivative(const Field& f, const Poly& a);
Elem poly_eval(const Field& f, const Poly& a, Elem x);

struct PolyAnalysis {
    std::vector<std::pair<Elem, int>> roots_in_field;  // (root, multiplicity), by enc
    bool separable = false;
    Elem leading_coeff;
};

/// Roots by exhaustive evaluation, multiplicities by repeated division,
/// separability via gcd(f, f'). Throws ZeroPolynomial.
PolyAnalysis poly_analyze(const Field& f, const Poly& poly);

} // namespace kummer
