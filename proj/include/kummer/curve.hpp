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
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "kummer/ffield.hpp"

namespace kummer {

/// floor(a / b) for b > 0.
constexpr long long floor_div(long long a, long long b) noexcept {
    return a >= 0 ? a / b : -((-a + b - 1) / b);
}
/// ceil(a / b) for b > 0.
constexpr long long ceil_div(long long a, long long b) noexcept {
    return -floor_div(-a, b);
}
/// Non-negative residue of a modulo b > 0.
constexpr long long mod_pos(long long a, long long b) noexcept {
    const long long r = a % b;
    return r < 0 ? r + b : r;
}

/// One factor (x - alpha)^lambda of the defining polynomial. Abstract curves
/// leave alpha unset.
struct BranchSpec {
    std::optional<Elem> alpha;
    int lambda = 1;
};

struct Ramification {
    std::vector<int> d;  // d_i = gcd(m, lambda_i): places above alpha_i
    std::vector<int> e;  // e_i = m / d_i
    int Lambda = 0;      // sum of lambda_i
    int d_inf = 1;       // gcd(m, Lambda)
    int e_inf = 1;       // m / d_inf
    int genus = 0;
};

/// Place of the Kummer function field.
///
/// Branch(i, j) and Infinity(j) are the conjugate places above x = alpha_i and
/// x = infinity; j indexes the sorted list of values of
/// w_i = y^(m/d_i) (x - alpha_i)^(-lambda_i/d_i), resp.
/// w = y^(m/d_inf) x^(-Lambda/d_inf), at the place. Infinity(0) is Q_inf.
/// Split(a, y) is the unramified place with x = a and y = y.
struct Place {
    enum class Kind { Branch = 0, Infinity = 1, Split = 2 };

    Kind kind = Kind::Infinity;
    int index = 0;  // branch index for Branch
    int j = 0;      // conjugate label for Branch / Infinity
    Elem a{};       // Split only
    Elem y{};       // Split only

    static Place branch(int i, int j) { return Place{Kind::Branch, i, j, {}, {}}; }
    static Place infinity(int j) { return Place{Kind::Infinity, 0, j, {}, {}}; }
    static Place split(Elem a, Elem y) { return Place{Kind::Split, 0, 0, a, y}; }
    static Place q_inf() { return infinity(0); }

    auto operator<=>(const Place&) const = default;
    std::string label() const;
};

/// Finite formal sum of places with integer coefficients. Zero coefficients
/// are never stored.
class Divisor {
public:
    using Table = std::map<Place, long long>;

    Divisor() = default;

    long long at(const Place& p) const;
    void add(const Place& p, long long c);
    void set(const Place& p, long long c);

    const Table& terms() const noexcept { return terms_; }
    bool empty() const noexcept { return terms_.empty(); }
    /// Sum of coefficients; every place class is treated as degree one.
    long long degree() const;
    bool is_effective() const;

    Divisor& operator+=(const Divisor& other);
    Divisor& operator-=(const Divisor& other);
    friend Divisor operator+(Divisor a, const Divisor& b) { return a += b; }
    friend Divisor operator-(Divisor a, const Divisor& b) { return a -= b; }
    friend Divisor operator*(long long c, const Divisor& d);
    bool operator==(const Divisor&) const = default;

    /// Coefficient-wise minimum (gcd) and maximum (lmd).
    static Divisor min_merge(const Divisor& a, const Divisor& b);
    static Divisor max_merge(const Divisor& a, const Divisor& b);

private:
    Table terms_;
};

/// Invariant effective divisor
///   A = n0 * div_inf(x) / e_inf + sum_i n_i * div_0(x - alpha_i) / e_i,
/// i.e. n0 on every place above infinity and n_i on every place above alpha_i.
struct InvariantTuple {
    long long n0 = 0;
    std::vector<long long> n;

    bool operator==(const InvariantTuple&) const = default;
    auto operator<=>(const InvariantTuple&) const = default;
};

/// Rational function lead * prod (x - alpha_i)^branch_exp[i] * prod (x - a)^point_exp[a]
/// in the rational subfield, with `a` ranging over non-branch field points.
struct RationalX {
    Elem lead{1};
    std::vector<int> branch_exp;
    std::map<Elem, int> point_exp;

    long long degree() const;
};

/// y^m = a * prod (x - alpha_i)^lambda_i over GF(q), or with no field at all
/// (abstract mode, where only m and the lambda_i matter).
class KummerCurve {
public:
    static KummerCurve make(FieldPtr field, int m, std::vector<BranchSpec> branches, Elem lead);
    static KummerCurve make(FieldPtr field, int m, std::vector<BranchSpec> branches);
    static KummerCurve make_abstract(int m, std::vector<int> lambdas);

    bool is_abstract() const noexcept { return field_ == nullptr; }
    /// Throws AbstractField for abstract curves.
    const Field& field() const;
    const FieldPtr& field_ptr() const noexcept { return field_; }

    int m() const noexcept { return m_; }
    int r() const noexcept { return static_cast<int>(branches_.size()); }
    const std::vector<BranchSpec>& branches() const noexcept { return branches_; }
    std::vector<int> lambdas() const;
    Elem alpha(int i) const;
    Elem lead() const noexcept { return lead_; }
    const Ramification& ram() const noexcept { return ram_; }
    int genus() const noexcept { return ram_.genus; }

    /// f(x) = a prod (x - alpha_i)^lambda_i evaluated at a field point.
    Elem f_at(Elem x) const;
    Poly defining_poly() const;
    std::optional<int> branch_index(Elem x) const;

    /// Rational w-values labelling the places above alpha_i / infinity.
    const std::vector<Elem>& branch_labels(int i) const { return branch_labels_.at(static_cast<std::size_t>(i)); }
    const std::vector<Elem>& infinity_labels() const noexcept { return infinity_labels_; }
    /// w-value of Q_inf = Infinity(0); throws NoRationalInfinity when no
    /// place above infinity is rational.
    Elem q_inf_label() const;

    /// Every place class above branch points and infinity (geometric; the
    /// conjugate places need not be rational).
    std::vector<Place> ramified_places() const;

private:
    FieldPtr field_;
    int m_ = 2;
    std::vector<BranchSpec> branches_;
    Elem lead_{1};
    Ramification ram_;
    std::vector<std::vector<Elem>> branch_labels_;
    std::vector<Elem> infinity_labels_;
};

Ramification ramification(int m, const std::vector<int>& lambdas);

/// v_P(x^ex * y^ey).
long long monomial_valuation(const KummerCurve& curve, const Place& place, long long ex, long long ey);
/// v_P(b(x) * y^t).
long long valuation(const KummerCurve& curve, const Place& place, const RationalX& b, long long t);

/// div(b(x) y^t) over every place class.
Divisor principal_divisor(const KummerCurve& curve, const RationalX& b, long long t);
/// div(num/den * y^t); roots of num and den must be branch points or
/// completely split points (UnsupportedRoot otherwise).
Divisor principal_divisor(const KummerCurve& curve, const Poly& num, const Poly& den, long long t);
RationalX to_rational_x(const KummerCurve& curve, const Poly& num, const Poly& den);

/// Pole divisor of x: e_inf on each place above infinity.
Divisor div_inf_x(const KummerCurve& curve);
/// Zero divisor of x - alpha_i: e_i on each place above alpha_i.
Divisor div0_branch(const KummerCurve& curve, int i);
Divisor invariant_divisor(const KummerCurve& curve, const InvariantTuple& a);
/// Inverse of invariant_divisor; nullopt when d is not Galois invariant or
/// is supported outside branch/infinity places.
std::optional<InvariantTuple> as_invariant(const KummerCurve& curve, const Divisor& d);
long long invariant_degree(const KummerCurve& curve, const InvariantTuple& a);

/// Place of the rational subfield: x = alpha_i, x = infinity or x = a.
struct BasePlace {
    enum class Kind { Branch = 0, Infinity = 1, Point = 2 };
    Kind kind = Kind::Infinity;
    int index = 0;
    Elem a{};

    auto operator<=>(const BasePlace&) const = default;
};

struct BaseDivisor {
    std::map<BasePlace, long long> coeff;

    long long at(const BasePlace& p) const;
    long long degree() const;
};

/// Restriction R(D): at each base place Q, the minimum over P | Q of
/// floor(v_P(D) / e(P|Q)).
BaseDivisor restrict_divisor(const KummerCurve& curve, const Divisor& d);

/// l(R) on the projective line: deg + 1 when deg >= 0, else 0.
inline long long ell_rational(long long degree) { return degree >= 0 ? degree + 1 : 0; }

struct EllOptions {
    std::optional<int> shift_t;
    bool allow_negative = false;
};

/// Dimension of L(A) for an invariant divisor as the sum over t of
/// l(R(A + div(y^t))). Throws NegativeCoefficient for non-effective
/// tuples unless allow_negative is set.
long long ell_invariant(const KummerCurve& curve, const InvariantTuple& a, const EllOptions& opts = {});
/// deg R(A + div(y^t)).
long long restricted_degree(const KummerCurve& curve, const InvariantTuple& a, int t);

struct SplittingType {
    enum class Kind { Branch, Split, InertOrPartial };
    Kind kind = Kind::InertOrPartial;
    std::vector<Place> places;
};

SplittingType splitting_type(const KummerCurve& curve, Elem a);
/// Field points whose base place splits completely, by encoding.
std::vector<Elem> split_points(const KummerCurve& curve);

struct Census {
    long long rational_places = 0;
    long long split_places = 0;
    long long branch_places = 0;
    long long infinite_places = 0;
    double hasse_weil_bound = 0;
    bool is_maximal = false;
};

Census census(const KummerCurve& curve);

} // namespace kummer
