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

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "kummer/curve.hpp"
#include "kummer/ffield.hpp"

namespace kummer {

/// Row-major matrix over a finite field.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    Elem& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    Elem at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
    void append_rows(const Matrix& other);

    bool operator==(const Matrix&) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Elem> data_;
};

/// Rank by Gaussian elimination over the field.
std::size_t rank(const Field& f, Matrix m);

/// coeff * x^x_pow * prod_i (x - alpha_i)^branch_pow[i] * y^t
struct Term {
    Elem coeff{1};
    int x_pow = 0;
    std::vector<int> branch_pow;
    int t = 0;
};

/// Element of a Riemann-Roch space written as a sum of terms b(x) y^t.
struct BasisFunction {
    std::vector<Term> terms;
};

/// Basis of L(A) (minus_q_inf = false) or L(A - Q_inf) for the invariant
/// divisor A given by its tuple. The tuple may hold any integers here.
std::vector<BasisFunction> rr_basis(const KummerCurve& curve, const InvariantTuple& a, bool minus_q_inf);
/// Same for a divisor given as a place table; it must be invariant or
/// invariant minus Q_inf (UnsupportedShape otherwise).
std::vector<BasisFunction> rr_basis(const KummerCurve& curve, const Divisor& d);

/// Leading coefficient at Q_inf relative to a fixed monomial of valuation
/// -v_max, where v_max is the coefficient of `a` at Q_inf. Zero exactly
/// when the candidate (taken from L(a)) lies in L(a - Q_inf).
Elem infinity_functional(const KummerCurve& curve, const InvariantTuple& a, const BasisFunction& candidate);

/// Lower bound for v_P(f); exact at places above infinity, where cancellation
/// of leading terms is detected.
long long valuation_lower_bound(const KummerCurve& curve, const Place& place, const BasisFunction& f);
/// div(f) + G >= 0 at every ramified place and every place of supp(G).
bool in_riemann_roch_space(const KummerCurve& curve, const BasisFunction& f, const Divisor& g);

Elem evaluate(const KummerCurve& curve, const BasisFunction& f, const Place& place);
Matrix eval_matrix(const KummerCurve& curve, const std::vector<BasisFunction>& basis, const std::vector<Place>& places);

struct LinearCode {
    FieldPtr field;
    std::size_t n = 0;
    std::size_t k = 0;
    Matrix gen;
    Divisor divisor_G;
    long long designed_distance = 0;
    std::vector<BasisFunction> basis;
};

/// C_L(D, G) for G invariant or invariant minus Q_inf, with
/// 2g - 2 < deg G < n.
LinearCode build_code(const KummerCurve& curve, const Divisor& g, const std::vector<Place>& d_places);

/// True iff k_C + k_E = n and the stacked generator matrix has rank n.
bool lcp_verify(const LinearCode& c, const LinearCode& e);

inline constexpr unsigned long long kDefaultEnumerationCap = 1'000'000ULL;

/// Minimum Hamming weight over all nonzero codewords.
long long min_distance_exact(const LinearCode& code, unsigned long long cap = kDefaultEnumerationCap);

struct LCPPair {
    LinearCode C;  // from G
    LinearCode E;  // from H
    InvariantTuple A;
    std::vector<int> phi_indices;
    std::vector<Elem> split_points;
    long long s = 0;
    long long s_min = 0;
    long long s_max = 0;
    Divisor G;
    Divisor H;
    Divisor D;
    bool gcd_identity = false;  // gcd(G, H) == A - Q_inf
    bool lmd_identity = false;  // lmd(G, H) - D - (A - Q_inf) == div(Phi^s) - div(h)
    bool verified = false;
    std::vector<std::string> notes;
};

/// Admissible s: (g-1)/(m |phi|) < s < (n-g+1)/(m |phi|), s >= 1.
std::pair<long long, long long> s_range(long long genus, long long n, long long m, long long phi_count);

/// G = A - Q_inf + div_inf(h) - div_inf(Phi^s), H = A - Q_inf + div_0(Phi^s)
/// with Phi = prod_{i in phi}(x - alpha_i) and h = prod (x - a) over the
/// split points (all split points when empty). Default s is the smallest
/// admissible value.
LCPPair lcp_build_general(const KummerCurve& curve, const InvariantTuple& a, const std::vector<int>& phi_indices,
                          const std::vector<Elem>& split_pts = {}, std::optional<long long> s = std::nullopt);

enum class Regime { HalfSingle, HalfDoubleN1, HalfDoubleN2, LambdaTwo };

std::string to_string(Regime r);
Regime regime_from_string(const std::string& s);

struct RegimeParams {
    std::optional<long long> s;
    int k = 1;  // LambdaTwo: index of N_k
    std::vector<Elem> split_points;
};

LCPPair lcp_build_regime(const KummerCurve& curve, Regime regime, const RegimeParams& params = {});

} // namespace kummer
