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
#include <string>
#include <vector>

#include "kummer/curve.hpp"

namespace kummer {

/// B(n0, j) = -1 + ceil((sum_i ((-j lambda_i) mod m) - n0 gcd(m, Lambda)) / m).
/// Throws JOutOfRange unless 1 <= j < m.
long long bound_B(const KummerCurve& curve, long long n0, int j);

enum class CriterionMode {
    Cond2,  // deg A = g, coefficient bounds, |C(n0, j)| <= B(n0, j)
    Cond3,  // coefficient bounds, |C(n0, j)| == B(n0, j)
};

struct CriterionRow {
    int j = 0;
    long long bound = 0;  // B(n0, j)
    long long count = 0;  // |C(n0, j)|
    bool pass = false;
};

struct CriterionReport {
    CriterionMode mode = CriterionMode::Cond3;
    std::vector<CriterionRow> rows;
    bool bounds_ok = false;
    long long degree = 0;
    long long genus = 0;
    bool nonspecial = false;  // verdict: non-special of degree g

    std::string verdict() const { return nonspecial ? "nonspecial_deg_g" : "fails"; }
};

/// Precomputed residues for repeated criterion evaluations on one curve.
class CriterionEvaluator {
public:
    explicit CriterionEvaluator(const KummerCurve& curve);

    long long bound(long long n0, int j) const;
    /// |C(n0, j)| = #{i : n_i d_i >= (j lambda_i) mod m > 0}.
    long long count(const InvariantTuple& a, int j) const;
    bool bounds_ok(const InvariantTuple& a) const;
    bool verdict(const InvariantTuple& a, CriterionMode mode) const;
    CriterionReport report(const InvariantTuple& a, CriterionMode mode) const;

    const KummerCurve& curve() const noexcept { return curve_; }

private:
    const KummerCurve& curve_;
    int m_;
    std::vector<int> d_;
    std::vector<int> e_;
    std::vector<std::vector<int>> residue_;  // residue_[i][j] = (j lambda_i) mod m
    std::vector<long long> neg_residue_sum_; // sum_i ((-j lambda_i) mod m), by j
    int d_inf_;
    int e_inf_;
    int genus_;
};

CriterionReport criterion_check(const KummerCurve& curve, const InvariantTuple& a,
                                 CriterionMode mode = CriterionMode::Cond3);

/// Sorts the coefficients inside every group of indices sharing a lambda.
InvariantTuple canonical_form(const KummerCurve& curve, const InvariantTuple& a);

inline constexpr unsigned long long kDefaultSearchCap = 100'000'000ULL;

struct EnumerateOptions {
    bool dedup = false;
    unsigned long long cap = kDefaultSearchCap;
    unsigned threads = 0;  // 0 = hardware concurrency
};

/// Size of the box n0 < m/d_inf, n_i < m/d_i.
unsigned long long search_space_size(const KummerCurve& curve);

/// Every effective invariant non-special divisor of degree g, in
/// lexicographic order of (n0, n_1, ..., n_r). Throws SearchSpaceTooLarge.
std::vector<InvariantTuple> enumerate_nonspecial(const KummerCurve& curve, const EnumerateOptions& opts = {});

/// lambda = (1, ..., 1): n_i = max(0, ceil(m (i-1) / r) - 1).
InvariantTuple coeffs_all_ones(int m, int r);

/// lambda = (1^(r-1), m/2) with the half place carrying N in {0, 1}.
InvariantTuple coeffs_half_single(int m, int r, int N);

/// lambda = (1^(r-2), m/2, m/2) with the first N in {0, 1, 2} half places
/// carrying coefficient 1.
InvariantTuple coeffs_half_double(int m, int r, int N);

/// lambda = (1^(r-1), 2), Lambda = r + 1. The last coefficient is N_k.
InvariantTuple coeffs_lambda_two(int m, int r, long long n0, int k);

/// N_i(n0) = floor((m i - 1 - n0 gcd(m, Lambda)) / Lambda).
long long lambda_two_N(int m, int Lambda, long long n0, long long i);

} // namespace kummer
