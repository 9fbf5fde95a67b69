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

#include "kummer/nonspecial.hpp"

#include <algorithm>
#include <future>
#include <map>
#include <numeric>
#include <thread>

#include "kummer/error.hpp"

namespace kummer {

CriterionEvaluator::CriterionEvaluator(const KummerCurve& curve)
    : curve_(curve),
      m_(curve.m()),
      d_(curve.ram().d),
      e_(curve.ram().e),
      d_inf_(curve.ram().d_inf),
      e_inf_(curve.ram().e_inf),
      genus_(curve.genus()) {
    const auto lambdas = curve.lambdas();
    residue_.assign(lambdas.size(), std::vector<int>(static_cast<std::size_t>(m_), 0));
    neg_residue_sum_.assign(static_cast<std::size_t>(m_), 0);
    for (std::size_t i = 0; i < lambdas.size(); ++i) {
        for (int j = 1; j < m_; ++j) {
            residue_[i][static_cast<std::size_t>(j)] = static_cast<int>(mod_pos(static_cast<long long>(j) * lambdas[i], m_));
            neg_residue_sum_[static_cast<std::size_t>(j)] += mod_pos(-static_cast<long long>(j) * lambdas[i], m_);
        }
    }
}

long long CriterionEvaluator::bound(long long n0, int j) const {
    if (j < 1 || j >= m_) throw Error(ErrorCode::JOutOfRange, "j = " + std::to_string(j) + " outside [1, m)");
    return -1 + ceil_div(neg_residue_sum_[static_cast<std::size_t>(j)] - n0 * d_inf_, m_);
}

long long CriterionEvaluator::count(const InvariantTuple& a, int j) const {
    long long c = 0;
    for (std::size_t i = 0; i < residue_.size(); ++i) {
        const int res = residue_[i][static_cast<std::size_t>(j)];
        if (res > 0 && a.n[i] * d_[i] >= res) ++c;
    }
    return c;
}

bool CriterionEvaluator::bounds_ok(const InvariantTuple& a) const {
    if (a.n0 < 0 || a.n0 >= e_inf_) return false;
    for (std::size_t i = 0; i < a.n.size(); ++i) {
        if (a.n[i] < 0 || a.n[i] >= e_[i]) return false;
    }
    return true;
}

bool CriterionEvaluator::verdict(const InvariantTuple& a, CriterionMode mode) const {
    if (a.n.size() != residue_.size()) throw Error(ErrorCode::InvalidSpec, "tuple length does not match the curve");
    if (!bounds_ok(a)) return false;
    if (mode == CriterionMode::Cond2 && invariant_degree(curve_, a) != genus_) return false;
    for (int j = 1; j < m_; ++j) {
        const long long b = bound(a.n0, j);
        const long long c = count(a, j);
        if (mode == CriterionMode::Cond3 ? c != b : c > b) return false;
    }
    return true;
}

CriterionReport CriterionEvaluator::report(const InvariantTuple& a, CriterionMode mode) const {
    if (a.n.size() != residue_.size()) throw Error(ErrorCode::InvalidSpec, "tuple length does not match the curve");
    CriterionReport rep;
    rep.mode = mode;
    rep.bounds_ok = bounds_ok(a);
    rep.degree = invariant_degree(curve_, a);
    rep.genus = genus_;
    bool all = true;
    for (int j = 1; j < m_; ++j) {
        CriterionRow row;
        row.j = j;
        row.bound = bound(a.n0, j);
        row.count = count(a, j);
        row.pass = mode == CriterionMode::Cond3 ? row.count == row.bound : row.count <= row.bound;
        all = all && row.pass;
        rep.rows.push_back(row);
    }
    rep.nonspecial = rep.bounds_ok && all && (mode == CriterionMode::Cond3 || rep.degree == rep.genus);
    return rep;
}

long long bound_B(const KummerCurve& curve, long long n0, int j) {
    if (n0 < 0) throw Error(ErrorCode::NegativeCoefficient, "n0 must be non-negative");
    return CriterionEvaluator(curve).bound(n0, j);
}

CriterionReport criterion_check(const KummerCurve& curve, const InvariantTuple& a, CriterionMode mode) {
    if (a.n0 < 0 || std::any_of(a.n.begin(), a.n.end(), [](long long v) { return v < 0; })) {
        throw Error(ErrorCode::NegativeCoefficient, "criterion_check expects an effective tuple");
    }
    return CriterionEvaluator(curve).report(a, mode);
}

InvariantTuple canonical_form(const KummerCurve& curve, const InvariantTuple& a) {
    const auto lambdas = curve.lambdas();
    std::map<int, std::vector<std::size_t>> groups;
    for (std::size_t i = 0; i < lambdas.size(); ++i) groups[lambdas[i]].push_back(i);
    InvariantTuple out = a;
    for (const auto& [lam, idx] : groups) {
        std::vector<long long> vals;
        for (auto i : idx) vals.push_back(a.n.at(i));
        std::sort(vals.begin(), vals.end());
        for (std::size_t k = 0; k < idx.size(); ++k) out.n[idx[k]] = vals[k];
    }
    return out;
}

unsigned long long search_space_size(const KummerCurve& curve) {
    unsigned long long size = static_cast<unsigned long long>(curve.ram().e_inf);
    for (int e : curve.ram().e) {
        if (size > (~0ULL) / static_cast<unsigned long long>(e)) return ~0ULL;
        size *= static_cast<unsigned long long>(e);
    }
    return size;
}

namespace {

struct Search {
    const CriterionEvaluator& eval;
    const KummerCurve& curve;
    bool dedup;
    std::vector<int> prev_in_group;  // index of the previous member of i's lambda group, or -1
    std::vector<InvariantTuple>* out;
    InvariantTuple cur;
    long long genus;

    void run(std::size_t i, long long degree) {
        const auto& ram = curve.ram();
        if (i == cur.n.size()) {
            if (degree == genus && eval.verdict(cur, CriterionMode::Cond3)) out->push_back(cur);
            return;
        }
        long long start = 0;
        if (dedup && prev_in_group[i] >= 0) start = cur.n[static_cast<std::size_t>(prev_in_group[i])];
        const long long step = ram.d[i];
        for (long long v = start; v < ram.e[i]; ++v) {
            const long long deg = degree + v * step;
            if (deg > genus) break;
            cur.n[i] = v;
            run(i + 1, deg);
        }
        cur.n[i] = 0;
    }
};

} // namespace

std::vector<InvariantTuple> enumerate_nonspecial(const KummerCurve& curve, const EnumerateOptions& opts) {
    const unsigned long long size = search_space_size(curve);
    if (size > opts.cap) {
        throw Error(ErrorCode::SearchSpaceTooLarge,
                    "search space " + std::to_string(size) + " exceeds cap " + std::to_string(opts.cap));
    }
    const CriterionEvaluator eval(curve);
    const auto lambdas = curve.lambdas();
    std::vector<int> prev(lambdas.size(), -1);
    for (std::size_t i = 0; i < lambdas.size(); ++i) {
        for (std::size_t k = i; k-- > 0;) {
            if (lambdas[k] == lambdas[i]) {
                prev[i] = static_cast<int>(k);
                break;
            }
        }
    }

    const int e_inf = curve.ram().e_inf;
    std::vector<std::vector<InvariantTuple>> parts(static_cast<std::size_t>(e_inf));
    auto work = [&](int n0) {
        Search s{eval, curve, opts.dedup, prev, &parts[static_cast<std::size_t>(n0)],
                 InvariantTuple{n0, std::vector<long long>(lambdas.size(), 0)}, curve.genus()};
        const long long base = static_cast<long long>(n0) * curve.ram().d_inf;
        if (base <= s.genus) s.run(0, base);
    };

    unsigned threads = opts.threads != 0 ? opts.threads : std::max(1u, std::thread::hardware_concurrency());
    if (threads <= 1 || size < 100'000) {
        for (int n0 = 0; n0 < e_inf; ++n0) work(n0);
    } else {
        std::vector<std::future<void>> jobs;
        int next = 0;
        // round-robin over n0 with at most `threads` jobs in flight
        while (next < e_inf || !jobs.empty()) {
            while (next < e_inf && jobs.size() < threads) {
                jobs.push_back(std::async(std::launch::async, work, next++));
            }
            jobs.front().get();
            jobs.erase(jobs.begin());
        }
    }

    std::vector<InvariantTuple> out;
    for (auto& p : parts) out.insert(out.end(), p.begin(), p.end());
    return out;
}

namespace {

void require(bool cond, ErrorCode code, const std::string& msg) {
    if (!cond) throw Error(code, msg);
}

void verify_or_throw(const KummerCurve& curve, const InvariantTuple& a, const std::string& family) {
    const auto rep = criterion_check(curve, a, CriterionMode::Cond3);
    if (!rep.nonspecial) {
        std::string msg = family + " closed form fails the criterion (degree " + std::to_string(rep.degree) +
                          ", genus " + std::to_string(rep.genus) + ");";
        for (const auto& row : rep.rows) {
            if (!row.pass) {
                msg += " j=" + std::to_string(row.j) + ": |C|=" + std::to_string(row.count) +
                       " B=" + std::to_string(row.bound);
            }
        }
        throw Error(ErrorCode::FormulaMismatch, msg);
    }
}

std::string tuple_text(const std::vector<long long>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s;
}

} // namespace

InvariantTuple coeffs_all_ones(int m, int r) {
    require(m >= 2 && r >= 1, ErrorCode::RegimeViolation, "need m >= 2 and r >= 1");
    const auto curve = KummerCurve::make_abstract(m, std::vector<int>(static_cast<std::size_t>(r), 1));
    const CriterionEvaluator eval(curve);

    // #{i : n_i = j} = B(0, j) - [j < m-1] B(0, j+1)
    std::vector<long long> wanted(static_cast<std::size_t>(m), 0);
    long long nonzero = 0;
    for (int j = 1; j < m; ++j) {
        const long long c = eval.bound(0, j) - (j < m - 1 ? eval.bound(0, j + 1) : 0);
        if (c < 0) throw Error(ErrorCode::NoSolution, "counting condition negative at j = " + std::to_string(j));
        wanted[static_cast<std::size_t>(j)] = c;
        nonzero += c;
    }
    if (nonzero > r) throw Error(ErrorCode::NoSolution, "counting condition needs more than r coefficients");

    InvariantTuple a{0, std::vector<long long>(static_cast<std::size_t>(r), 0)};
    for (int i = 1; i <= r; ++i) {
        a.n[static_cast<std::size_t>(i - 1)] = std::max<long long>(0, ceil_div(static_cast<long long>(m) * (i - 1), r) - 1);
    }
    std::vector<long long> got(static_cast<std::size_t>(m), 0);
    for (long long v : a.n) {
        if (v > 0 && v < m) ++got[static_cast<std::size_t>(v)];
    }
    for (int j = 1; j < m; ++j) {
        if (got[static_cast<std::size_t>(j)] != wanted[static_cast<std::size_t>(j)]) {
            throw Error(ErrorCode::FormulaMismatch, "all-ones formula histogram disagrees with the counting condition at j = " +
                                                        std::to_string(j) + " (" + tuple_text(a.n) + ")");
        }
    }
    verify_or_throw(curve, a, "all-ones");
    return a;
}

InvariantTuple coeffs_half_single(int m, int r, int N) {
    require(m >= 2 && m % 2 == 0, ErrorCode::RegimeViolation, "m must be even");
    require(r >= 2, ErrorCode::RegimeViolation, "need r >= 2");
    require(N == 0 || N == 1, ErrorCode::RegimeViolation, "N must be 0 or 1");
    const int h = m / 2;
    const int lower = N == 0 ? h - (h % 2) : h + 2;
    require(r >= lower, ErrorCode::RegimeViolation,
            "r = " + std::to_string(r) + " below " + std::to_string(lower) + " for N = " + std::to_string(N));

    std::vector<int> lambdas(static_cast<std::size_t>(r - 1), 1);
    lambdas.push_back(h);
    const auto curve = KummerCurve::make_abstract(m, lambdas);

    const long long s = r - 1;
    InvariantTuple a{0, std::vector<long long>(static_cast<std::size_t>(r), 0)};
    for (long long i = 1; i <= s; ++i) {
        const long long even = 2 * ceil_div(static_cast<long long>(m) * (i - 1), 2 * s) - 2;
        // m (i - N - 1/2) - (r - 1), kept integral since m is even
        const long long odd = 2 * ceil_div(static_cast<long long>(m) * (i - N) - h - s, 2 * s) - 1;
        a.n[static_cast<std::size_t>(i - 1)] = std::max({0LL, even, odd});
    }
    a.n.back() = N;

    if (N == 0 && r <= h) {
        for (long long i = 1; i <= s; ++i) {
            const long long simple = 2 * ceil_div(static_cast<long long>(m) * i - h - s, 2 * s) - 1;
            if (simple != a.n[static_cast<std::size_t>(i - 1)]) {
                throw Error(ErrorCode::FormulaMismatch, "odd-only special case disagrees at i = " + std::to_string(i));
            }
        }
    }
    if (N == 1 && r == h + 2) {
        bool ok = a.n[0] == 0 && a.n[1] == 0;
        for (int i = 1; i <= h - 1; ++i) ok = ok && a.n[static_cast<std::size_t>(1 + i)] == 2 * i;
        if (!ok) throw Error(ErrorCode::FormulaMismatch, "n_{2+i} = 2i special case disagrees: " + tuple_text(a.n));
    }
    verify_or_throw(curve, a, "half-single");
    return a;
}

InvariantTuple coeffs_half_double(int m, int r, int N) {
    require(m >= 2 && m % 2 == 0, ErrorCode::RegimeViolation, "m must be even");
    require(N >= 0 && N <= 2, ErrorCode::RegimeViolation, "N must be 0, 1 or 2");
    const int h = m / 2;
    const int lower = N == 0 ? m + 1 - (h % 2) : (N == 1 ? 3 : m + 3);
    require(r >= lower, ErrorCode::RegimeViolation,
            "r = " + std::to_string(r) + " below " + std::to_string(lower) + " for N = " + std::to_string(N));

    std::vector<int> lambdas(static_cast<std::size_t>(r - 2), 1);
    lambdas.push_back(h);
    lambdas.push_back(h);
    const auto curve = KummerCurve::make_abstract(m, lambdas);

    const long long s = r - 2;
    InvariantTuple a{0, std::vector<long long>(static_cast<std::size_t>(r), 0)};
    for (long long i = 1; i <= s; ++i) {
        const long long even = 2 * ceil_div(static_cast<long long>(m) * (i - 1), 2 * s) - 2;
        const long long odd = 2 * ceil_div(static_cast<long long>(m) * (i - N) - s, 2 * s) - 1;
        a.n[static_cast<std::size_t>(i - 1)] = std::max({0LL, even, odd});
    }
    a.n[static_cast<std::size_t>(r - 2)] = N >= 1 ? 1 : 0;
    a.n[static_cast<std::size_t>(r - 1)] = N >= 2 ? 1 : 0;

    if (N == 1 && r == h + 2) {
        // the vanishing ones-part coefficient is n_1
        bool ok = a.n[0] == 0;
        for (int i = 1; i <= h - 1; ++i) ok = ok && a.n[static_cast<std::size_t>(i)] == 2 * i - 1;
        if (!ok) throw Error(ErrorCode::FormulaMismatch, "n_{i+1} = 2i-1 special case disagrees: " + tuple_text(a.n));
    }
    if (N == 2 && r == m + 3) {
        bool ok = a.n[0] == 0 && a.n[1] == 0 && a.n[2] == 0;
        for (int i = 1; i <= h - 1; ++i) {
            ok = ok && a.n[static_cast<std::size_t>(2 * i + 1)] == 2 * i && a.n[static_cast<std::size_t>(2 * i + 2)] == 2 * i;
        }
        if (!ok) throw Error(ErrorCode::FormulaMismatch, "n_{2i+2} = n_{2i+3} = 2i special case disagrees: " + tuple_text(a.n));
    }
    verify_or_throw(curve, a, "half-double");
    return a;
}

long long lambda_two_N(int m, int Lambda, long long n0, long long i) {
    return floor_div(static_cast<long long>(m) * i - 1 - n0 * std::gcd(m, Lambda), Lambda);
}

InvariantTuple coeffs_lambda_two(int m, int r, long long n0, int k) {
    require(m >= 4 && m % 2 == 0, ErrorCode::RegimeViolation, "m must be even and >= 4");
    require(r >= 3 && (r - 1) % 2 == 0, ErrorCode::RegimeViolation, "r - 1 must be even and >= 2");
    const int Lambda = r + 1;
    const int g = std::gcd(m, Lambda);
    require(Lambda <= m, ErrorCode::RegimeViolation, "need Lambda = r + 1 <= m");
    require(n0 >= 0 && n0 * g < Lambda, ErrorCode::RegimeViolation, "need 0 <= n0 and n0 gcd(m, Lambda) < Lambda");
    require(k >= 1 && k <= Lambda / 2 - 1, ErrorCode::RegimeViolation,
            "k = " + std::to_string(k) + " outside [1, Lambda/2 - 1]");
    const long long Nk = lambda_two_N(m, Lambda, n0, k);
    if (Nk <= 0) throw Error(ErrorCode::NkNotPositive, "N_k = " + std::to_string(Nk));

    std::vector<int> lambdas(static_cast<std::size_t>(r - 1), 1);
    lambdas.push_back(2);
    const auto curve = KummerCurve::make_abstract(m, lambdas);

    InvariantTuple a{n0, std::vector<long long>(static_cast<std::size_t>(r), 0)};
    const int half = Lambda / 2;
    for (int i = 1; i <= r - 1; ++i) {
        long long v = 0;
        if (i <= k) {
            v = std::max(0LL, lambda_two_N(m, Lambda, n0, i - 1));
        } else if (i < k + half) {
            v = lambda_two_N(m, Lambda, n0, i);
        } else {
            v = lambda_two_N(m, Lambda, n0, i + 1);
        }
        a.n[static_cast<std::size_t>(i - 1)] = v;
    }
    a.n.back() = Nk;
    verify_or_throw(curve, a, "lambda-two");
    return a;
}

} // namespace kummer
