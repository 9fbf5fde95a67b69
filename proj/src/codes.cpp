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

#include "kummer/codes.hpp"

#include <algorithm>
#include <future>
#include <numeric>
#include <set>
#include <thread>

#include "kummer/error.hpp"
#include "kummer/nonspecial.hpp"

namespace kummer {

void Matrix::append_rows(const Matrix& other) {
    if (rows_ == 0) cols_ = other.cols_;
    if (other.rows_ == 0) return;
    if (other.cols_ != cols_) throw Error(ErrorCode::LengthMismatch, "column counts differ");
    data_.insert(data_.end(), other.data_.begin(), other.data_.end());
    rows_ += other.rows_;
}

std::size_t rank(const Field& f, Matrix m) {
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t piv = r;
        while (piv < m.rows() && m.at(piv, c).enc == 0) ++piv;
        if (piv == m.rows()) continue;
        if (piv != r) {
            for (std::size_t j = c; j < m.cols(); ++j) std::swap(m.at(piv, j), m.at(r, j));
        }
        const Elem inv = f.inv(m.at(r, c));
        for (std::size_t j = c; j < m.cols(); ++j) m.at(r, j) = f.mul(m.at(r, j), inv);
        for (std::size_t i = r + 1; i < m.rows(); ++i) {
            const Elem factor = m.at(i, c);
            if (factor.enc == 0) continue;
            for (std::size_t j = c; j < m.cols(); ++j) {
                m.at(i, j) = f.sub(m.at(i, j), f.mul(factor, m.at(r, j)));
            }
        }
        ++r;
    }
    return r;
}

namespace {

RationalX term_rational(const KummerCurve& curve, const Term& term) {
    RationalX b;
    b.lead = term.coeff;
    b.branch_exp.assign(static_cast<std::size_t>(curve.r()), 0);
    for (std::size_t i = 0; i < term.branch_pow.size() && i < b.branch_exp.size(); ++i) {
        b.branch_exp[i] = term.branch_pow[i];
    }
    if (term.x_pow != 0) {
        std::optional<int> zero_branch;
        if (!curve.is_abstract()) zero_branch = curve.branch_index(Elem{0});
        if (zero_branch) {
            b.branch_exp[static_cast<std::size_t>(*zero_branch)] += term.x_pow;
        } else {
            b.point_exp[Elem{0}] += term.x_pow;
        }
    }
    return b;
}

long long term_degree(const Term& term) {
    return term.x_pow + std::accumulate(term.branch_pow.begin(), term.branch_pow.end(), 0LL);
}

long long term_valuation(const KummerCurve& curve, const Place& place, const Term& term) {
    return valuation(curve, place, term_rational(curve, term), term.t);
}

// Sum of c * w^kappa over the terms of valuation -v_max at the infinity place
// with label w; kappa is taken relative to x^D0 y^t0 with v(x^D0 y^t0) = -v_max.
Elem leading_at_infinity(const KummerCurve& curve, Elem w, long long v_max, const BasisFunction& f) {
    const Field& fld = curve.field();
    const auto& ram = curve.ram();
    const long long e_inf = ram.e_inf;
    const long long lam = ram.Lambda / ram.d_inf;
    long long t0 = 0;
    if (e_inf > 1) {
        long long inv = -1;
        for (long long u = 1; u < e_inf; ++u) {
            if (mod_pos(u * lam, e_inf) == 1) {
                inv = u;
                break;
            }
        }
        if (inv < 0) throw Error(ErrorCode::BezoutFailure, "Lambda/d_inf is not invertible mod e_inf");
        t0 = mod_pos(v_max * inv, e_inf);
    }
    Elem acc = fld.zero();
    for (const auto& term : f.terms) {
        const long long v = -term_degree(term) * e_inf - static_cast<long long>(term.t) * lam;
        if (v != -v_max) continue;
        const long long diff = term.t - t0;
        if (mod_pos(diff, e_inf) != 0) throw Error(ErrorCode::BezoutFailure, "non-integral exponent of w");
        acc = fld.add(acc, fld.mul(term.coeff, fld.pow(w, diff / e_inf)));
    }
    return acc;
}

void require_concrete(const KummerCurve& curve) {
    if (curve.is_abstract()) throw Error(ErrorCode::AbstractField, "operation needs a concrete field");
}

} // namespace

std::vector<BasisFunction> rr_basis(const KummerCurve& curve, const InvariantTuple& a, bool minus_q_inf) {
    require_concrete(curve);
    const auto& ram = curve.ram();
    const int m = curve.m();
    const auto lambdas = curve.lambdas();
    if (a.n.size() != static_cast<std::size_t>(curve.r())) {
        throw Error(ErrorCode::InvalidSpec, "tuple length differs from the number of branch points");
    }
    std::vector<BasisFunction> basis;
    for (int t = 0; t < m; ++t) {
        std::vector<int> r(static_cast<std::size_t>(curve.r()));
        long long deg = floor_div(a.n0 * ram.d_inf - static_cast<long long>(t) * ram.Lambda, m);
        for (std::size_t i = 0; i < r.size(); ++i) {
            r[i] = static_cast<int>(floor_div(a.n[i] * ram.d[i] + static_cast<long long>(t) * lambdas[i], m));
            deg += r[i];
        }
        for (long long j = 0; j <= deg; ++j) {
            Term term;
            term.x_pow = static_cast<int>(j);
            term.branch_pow.resize(r.size());
            std::transform(r.begin(), r.end(), term.branch_pow.begin(), [](int v) { return -v; });
            term.t = t;
            basis.push_back(BasisFunction{{term}});
        }
    }
    const long long ell = ell_invariant(curve, a, EllOptions{std::nullopt, true});
    if (static_cast<long long>(basis.size()) != ell) {
        throw Error(ErrorCode::DimensionMismatch, "basis size " + std::to_string(basis.size()) +
                                                      " differs from l(A) = " + std::to_string(ell));
    }
    if (!minus_q_inf) return basis;

    const Field& f = curve.field();
    std::vector<Elem> phi(basis.size());
    for (std::size_t i = 0; i < basis.size(); ++i) phi[i] = infinity_functional(curve, a, basis[i]);
    const auto pivot = std::find_if(phi.begin(), phi.end(), [](Elem e) { return e.enc != 0; });
    if (pivot == phi.end()) return basis;
    const auto p = static_cast<std::size_t>(pivot - phi.begin());
    std::vector<BasisFunction> kernel;
    kernel.reserve(basis.size() - 1);
    for (std::size_t i = 0; i < basis.size(); ++i) {
        if (i == p) continue;
        if (phi[i].enc == 0) {
            kernel.push_back(basis[i]);
            continue;
        }
        const Elem c = f.neg(f.div(phi[i], phi[p]));
        BasisFunction g = basis[i];
        for (Term term : basis[p].terms) {
            term.coeff = f.mul(term.coeff, c);
            g.terms.push_back(std::move(term));
        }
        kernel.push_back(std::move(g));
    }
    return kernel;
}

std::vector<BasisFunction> rr_basis(const KummerCurve& curve, const Divisor& d) {
    if (auto a = as_invariant(curve, d)) return rr_basis(curve, *a, false);
    Divisor shifted = d;
    shifted.add(Place::q_inf(), 1);
    if (auto a = as_invariant(curve, shifted)) return rr_basis(curve, *a, true);
    throw Error(ErrorCode::UnsupportedShape, "divisor is neither invariant nor invariant minus Q_inf");
}

Elem infinity_functional(const KummerCurve& curve, const InvariantTuple& a, const BasisFunction& candidate) {
    require_concrete(curve);
    return leading_at_infinity(curve, curve.q_inf_label(), a.n0, candidate);
}

long long valuation_lower_bound(const KummerCurve& curve, const Place& place, const BasisFunction& f) {
    if (f.terms.empty()) throw Error(ErrorCode::InvalidSpec, "zero function has no valuation");
    long long v = term_valuation(curve, place, f.terms.front());
    for (const auto& term : f.terms) v = std::min(v, term_valuation(curve, place, term));
    if (place.kind == Place::Kind::Infinity && !curve.is_abstract()) {
        const auto& labels = curve.infinity_labels();
        if (static_cast<std::size_t>(place.j) < labels.size() &&
            leading_at_infinity(curve, labels[static_cast<std::size_t>(place.j)], -v, f).enc == 0) {
            ++v;
        }
    }
    return v;
}

bool in_riemann_roch_space(const KummerCurve& curve, const BasisFunction& f, const Divisor& g) {
    std::set<Place> places;
    for (const auto& p : curve.ramified_places()) places.insert(p);
    for (const auto& [p, c] : g.terms()) places.insert(p);
    return std::all_of(places.begin(), places.end(), [&](const Place& p) {
        return valuation_lower_bound(curve, p, f) + g.at(p) >= 0;
    });
}

Elem evaluate(const KummerCurve& curve, const BasisFunction& f, const Place& place) {
    const Field& fld = curve.field();
    if (place.kind != Place::Kind::Split) {
        throw Error(ErrorCode::PoleAtEvaluationPlace, "evaluation only at split places, got " + place.label());
    }
    Elem acc = fld.zero();
    for (const auto& term : f.terms) {
        Elem v = term.coeff;
        if (term.x_pow != 0) {
            if (place.a.enc == 0 && term.x_pow < 0) {
                throw Error(ErrorCode::PoleAtEvaluationPlace, "pole of x^" + std::to_string(term.x_pow) + " at " + place.label());
            }
            v = fld.mul(v, fld.pow(place.a, term.x_pow));
        }
        for (std::size_t i = 0; i < term.branch_pow.size(); ++i) {
            const int e = term.branch_pow[i];
            if (e == 0) continue;
            const Elem diff = fld.sub(place.a, curve.alpha(static_cast<int>(i)));
            if (diff.enc == 0) throw Error(ErrorCode::PoleAtEvaluationPlace, "place lies above a branch point");
            v = fld.mul(v, fld.pow(diff, e));
        }
        if (term.t != 0) v = fld.mul(v, fld.pow(place.y, term.t));
        acc = fld.add(acc, v);
    }
    return acc;
}

Matrix eval_matrix(const KummerCurve& curve, const std::vector<BasisFunction>& basis, const std::vector<Place>& places) {
    require_concrete(curve);
    Matrix out(basis.size(), places.size());
    auto fill = [&](std::size_t lo, std::size_t hi) {
        for (std::size_t j = lo; j < hi; ++j) {
            for (std::size_t i = 0; i < basis.size(); ++i) out.at(i, j) = evaluate(curve, basis[i], places[j]);
        }
    };
    const std::size_t work = basis.size() * places.size();
    const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    if (work < 20'000 || hw == 1) {
        fill(0, places.size());
        return out;
    }
    const std::size_t chunks = std::min<std::size_t>(hw, places.size());
    std::vector<std::future<void>> jobs;
    for (std::size_t c = 0; c < chunks; ++c) {
        const std::size_t lo = places.size() * c / chunks;
        const std::size_t hi = places.size() * (c + 1) / chunks;
        jobs.push_back(std::async(std::launch::async, fill, lo, hi));
    }
    for (auto& job : jobs) job.get();
    return out;
}

LinearCode build_code(const KummerCurve& curve, const Divisor& g, const std::vector<Place>& d_places) {
    require_concrete(curve);
    std::set<Place> seen;
    for (const auto& p : d_places) {
        if (p.kind != Place::Kind::Split) {
            throw Error(ErrorCode::SupportOverlap, "evaluation place " + p.label() + " is not a split place");
        }
        if (g.at(p) != 0) throw Error(ErrorCode::SupportOverlap, "place " + p.label() + " lies in supp(G)");
        if (!seen.insert(p).second) throw Error(ErrorCode::SupportOverlap, "place " + p.label() + " repeated in D");
    }
    const long long n = static_cast<long long>(d_places.size());
    const long long deg = g.degree();
    const long long genus = curve.genus();
    if (deg <= 2 * genus - 2 || deg >= n) {
        throw Error(ErrorCode::DegreeOutOfRange, "deg G = " + std::to_string(deg) + " outside (" +
                                                     std::to_string(2 * genus - 2) + ", " + std::to_string(n) + ")");
    }
    LinearCode code;
    code.field = curve.field_ptr();
    code.n = d_places.size();
    code.k = static_cast<std::size_t>(deg - genus + 1);
    code.divisor_G = g;
    code.designed_distance = n - deg;
    code.basis = rr_basis(curve, g);
    if (code.basis.size() != code.k) {
        throw Error(ErrorCode::DimensionMismatch, "l(G) = " + std::to_string(code.basis.size()) +
                                                      ", expected " + std::to_string(code.k));
    }
    code.gen = eval_matrix(curve, code.basis, d_places);
    if (rank(curve.field(), code.gen) != code.k) {
        throw Error(ErrorCode::DimensionMismatch, "generator matrix is not of full rank");
    }
    return code;
}

bool lcp_verify(const LinearCode& c, const LinearCode& e) {
    if (c.n != e.n) throw Error(ErrorCode::LengthMismatch, "code lengths differ");
    if (!c.field || !e.field || !(*c.field == *e.field)) throw Error(ErrorCode::LengthMismatch, "codes over different fields");
    if (c.k + e.k != c.n) return false;
    Matrix stacked = c.gen;
    stacked.append_rows(e.gen);
    return rank(*c.field, std::move(stacked)) == c.n;
}

long long min_distance_exact(const LinearCode& code, unsigned long long cap) {
    const Field& f = *code.field;
    const unsigned long long q = f.q();
    unsigned long long total = 1;
    for (std::size_t i = 0; i < code.k; ++i) {
        if (total > cap / q) throw Error(ErrorCode::TooLargeToEnumerate, "q^k exceeds " + std::to_string(cap));
        total *= q;
    }
    if (code.k == 0) throw Error(ErrorCode::TooLargeToEnumerate, "zero code has no nonzero codeword");
    long long best = static_cast<long long>(code.n) + 1;
    // Scalar multiples share a weight, so fix the last nonzero message digit
    // to 1 and run an odometer over the digits below it.
    for (std::size_t top = 0; top < code.k; ++top) {
        std::vector<std::uint32_t> digits(top, 0);
        std::vector<Elem> word(code.n);
        for (std::size_t j = 0; j < code.n; ++j) word[j] = code.gen.at(top, j);
        while (true) {
            const auto w = std::count_if(word.begin(), word.end(), [](Elem e) { return e.enc != 0; });
            best = std::min<long long>(best, w);
            std::size_t i = 0;
            for (; i < top; ++i) {
                const Elem old = Elem{digits[i]};
                digits[i] = (digits[i] + 1) % static_cast<std::uint32_t>(q);
                const Elem delta = f.sub(Elem{digits[i]}, old);
                for (std::size_t j = 0; j < code.n; ++j) word[j] = f.add(word[j], f.mul(delta, code.gen.at(i, j)));
                if (digits[i] != 0) break;
            }
            if (i == top) break;
        }
    }
    return best;
}

std::pair<long long, long long> s_range(long long genus, long long n, long long m, long long phi_count) {
    const long long step = m * phi_count;
    const long long lo = std::max(1LL, floor_div(genus - 1, step) + 1);
    const long long hi = ceil_div(n - genus + 1, step) - 1;
    return {lo, hi};
}

LCPPair lcp_build_general(const KummerCurve& curve, const InvariantTuple& a, const std::vector<int>& phi_indices,
                          const std::vector<Elem>& split_pts, std::optional<long long> s) {
    require_concrete(curve);
    const auto& ram = curve.ram();
    const int m = curve.m();
    const long long genus = curve.genus();

    const auto report = criterion_check(curve, a, CriterionMode::Cond3);
    if (!report.nonspecial) throw Error(ErrorCode::NotNonSpecial, "A fails the non-special criterion");
    if (a.n0 != 0) throw Error(ErrorCode::NotNonSpecial, "A must have coefficient 0 at infinity");

    if (phi_indices.empty()) throw Error(ErrorCode::RampPreconditionViolated, "phi index set is empty");
    std::set<int> phi_set;
    for (int i : phi_indices) {
        if (i < 0 || i >= curve.r()) throw Error(ErrorCode::RampPreconditionViolated, "phi index " + std::to_string(i) + " out of range");
        if (ram.d[static_cast<std::size_t>(i)] != 1) {
            throw Error(ErrorCode::RampPreconditionViolated, "branch " + std::to_string(i) + " is not totally ramified");
        }
        if (!phi_set.insert(i).second) throw Error(ErrorCode::RampPreconditionViolated, "phi index repeated");
    }
    (void)curve.q_inf_label();

    std::vector<Elem> pts = split_pts.empty() ? split_points(curve) : split_pts;
    std::sort(pts.begin(), pts.end());
    if (std::adjacent_find(pts.begin(), pts.end()) != pts.end()) {
        throw Error(ErrorCode::RampPreconditionViolated, "split points repeated");
    }
    std::vector<Place> d_places;
    Divisor d;
    RationalX h;
    h.branch_exp.assign(static_cast<std::size_t>(curve.r()), 0);
    for (Elem pt : pts) {
        const auto st = splitting_type(curve, pt);
        if (st.kind != SplittingType::Kind::Split) {
            throw Error(ErrorCode::RampPreconditionViolated, "point " + std::to_string(pt.enc) + " does not split completely");
        }
        for (const auto& p : st.places) {
            d_places.push_back(p);
            d.add(p, 1);
        }
        h.point_exp[pt] = 1;
    }
    std::sort(d_places.begin(), d_places.end());

    const long long t = static_cast<long long>(pts.size());
    const long long n = static_cast<long long>(d_places.size());
    const long long phi_count = static_cast<long long>(phi_set.size());
    const auto [s_lo, s_hi] = s_range(genus, n, m, phi_count);
    if (s_lo > s_hi) {
        throw Error(ErrorCode::SRangeEmpty, "no integer s in (" + std::to_string(genus - 1) + ", " +
                                                std::to_string(n - genus + 1) + ") / " + std::to_string(m * phi_count));
    }
    const long long s_val = s.value_or(s_lo);
    if (s_val < s_lo || s_val > s_hi) {
        throw Error(ErrorCode::DegreeOutOfRange, "s = " + std::to_string(s_val) + " outside [" + std::to_string(s_lo) +
                                                     ", " + std::to_string(s_hi) + "]");
    }
    if (t - s_val * phi_count < 0) {
        throw Error(ErrorCode::RampPreconditionViolated, "div_inf(h) < div_inf(Phi^s)");
    }

    LCPPair out;
    out.A = a;
    out.phi_indices.assign(phi_set.begin(), phi_set.end());
    out.split_points = pts;
    out.s = s_val;
    out.s_min = s_lo;
    out.s_max = s_hi;
    out.D = d;

    Divisor q_inf;
    q_inf.add(Place::q_inf(), 1);
    const Divisor a_minus = invariant_divisor(curve, a) - q_inf;

    InvariantTuple g_tuple = a;
    g_tuple.n0 += (t - s_val * phi_count) * ram.e_inf;
    InvariantTuple h_tuple = a;
    for (int i : phi_set) h_tuple.n[static_cast<std::size_t>(i)] += s_val * ram.e[static_cast<std::size_t>(i)];
    out.G = invariant_divisor(curve, g_tuple) - q_inf;
    out.H = invariant_divisor(curve, h_tuple) - q_inf;

    RationalX phi_fn;
    phi_fn.branch_exp.assign(static_cast<std::size_t>(curve.r()), 0);
    for (int i : phi_set) phi_fn.branch_exp[static_cast<std::size_t>(i)] = 1;
    const Divisor principal = s_val * principal_divisor(curve, phi_fn, 0) - principal_divisor(curve, h, 0);
    out.gcd_identity = Divisor::min_merge(out.G, out.H) == a_minus;
    out.lmd_identity = Divisor::max_merge(out.G, out.H) - d - a_minus == principal && principal.degree() == 0;

    auto e_job = std::async(std::launch::async, [&] { return build_code(curve, out.H, d_places); });
    out.C = build_code(curve, out.G, d_places);
    out.E = e_job.get();
    out.verified = out.gcd_identity && out.lmd_identity && lcp_verify(out.C, out.E);
    return out;
}

std::string to_string(Regime r) {
    switch (r) {
    case Regime::HalfSingle: return "half_single";
    case Regime::HalfDoubleN1: return "half_double_N1";
    case Regime::HalfDoubleN2: return "half_double_N2";
    case Regime::LambdaTwo: return "lambda_two";
    }
    return "?";
}

Regime regime_from_string(const std::string& s) {
    for (Regime r : {Regime::HalfSingle, Regime::HalfDoubleN1, Regime::HalfDoubleN2, Regime::LambdaTwo}) {
        if (to_string(r) == s) return r;
    }
    throw Error(ErrorCode::InvalidSpec, "unknown regime '" + s + "'");
}

namespace {

// Number of leading lambda = 1 branches followed by exactly `tail` copies of `tail_lambda`.
bool matches_pattern(const std::vector<int>& lambdas, int tail_count, int tail_lambda) {
    const int r = static_cast<int>(lambdas.size());
    if (r <= tail_count) return false;
    for (int i = 0; i < r; ++i) {
        const int want = i < r - tail_count ? 1 : tail_lambda;
        if (lambdas[static_cast<std::size_t>(i)] != want) return false;
    }
    return true;
}

std::vector<long long> sorted_prefix(const InvariantTuple& a, int count) {
    std::vector<long long> v(a.n.begin(), a.n.begin() + count);
    std::sort(v.begin(), v.end());
    return v;
}

} // namespace

LCPPair lcp_build_regime(const KummerCurve& curve, Regime regime, const RegimeParams& params) {
    require_concrete(curve);
    const int m = curve.m();
    const int r = curve.r();
    const auto lambdas = curve.lambdas();
    const long long genus = curve.genus();
    auto violation = [&](const std::string& why) {
        return Error(ErrorCode::RegimeViolation, to_string(regime) + ": " + why);
    };

    InvariantTuple a;
    int ones = 0;
    std::vector<long long> expected_ones;  // closed-form multiset of the lambda = 1 coefficients
    long long stated_phi = 0;              // |phi| implied by the specialized s-bound
    switch (regime) {
    case Regime::HalfSingle: {
        if (m < 4 || m % 2 != 0 || !matches_pattern(lambdas, 1, m / 2)) throw violation("needs lambda = (1^(r-1), m/2), m even");
        const int lo = m / 2 - (m / 2) % 2;
        if (r < lo || r > m / 2) throw violation("needs " + std::to_string(lo) + " <= r <= " + std::to_string(m / 2));
        a = coeffs_half_single(m, r, 0);
        ones = r - 1;
        for (int i = 1; i <= ones; ++i) {
            expected_ones.push_back(2 * ceil_div(static_cast<long long>(m) * (2 * i - 1) - 2 * (r - 1), 4LL * (r - 1)) - 1);
        }
        stated_phi = r - 1;
        break;
    }
    case Regime::HalfDoubleN1: {
        if (m < 4 || m % 2 != 0 || !matches_pattern(lambdas, 2, m / 2)) throw violation("needs lambda = (1^(r-2), m/2, m/2), m even");
        if (r != m / 2 + 2) throw violation("needs r = m/2 + 2 = " + std::to_string(m / 2 + 2));
        a = coeffs_half_double(m, r, 1);
        ones = r - 2;
        expected_ones.push_back(0);
        for (int i = 1; i <= m / 2 - 1; ++i) expected_ones.push_back(2 * i - 1);
        stated_phi = m / 2 - 1;
        break;
    }
    case Regime::HalfDoubleN2: {
        if (m < 4 || m % 2 != 0 || !matches_pattern(lambdas, 2, m / 2)) throw violation("needs lambda = (1^(r-2), m/2, m/2), m even");
        if (r != m + 3) throw violation("needs r = m + 3 = " + std::to_string(m + 3));
        a = coeffs_half_double(m, r, 2);
        ones = r - 2;
        expected_ones = {0, 0, 0};
        for (int i = 1; i <= m / 2 - 1; ++i) expected_ones.insert(expected_ones.end(), {2LL * i, 2LL * i});
        stated_phi = m + 1;
        break;
    }
    case Regime::LambdaTwo: {
        if (!matches_pattern(lambdas, 1, 2)) throw violation("needs lambda = (1^(r-1), 2)");
        if (m % 2 != 0 || (r - 1) % 2 != 0) throw violation("needs m and r - 1 even");
        if (m < r + 1) throw violation("needs m >= r + 1");
        a = coeffs_lambda_two(m, r, 0, params.k);
        ones = r - 1;
        stated_phi = r - 1;
        break;
    }
    }

    std::vector<int> phi;
    for (int i = 0; i < r; ++i) {
        if (lambdas[static_cast<std::size_t>(i)] == 1 && curve.ram().d[static_cast<std::size_t>(i)] == 1) phi.push_back(i);
    }
    LCPPair out = lcp_build_general(curve, a, phi, params.split_points, params.s);

    if (!expected_ones.empty()) {
        std::sort(expected_ones.begin(), expected_ones.end());
        if (sorted_prefix(a, ones) != expected_ones) {
            throw Error(ErrorCode::FormulaMismatch, to_string(regime) + ": closed-form coefficients disagree with the generator");
        }
    }
    const long long n = static_cast<long long>(out.C.n);
    const long long step = static_cast<long long>(m) * static_cast<long long>(phi.size());
    if (out.H.degree() != out.s * step + genus - 1 || out.G.degree() != n - out.s * step + genus - 1) {
        throw Error(ErrorCode::FormulaMismatch, to_string(regime) + ": degrees of G and H disagree with the recipe");
    }
    if (stated_phi != static_cast<long long>(phi.size())) {
        const auto [lo, hi] = s_range(genus, n, m, stated_phi);
        out.notes.push_back("FormulaMismatch: specialized s-range [" + std::to_string(lo) + ", " + std::to_string(hi) +
                            "] uses " + std::to_string(stated_phi) + " ramified places; recomputed range [" +
                            std::to_string(out.s_min) + ", " + std::to_string(out.s_max) + "] with " +
                            std::to_string(phi.size()) + " is used");
    }
    return out;
}

} // namespace kummer
