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

#include "kummer/curve.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

#include "kummer/error.hpp"

namespace kummer {

std::string Place::label() const {
    switch (kind) {
    case Kind::Branch: return "P[" + std::to_string(index) + "," + std::to_string(j) + "]";
    case Kind::Infinity: return "Pinf[" + std::to_string(j) + "]";
    case Kind::Split: return "S[" + std::to_string(a.enc) + "," + std::to_string(y.enc) + "]";
    }
    return "?";
}

long long Divisor::at(const Place& p) const {
    const auto it = terms_.find(p);
    return it == terms_.end() ? 0 : it->second;
}

void Divisor::add(const Place& p, long long c) {
    if (c == 0) return;
    const long long v = (terms_[p] += c);
    if (v == 0) terms_.erase(p);
}

void Divisor::set(const Place& p, long long c) {
    if (c == 0) {
        terms_.erase(p);
    } else {
        terms_[p] = c;
    }
}

long long Divisor::degree() const {
    long long s = 0;
    for (const auto& [p, c] : terms_) s += c;
    return s;
}

bool Divisor::is_effective() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const auto& kv) { return kv.second >= 0; });
}

Divisor& Divisor::operator+=(const Divisor& other) {
    for (const auto& [p, c] : other.terms_) add(p, c);
    return *this;
}

Divisor& Divisor::operator-=(const Divisor& other) {
    for (const auto& [p, c] : other.terms_) add(p, -c);
    return *this;
}

Divisor operator*(long long c, const Divisor& d) {
    Divisor out;
    for (const auto& [p, v] : d.terms()) out.add(p, c * v);
    return out;
}

Divisor Divisor::min_merge(const Divisor& a, const Divisor& b) {
    Divisor out;
    std::set<Place> support;
    for (const auto& [p, c] : a.terms_) support.insert(p);
    for (const auto& [p, c] : b.terms_) support.insert(p);
    for (const auto& p : support) out.set(p, std::min(a.at(p), b.at(p)));
    return out;
}

Divisor Divisor::max_merge(const Divisor& a, const Divisor& b) {
    Divisor out;
    std::set<Place> support;
    for (const auto& [p, c] : a.terms_) support.insert(p);
    for (const auto& [p, c] : b.terms_) support.insert(p);
    for (const auto& p : support) out.set(p, std::max(a.at(p), b.at(p)));
    return out;
}

long long RationalX::degree() const {
    long long s = 0;
    for (int e : branch_exp) s += e;
    for (const auto& [a, e] : point_exp) s += e;
    return s;
}

Ramification ramification(int m, const std::vector<int>& lambdas) {
    Ramification ram;
    const int r = static_cast<int>(lambdas.size());
    long long defect = 0;
    for (int lam : lambdas) {
        const int d = std::gcd(m, lam);
        ram.d.push_back(d);
        ram.e.push_back(m / d);
        ram.Lambda += lam;
        defect += d - 1;
    }
    ram.d_inf = std::gcd(m, ram.Lambda);
    ram.e_inf = m / ram.d_inf;
    const long long twice = static_cast<long long>(m - 1) * (r - 1) - defect - (ram.d_inf - 1);
    if (twice % 2 != 0 || twice < 0) {
        throw Error(ErrorCode::InvalidSpec, "genus numerator " + std::to_string(twice) + " is not a non-negative even integer");
    }
    ram.genus = static_cast<int>(twice / 2);
    return ram;
}

namespace {

void validate_lambdas(int m, const std::vector<int>& lambdas) {
    if (m < 2) throw Error(ErrorCode::InvalidSpec, "extension degree m must be >= 2");
    if (lambdas.empty()) throw Error(ErrorCode::InvalidSpec, "at least one branch point is required");
    int g = m;
    for (int lam : lambdas) {
        if (lam < 1 || lam >= m) {
            throw Error(ErrorCode::InvalidSpec, "lambda " + std::to_string(lam) + " outside [1, m)");
        }
        g = std::gcd(g, lam);
    }
    if (g != 1) throw Error(ErrorCode::GcdViolation, "gcd(m, lambda_1, ..., lambda_r) = " + std::to_string(g));
}

} // namespace

KummerCurve KummerCurve::make(FieldPtr field, int m, std::vector<BranchSpec> branches, Elem lead) {
    if (!field) throw Error(ErrorCode::AbstractField, "a concrete curve needs a field");
    std::vector<int> lambdas;
    for (const auto& b : branches) lambdas.push_back(b.lambda);
    validate_lambdas(m, lambdas);
    if (m % field->p() == 0) {
        throw Error(ErrorCode::CharDividesM, "characteristic " + std::to_string(field->p()) + " divides m = " + std::to_string(m));
    }
    if (lead.enc == 0 || lead.enc >= field->q()) throw Error(ErrorCode::InvalidSpec, "leading coefficient must be a nonzero field element");
    std::set<Elem> seen;
    for (const auto& b : branches) {
        if (!b.alpha) throw Error(ErrorCode::InvalidSpec, "concrete branch without alpha");
        field->element(b.alpha->enc);
        if (!seen.insert(*b.alpha).second) {
            throw Error(ErrorCode::DuplicateBranch, "alpha " + std::to_string(b.alpha->enc) + " repeated");
        }
    }

    KummerCurve c;
    c.field_ = std::move(field);
    c.m_ = m;
    c.branches_ = std::move(branches);
    c.lead_ = lead;
    c.ram_ = ramification(m, lambdas);

    const Field& f = *c.field_;
    for (int i = 0; i < c.r(); ++i) {
        // w_i^{d_i} = a prod_{k != i} (alpha_i - alpha_k)^{lambda_k} at x = alpha_i
        Elem ci = lead;
        for (int k = 0; k < c.r(); ++k) {
            if (k == i) continue;
            ci = f.mul(ci, f.pow(f.sub(*c.branches_[i].alpha, *c.branches_[k].alpha), c.branches_[k].lambda));
        }
        c.branch_labels_.push_back(nth_roots(f, ci, static_cast<unsigned>(c.ram_.d[i])));
    }
    c.infinity_labels_ = nth_roots(f, lead, static_cast<unsigned>(c.ram_.d_inf));
    return c;
}

KummerCurve KummerCurve::make(FieldPtr field, int m, std::vector<BranchSpec> branches) {
    return make(std::move(field), m, std::move(branches), Elem{1});
}

KummerCurve KummerCurve::make_abstract(int m, std::vector<int> lambdas) {
    validate_lambdas(m, lambdas);
    KummerCurve c;
    c.m_ = m;
    for (int lam : lambdas) c.branches_.push_back(BranchSpec{std::nullopt, lam});
    c.ram_ = ramification(m, lambdas);
    c.branch_labels_.resize(lambdas.size());
    return c;
}

const Field& KummerCurve::field() const {
    if (!field_) throw Error(ErrorCode::AbstractField, "operation needs a concrete field");
    return *field_;
}

std::vector<int> KummerCurve::lambdas() const {
    std::vector<int> out;
    out.reserve(branches_.size());
    for (const auto& b : branches_) out.push_back(b.lambda);
    return out;
}

Elem KummerCurve::alpha(int i) const {
    const auto& b = branches_.at(static_cast<std::size_t>(i));
    if (!b.alpha) throw Error(ErrorCode::AbstractField, "abstract branch has no alpha");
    return *b.alpha;
}

Elem KummerCurve::f_at(Elem x) const {
    const Field& f = field();
    Elem v = lead_;
    for (const auto& b : branches_) v = f.mul(v, f.pow(f.sub(x, *b.alpha), b.lambda));
    return v;
}

Poly KummerCurve::defining_poly() const {
    const Field& f = field();
    Poly acc = Poly::constant(lead_);
    for (const auto& b : branches_) {
        const Poly lin = Poly::linear(f, *b.alpha);
        for (int k = 0; k < b.lambda; ++k) acc = poly_mul(f, acc, lin);
    }
    return acc;
}

std::optional<int> KummerCurve::branch_index(Elem x) const {
    for (int i = 0; i < r(); ++i) {
        if (branches_[static_cast<std::size_t>(i)].alpha == x) return i;
    }
    return std::nullopt;
}

Elem KummerCurve::q_inf_label() const {
    if (infinity_labels_.empty()) {
        throw Error(ErrorCode::NoRationalInfinity, "no rational place above infinity (leading coefficient is not a d_inf-th power)");
    }
    return infinity_labels_.front();
}

std::vector<Place> KummerCurve::ramified_places() const {
    std::vector<Place> out;
    for (int i = 0; i < r(); ++i) {
        for (int j = 0; j < ram_.d[static_cast<std::size_t>(i)]; ++j) out.push_back(Place::branch(i, j));
    }
    for (int j = 0; j < ram_.d_inf; ++j) out.push_back(Place::infinity(j));
    return out;
}

namespace {

void check_place(const KummerCurve& curve, const Place& place) {
    const auto& ram = curve.ram();
    switch (place.kind) {
    case Place::Kind::Branch:
        if (place.index < 0 || place.index >= curve.r() || place.j < 0 ||
            place.j >= ram.d[static_cast<std::size_t>(place.index)]) {
            throw Error(ErrorCode::InvalidPlace, place.label());
        }
        return;
    case Place::Kind::Infinity:
        if (place.j < 0 || place.j >= ram.d_inf) throw Error(ErrorCode::InvalidPlace, place.label());
        return;
    case Place::Kind::Split: {
        if (curve.is_abstract()) throw Error(ErrorCode::InvalidPlace, "split places need a concrete field");
        const Field& f = curve.field();
        if (place.a.enc >= f.q() || place.y.enc >= f.q()) throw Error(ErrorCode::InvalidPlace, place.label());
        const Elem fa = curve.f_at(place.a);
        if (fa.enc == 0 || f.pow(place.y, curve.m()) != fa) throw Error(ErrorCode::InvalidPlace, place.label());
        return;
    }
    }
}

bool alpha_is_zero(const KummerCurve& curve, int i) {
    const auto& b = curve.branches()[static_cast<std::size_t>(i)];
    return b.alpha && b.alpha->enc == 0;
}

} // namespace

long long monomial_valuation(const KummerCurve& curve, const Place& place, long long ex, long long ey) {
    check_place(curve, place);
    const auto& ram = curve.ram();
    switch (place.kind) {
    case Place::Kind::Branch: {
        const auto i = static_cast<std::size_t>(place.index);
        const long long vx = alpha_is_zero(curve, place.index) ? ram.e[i] : 0;
        return ex * vx + ey * (curve.branches()[i].lambda / ram.d[i]);
    }
    case Place::Kind::Infinity:
        return -ex * ram.e_inf - ey * (ram.Lambda / ram.d_inf);
    case Place::Kind::Split:
        return place.a.enc == 0 ? ex : 0;
    }
    return 0;
}

long long valuation(const KummerCurve& curve, const Place& place, const RationalX& b, long long t) {
    check_place(curve, place);
    const auto& ram = curve.ram();
    switch (place.kind) {
    case Place::Kind::Branch: {
        const auto i = static_cast<std::size_t>(place.index);
        const long long be = i < b.branch_exp.size() ? b.branch_exp[i] : 0;
        return be * ram.e[i] + t * (curve.branches()[i].lambda / ram.d[i]);
    }
    case Place::Kind::Infinity:
        return -b.degree() * ram.e_inf - t * (ram.Lambda / ram.d_inf);
    case Place::Kind::Split: {
        const auto it = b.point_exp.find(place.a);
        return it == b.point_exp.end() ? 0 : it->second;
    }
    }
    return 0;
}

Divisor principal_divisor(const KummerCurve& curve, const RationalX& b, long long t) {
    Divisor out;
    for (const auto& p : curve.ramified_places()) out.add(p, valuation(curve, p, b, t));
    for (const auto& [a, e] : b.point_exp) {
        if (e == 0) continue;
        if (curve.is_abstract()) throw Error(ErrorCode::UnsupportedRoot, "abstract curves have no field points");
        if (curve.branch_index(a)) {
            throw Error(ErrorCode::UnsupportedRoot, "branch point " + std::to_string(a.enc) + " listed as a plain point");
        }
        const auto st = splitting_type(curve, a);
        if (st.kind != SplittingType::Kind::Split) {
            throw Error(ErrorCode::UnsupportedRoot, "root " + std::to_string(a.enc) + " is not a completely split point");
        }
        for (const auto& p : st.places) out.add(p, e);
    }
    return out;
}

RationalX to_rational_x(const KummerCurve& curve, const Poly& num, const Poly& den) {
    const Field& f = curve.field();
    RationalX out;
    out.branch_exp.assign(static_cast<std::size_t>(curve.r()), 0);
    out.lead = f.div(num.leading(), den.leading());
    auto absorb = [&](const Poly& poly, int sign) {
        const auto info = poly_analyze(f, poly);
        int total = 0;
        for (const auto& [root, mult] : info.roots_in_field) {
            total += mult;
            if (auto i = curve.branch_index(root)) {
                out.branch_exp[static_cast<std::size_t>(*i)] += sign * mult;
            } else {
                out.point_exp[root] += sign * mult;
            }
        }
        if (total != poly.degree()) {
            throw Error(ErrorCode::UnsupportedRoot, "polynomial does not split into linear factors over the field");
        }
    };
    absorb(num, 1);
    absorb(den, -1);
    for (auto it = out.point_exp.begin(); it != out.point_exp.end();) {
        it = it->second == 0 ? out.point_exp.erase(it) : std::next(it);
    }
    return out;
}

Divisor principal_divisor(const KummerCurve& curve, const Poly& num, const Poly& den, long long t) {
    return principal_divisor(curve, to_rational_x(curve, num, den), t);
}

Divisor div_inf_x(const KummerCurve& curve) {
    Divisor out;
    for (int j = 0; j < curve.ram().d_inf; ++j) out.add(Place::infinity(j), curve.ram().e_inf);
    return out;
}

Divisor div0_branch(const KummerCurve& curve, int i) {
    Divisor out;
    const auto idx = static_cast<std::size_t>(i);
    for (int j = 0; j < curve.ram().d.at(idx); ++j) out.add(Place::branch(i, j), curve.ram().e[idx]);
    return out;
}

Divisor invariant_divisor(const KummerCurve& curve, const InvariantTuple& a) {
    if (static_cast<int>(a.n.size()) != curve.r()) {
        throw Error(ErrorCode::InvalidSpec, "tuple has " + std::to_string(a.n.size()) + " branch coefficients, curve has " +
                                                std::to_string(curve.r()));
    }
    Divisor out;
    for (int j = 0; j < curve.ram().d_inf; ++j) out.add(Place::infinity(j), a.n0);
    for (int i = 0; i < curve.r(); ++i) {
        for (int j = 0; j < curve.ram().d[static_cast<std::size_t>(i)]; ++j) {
            out.add(Place::branch(i, j), a.n[static_cast<std::size_t>(i)]);
        }
    }
    return out;
}

std::optional<InvariantTuple> as_invariant(const KummerCurve& curve, const Divisor& d) {
    for (const auto& [p, c] : d.terms()) {
        if (p.kind == Place::Kind::Split) return std::nullopt;
    }
    InvariantTuple out;
    out.n0 = d.at(Place::infinity(0));
    for (int j = 1; j < curve.ram().d_inf; ++j) {
        if (d.at(Place::infinity(j)) != out.n0) return std::nullopt;
    }
    for (int i = 0; i < curve.r(); ++i) {
        const long long c = d.at(Place::branch(i, 0));
        for (int j = 1; j < curve.ram().d[static_cast<std::size_t>(i)]; ++j) {
            if (d.at(Place::branch(i, j)) != c) return std::nullopt;
        }
        out.n.push_back(c);
    }
    if (invariant_divisor(curve, out) != d) return std::nullopt;
    return out;
}

long long invariant_degree(const KummerCurve& curve, const InvariantTuple& a) {
    long long deg = a.n0 * curve.ram().d_inf;
    for (std::size_t i = 0; i < a.n.size(); ++i) deg += a.n[i] * curve.ram().d.at(i);
    return deg;
}

long long BaseDivisor::at(const BasePlace& p) const {
    const auto it = coeff.find(p);
    return it == coeff.end() ? 0 : it->second;
}

long long BaseDivisor::degree() const {
    long long s = 0;
    for (const auto& [p, c] : coeff) s += c;
    return s;
}

BaseDivisor restrict_divisor(const KummerCurve& curve, const Divisor& d) {
    const auto& ram = curve.ram();
    std::set<BasePlace> bases;
    std::map<Elem, int> split_count;
    for (const auto& [p, c] : d.terms()) {
        check_place(curve, p);
        switch (p.kind) {
        case Place::Kind::Branch: bases.insert(BasePlace{BasePlace::Kind::Branch, p.index, {}}); break;
        case Place::Kind::Infinity: bases.insert(BasePlace{BasePlace::Kind::Infinity, 0, {}}); break;
        case Place::Kind::Split:
            bases.insert(BasePlace{BasePlace::Kind::Point, 0, p.a});
            ++split_count[p.a];
            break;
        }
    }
    BaseDivisor out;
    for (const auto& q : bases) {
        long long best = 0;
        switch (q.kind) {
        case BasePlace::Kind::Branch: {
            const auto i = static_cast<std::size_t>(q.index);
            best = floor_div(d.at(Place::branch(q.index, 0)), ram.e[i]);
            for (int j = 1; j < ram.d[i]; ++j) best = std::min(best, floor_div(d.at(Place::branch(q.index, j)), ram.e[i]));
            break;
        }
        case BasePlace::Kind::Infinity:
            best = floor_div(d.at(Place::infinity(0)), ram.e_inf);
            for (int j = 1; j < ram.d_inf; ++j) best = std::min(best, floor_div(d.at(Place::infinity(j)), ram.e_inf));
            break;
        case BasePlace::Kind::Point: {
            bool first = true;
            for (const auto& [p, c] : d.terms()) {
                if (p.kind != Place::Kind::Split || p.a != q.a) continue;
                best = first ? c : std::min(best, c);
                first = false;
            }
            // places above q.a missing from the support carry coefficient 0
            if (split_count[q.a] < curve.m()) best = std::min(best, 0LL);
            break;
        }
        }
        if (best != 0) out.coeff[q] = best;
    }
    return out;
}

long long restricted_degree(const KummerCurve& curve, const InvariantTuple& a, int t) {
    const auto& ram = curve.ram();
    const long long m = curve.m();
    long long deg = floor_div(a.n0 * ram.d_inf - static_cast<long long>(t) * ram.Lambda, m);
    for (int i = 0; i < curve.r(); ++i) {
        const auto idx = static_cast<std::size_t>(i);
        deg += floor_div(a.n[idx] * ram.d[idx] + static_cast<long long>(t) * curve.branches()[idx].lambda, m);
    }
    return deg;
}

long long ell_invariant(const KummerCurve& curve, const InvariantTuple& a, const EllOptions& opts) {
    if (static_cast<int>(a.n.size()) != curve.r()) {
        throw Error(ErrorCode::InvalidSpec, "tuple length does not match the number of branches");
    }
    if (!opts.allow_negative) {
        if (a.n0 < 0 || std::any_of(a.n.begin(), a.n.end(), [](long long v) { return v < 0; })) {
            throw Error(ErrorCode::NegativeCoefficient, "ell_invariant expects an effective tuple");
        }
    }
    if (opts.shift_t) {
        if (*opts.shift_t < 0 || *opts.shift_t >= curve.m()) throw Error(ErrorCode::InvalidSpec, "shift t outside [0, m)");
        return ell_rational(restricted_degree(curve, a, *opts.shift_t));
    }
    long long total = 0;
    for (int t = 0; t < curve.m(); ++t) total += ell_rational(restricted_degree(curve, a, t));
    return total;
}

SplittingType splitting_type(const KummerCurve& curve, Elem a) {
    const Field& f = curve.field();
    if ((f.q() - 1) % static_cast<std::uint32_t>(curve.m()) != 0) {
        throw Error(ErrorCode::NoRootsOfUnity, "m = " + std::to_string(curve.m()) + " does not divide q - 1");
    }
    SplittingType out;
    if (auto i = curve.branch_index(a)) {
        out.kind = SplittingType::Kind::Branch;
        for (int j = 0; j < curve.ram().d[static_cast<std::size_t>(*i)]; ++j) out.places.push_back(Place::branch(*i, j));
        return out;
    }
    const Elem fa = curve.f_at(a);
    if (f.pow(fa, (f.q() - 1) / static_cast<std::uint32_t>(curve.m())) == f.one()) {
        out.kind = SplittingType::Kind::Split;
        for (Elem y : nth_roots(f, fa, static_cast<unsigned>(curve.m()))) out.places.push_back(Place::split(a, y));
        return out;
    }
    out.kind = SplittingType::Kind::InertOrPartial;
    return out;
}

std::vector<Elem> split_points(const KummerCurve& curve) {
    const Field& f = curve.field();
    std::vector<Elem> out;
    for (std::uint32_t e = 0; e < f.q(); ++e) {
        if (splitting_type(curve, Elem{e}).kind == SplittingType::Kind::Split) out.push_back(Elem{e});
    }
    return out;
}

Census census(const KummerCurve& curve) {
    const Field& f = curve.field();
    Census out;
    for (std::uint32_t e = 0; e < f.q(); ++e) {
        const Elem a{e};
        if (curve.branch_index(a)) continue;
        out.split_places += static_cast<long long>(nth_roots(f, curve.f_at(a), static_cast<unsigned>(curve.m())).size());
    }
    for (int i = 0; i < curve.r(); ++i) out.branch_places += static_cast<long long>(curve.branch_labels(i).size());
    out.infinite_places = static_cast<long long>(curve.infinity_labels().size());
    out.rational_places = out.split_places + out.branch_places + out.infinite_places;

    const double q = f.q();
    out.hasse_weil_bound = q + 1 + 2.0 * curve.genus() * std::sqrt(q);
    const auto root = static_cast<long long>(std::llround(std::sqrt(q)));
    if (root * root == static_cast<long long>(f.q())) {
        out.is_maximal = out.rational_places == static_cast<long long>(f.q()) + 1 + 2LL * curve.genus() * root;
    }
    return out;
}

} // namespace kummer
