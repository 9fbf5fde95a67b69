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

#include "kummer/instances.hpp"

#include <algorithm>

#include "kummer/codes.hpp"
#include "kummer/error.hpp"
#include "kummer/nonspecial.hpp"

namespace kummer {

using nlohmann::json;

DicksonPoly dickson(int d, const Field& field) {
    if (d < 0) throw Error(ErrorCode::InvalidSpec, "Dickson index must be non-negative");
    Poly prev = Poly::constant(field.from_int(2));
    Poly cur({field.zero(), field.one()});
    if (d == 0) return {0, prev};
    const Poly x = cur;
    for (int i = 1; i < d; ++i) {
        Poly next = poly_sub(field, poly_mul(field, x, cur), prev);
        prev = std::move(cur);
        cur = std::move(next);
    }
    return {d, cur};
}

std::vector<long long> dickson_integer(int d) {
    if (d < 0) throw Error(ErrorCode::InvalidSpec, "Dickson index must be non-negative");
    std::vector<long long> prev{2};
    std::vector<long long> cur{0, 1};
    if (d == 0) return prev;
    for (int i = 1; i < d; ++i) {
        std::vector<long long> next(cur.size() + 1, 0);
        for (std::size_t j = 0; j < cur.size(); ++j) next[j + 1] += cur[j];
        for (std::size_t j = 0; j < prev.size(); ++j) next[j] -= prev[j];
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

std::pair<int, int> prime_power(long long q) {
    if (q < 2) throw Error(ErrorCode::NotPrime, std::to_string(q) + " is not a prime power");
    long long p = 2;
    while (p * p <= q && q % p != 0) ++p;
    if (q % p != 0) p = q;
    int k = 0;
    long long rest = q;
    while (rest % p == 0) {
        rest /= p;
        ++k;
    }
    if (rest != 1) throw Error(ErrorCode::NotPrime, std::to_string(q) + " is not a prime power");
    return {static_cast<int>(p), k};
}

namespace {

FieldPtr square_field(long long q) {
    const auto [p, k] = prime_power(q);
    return make_field(p, 2 * k);
}

std::vector<Elem> simple_roots(const Field& f, const Poly& poly, int expected, const std::vector<Elem>& avoid) {
    const auto info = poly_analyze(f, poly);
    std::vector<Elem> roots;
    for (const auto& [root, mult] : info.roots_in_field) {
        if (mult != 1) throw Error(ErrorCode::RootCountMismatch, "repeated root " + std::to_string(root.enc));
        if (std::find(avoid.begin(), avoid.end(), root) != avoid.end()) {
            throw Error(ErrorCode::RootCountMismatch, "root " + std::to_string(root.enc) + " collides with a half branch");
        }
        roots.push_back(root);
    }
    if (static_cast<int>(roots.size()) != expected) {
        throw Error(ErrorCode::RootCountMismatch, "expected " + std::to_string(expected) + " distinct roots, found " +
                                                      std::to_string(roots.size()));
    }
    return roots;
}

} // namespace

KummerCurve dickson_curve_single(int m, long long q) {
    if (m < 4 || m % 2 != 0) throw Error(ErrorCode::InvalidSpec, "m must be even and at least 4");
    const long long modulus = static_cast<long long>(m) * (m - 2);
    if (mod_pos(q, modulus) != m - 1) {
        throw Error(ErrorCode::CongruenceViolated, "q = " + std::to_string(q) + " is not " + std::to_string(m - 1) +
                                                       " mod " + std::to_string(modulus));
    }
    auto field = square_field(q);
    if (m % field->p() == 0) throw Error(ErrorCode::CharDividesM, "characteristic divides m");
    const Elem minus_two = field->from_int(-2);
    const auto phi = dickson((m - 2) / 2, *field);
    std::vector<BranchSpec> branches;
    for (Elem root : simple_roots(*field, phi.poly, (m - 2) / 2, {minus_two})) branches.push_back({root, 1});
    branches.push_back({minus_two, m / 2});
    return KummerCurve::make(field, m, std::move(branches));
}

KummerCurve dickson_curve_double(int m, long long q) {
    if (m < 4 || m % 2 != 0) throw Error(ErrorCode::InvalidSpec, "m must be even and at least 4");
    auto field = square_field(q);
    if ((static_cast<long long>(m) * (m + 1)) % field->p() == 0) {
        throw Error(ErrorCode::CharDividesM, "characteristic divides m(m+1)");
    }
    const Elem two = field->from_int(2);
    const Elem minus_two = field->from_int(-2);
    const auto phi = dickson(m + 1, *field);
    std::vector<BranchSpec> branches;
    for (Elem root : simple_roots(*field, phi.poly, m + 1, {two, minus_two})) branches.push_back({root, 1});
    branches.push_back({two, m / 2});
    branches.push_back({minus_two, m / 2});
    return KummerCurve::make(field, m, std::move(branches));
}

const std::vector<std::string>& catalog_ids() {
    static const std::vector<std::string> ids{"ex37", "f49", "dickson_half_m8"};
    return ids;
}

namespace {

json tuple_array(const InvariantTuple& a) {
    json row = json::array({a.n0});
    for (long long v : a.n) row.push_back(v);
    return row;
}

KummerCurve f49_curve() {
    auto field = make_field(7, 2);
    const Poly quartic({field->one(), field->zero(), field->zero(), field->zero(), field->one()});
    std::vector<BranchSpec> branches;
    for (Elem root : simple_roots(*field, quartic, 4, {field->zero()})) branches.push_back({root, 1});
    branches.push_back({field->zero(), 2});
    return KummerCurve::make(field, 8, std::move(branches));
}

json code_params(const LinearCode& c) {
    return json::array({c.n, c.k, c.designed_distance});
}

} // namespace

CatalogEntry catalog(const std::string& id) {
    if (id == "ex37") {
        const std::vector<std::vector<long long>> table{
            {0, 0, 1, 3, 0, 5}, {1, 0, 1, 3, 0, 4}, {3, 0, 1, 1, 0, 4}, {0, 0, 2, 4, 1, 0}, {1, 0, 2, 3, 0, 3},
            {3, 0, 1, 2, 0, 3}, {0, 1, 1, 3, 0, 4}, {1, 0, 3, 3, 0, 2}, {3, 0, 1, 3, 0, 2}, {0, 1, 2, 3, 0, 3},
            {1, 0, 3, 4, 0, 1}, {3, 0, 1, 4, 0, 1}, {0, 1, 3, 3, 0, 2}, {1, 0, 3, 5, 0, 0}, {3, 0, 1, 5, 0, 0},
            {0, 1, 3, 4, 0, 1}, {2, 0, 0, 4, 1, 0}, {4, 0, 0, 2, 1, 0}, {0, 1, 3, 5, 0, 0}, {2, 0, 1, 3, 0, 3},
            {4, 0, 1, 3, 0, 1}, {1, 0, 0, 3, 0, 5}, {3, 0, 0, 1, 0, 5}, {5, 0, 1, 3, 0, 0}};
        json tuples = table;
        std::sort(tuples.begin(), tuples.end());
        return {id, "m = 6, lambda = (1, 1, 1, 3, 5): invariant non-special divisors of degree g",
                KummerCurve::make_abstract(6, {1, 1, 1, 3, 5}),
                json{{"genus", 9}, {"count", 24}, {"tuples", tuples}}};
    }
    if (id == "f49") {
        return {id, "y^8 = x^2 (x^4 + 1) over GF(49): LCP from lambda_two", f49_curve(),
                json{{"genus", 13},
                     {"census", 232},
                     {"maximal", true},
                     {"t", 28},
                     {"A", json::array({0, 0, 2, 3, 6, 1})},
                     {"A_nonspecial", true},
                     {"s", 2},
                     {"deg_G", 172},
                     {"deg_H", 76},
                     {"code_G", json::array({224, 160, 52})},
                     {"code_H", json::array({224, 64, 148})},
                     {"stacked_rank", 224},
                     {"verified", true}}};
    }
    if (id == "dickson_half_m8") {
        return {id, "y^8 = (x + 2)^4 phi_3(x) over GF(49): half_single for every admissible s",
                dickson_curve_single(8, 7),
                json{{"genus", 9},
                     {"phi_roots", 3},
                     {"lambdas", json::array({1, 1, 1, 4})},
                     {"A", json::array({0, 1, 3, 5, 0})},
                     {"all_s_verified", true}}};
    }
    throw Error(ErrorCode::UnknownId, "unknown catalog id '" + id + "'");
}

json observe(const CatalogEntry& entry) {
    const KummerCurve& curve = entry.curve;
    json out;
    if (entry.id == "ex37") {
        const auto found = enumerate_nonspecial(curve, EnumerateOptions{true});
        json tuples = json::array();
        for (const auto& a : found) tuples.push_back(tuple_array(canonical_form(curve, a)));
        std::sort(tuples.begin(), tuples.end());
        out = json{{"genus", curve.genus()}, {"count", found.size()}, {"tuples", tuples}};
    } else if (entry.id == "f49") {
        const auto cen = census(curve);
        const auto pair = lcp_build_regime(curve, Regime::LambdaTwo, RegimeParams{2, 1, {}});
        Matrix stacked = pair.C.gen;
        stacked.append_rows(pair.E.gen);
        out = json{{"genus", curve.genus()},
                   {"census", cen.rational_places},
                   {"maximal", cen.is_maximal},
                   {"t", pair.split_points.size()},
                   {"A", tuple_array(pair.A)},
                   {"A_nonspecial", criterion_check(curve, pair.A).nonspecial},
                   {"s", pair.s},
                   {"deg_G", pair.G.degree()},
                   {"deg_H", pair.H.degree()},
                   {"code_G", code_params(pair.C)},
                   {"code_H", code_params(pair.E)},
                   {"stacked_rank", rank(curve.field(), std::move(stacked))},
                   {"verified", pair.verified}};
    } else if (entry.id == "dickson_half_m8") {
        const auto first = lcp_build_regime(curve, Regime::HalfSingle);
        bool all = first.verified;
        for (long long s = first.s_min + 1; s <= first.s_max; ++s) {
            all = all && lcp_build_regime(curve, Regime::HalfSingle, RegimeParams{s, 1, {}}).verified;
        }
        out = json{{"genus", curve.genus()},
                   {"phi_roots", curve.r() - 1},
                   {"lambdas", curve.lambdas()},
                   {"A", tuple_array(first.A)},
                   {"all_s_verified", all}};
    } else {
        throw Error(ErrorCode::UnknownId, "unknown catalog id '" + entry.id + "'");
    }
    return out;
}

} // namespace kummer
