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

#include "kummer/serialize.hpp"

#include <sstream>

#include "kummer/error.hpp"

namespace kummer {

using nlohmann::json;

void to_json(json& j, const Elem& e) { j = e.enc; }
void from_json(const json& j, Elem& e) { e.enc = j.get<std::uint32_t>(); }

void to_json(json& j, const InvariantTuple& a) { j = json{{"n0", a.n0}, {"n", a.n}}; }
void from_json(const json& j, InvariantTuple& a) {
    a.n0 = j.at("n0").get<long long>();
    a.n = j.at("n").get<std::vector<long long>>();
}

namespace {

const char* kind_name(Place::Kind k) {
    switch (k) {
    case Place::Kind::Branch: return "branch";
    case Place::Kind::Infinity: return "infinity";
    case Place::Kind::Split: return "split";
    }
    return "?";
}

} // namespace

void to_json(json& j, const Place& p) {
    j = json{{"kind", kind_name(p.kind)}};
    switch (p.kind) {
    case Place::Kind::Branch:
        j["index"] = p.index;
        j["j"] = p.j;
        break;
    case Place::Kind::Infinity:
        j["j"] = p.j;
        break;
    case Place::Kind::Split:
        j["a"] = p.a;
        j["y"] = p.y;
        break;
    }
}

void from_json(const json& j, Place& p) {
    const auto kind = j.at("kind").get<std::string>();
    if (kind == "branch") {
        p = Place::branch(j.at("index").get<int>(), j.at("j").get<int>());
    } else if (kind == "infinity") {
        p = Place::infinity(j.at("j").get<int>());
    } else if (kind == "split") {
        p = Place::split(j.at("a").get<Elem>(), j.at("y").get<Elem>());
    } else {
        throw Error(ErrorCode::InvalidPlace, "unknown place kind '" + kind + "'");
    }
}

void to_json(json& j, const Divisor& d) {
    j = json::array();
    for (const auto& [p, c] : d.terms()) j.push_back(json{{"place", p}, {"coeff", c}});
}

void from_json(const json& j, Divisor& d) {
    d = Divisor{};
    for (const auto& row : j) d.add(row.at("place").get<Place>(), row.at("coeff").get<long long>());
}

std::string mode_name(CriterionMode mode) { return mode == CriterionMode::Cond2 ? "cond2" : "cond3"; }

CriterionMode mode_from_string(const std::string& s) {
    if (s == "cond2") return CriterionMode::Cond2;
    if (s == "cond3") return CriterionMode::Cond3;
    throw Error(ErrorCode::InvalidSpec, "unknown criterion mode '" + s + "'");
}

void to_json(json& j, const CriterionReport& r) {
    json rows = json::object();
    for (const auto& row : r.rows) {
        rows[std::to_string(row.j)] = json{{"bound", row.bound}, {"count", row.count}, {"pass", row.pass}};
    }
    j = json{{"mode", mode_name(r.mode)}, {"verdict", r.verdict()}, {"degree", r.degree}, {"genus", r.genus},
             {"bounds_ok", r.bounds_ok}, {"rows", rows}};
}

void from_json(const json& j, CriterionReport& r) {
    r.mode = mode_from_string(j.at("mode").get<std::string>());
    r.degree = j.at("degree").get<long long>();
    r.genus = j.at("genus").get<long long>();
    r.bounds_ok = j.at("bounds_ok").get<bool>();
    r.nonspecial = j.at("verdict").get<std::string>() == "nonspecial_deg_g";
    r.rows.clear();
    for (const auto& [key, row] : j.at("rows").items()) {
        r.rows.push_back(CriterionRow{std::stoi(key), row.at("bound").get<long long>(), row.at("count").get<long long>(),
                                      row.at("pass").get<bool>()});
    }
    std::sort(r.rows.begin(), r.rows.end(), [](const CriterionRow& a, const CriterionRow& b) { return a.j < b.j; });
}

void to_json(json& j, const Census& c) {
    j = json{{"rational_places", c.rational_places}, {"split_places", c.split_places},
             {"branch_places", c.branch_places},     {"infinite_places", c.infinite_places},
             {"hasse_weil_bound", c.hasse_weil_bound}, {"is_maximal", c.is_maximal}};
}

json field_to_json(const Field& f) { return json{{"p", f.p()}, {"k", f.k()}, {"modulus", f.modulus()}}; }

FieldPtr field_from_json(const json& j) {
    auto f = make_field(j.at("p").get<int>(), j.value("k", 1));
    if (j.contains("modulus") && j.at("modulus").get<std::vector<int>>() != f->modulus()) {
        throw Error(ErrorCode::InvalidSpec, "modulus differs from the canonical one");
    }
    return f;
}

json curve_to_json(const KummerCurve& curve) {
    if (curve.is_abstract()) return json{{"abstract", true}, {"m", curve.m()}, {"lambdas", curve.lambdas()}};
    json branches = json::array();
    for (const auto& b : curve.branches()) branches.push_back(json{{"alpha", *b.alpha}, {"lambda", b.lambda}});
    return json{{"field", field_to_json(curve.field())}, {"m", curve.m()}, {"a", curve.lead()}, {"branches", branches}};
}

KummerCurve curve_from_json(const json& j) {
    try {
        const int m = j.at("m").get<int>();
        if (j.value("abstract", false)) return KummerCurve::make_abstract(m, j.at("lambdas").get<std::vector<int>>());
        auto field = field_from_json(j.at("field"));
        std::vector<BranchSpec> branches;
        for (const auto& b : j.at("branches")) {
            branches.push_back(BranchSpec{field->element(b.at("alpha").get<std::uint32_t>()), b.at("lambda").get<int>()});
        }
        const Elem lead = field->element(j.value("a", 1u));
        return KummerCurve::make(field, m, std::move(branches), lead);
    } catch (const json::exception& e) {
        throw Error(ErrorCode::InvalidSpec, std::string("malformed curve spec: ") + e.what());
    }
}

json matrix_to_json(const Field& f, const Matrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m.at(i, c).enc);
        rows.push_back(std::move(row));
    }
    return json{{"n", m.cols()}, {"k", m.rows()}, {"field", json{{"p", f.p()}, {"k", f.k()}}}, {"rows", rows}};
}

Matrix matrix_from_json(const json& j) {
    const auto n = j.at("n").get<std::size_t>();
    const auto k = j.at("k").get<std::size_t>();
    const auto& rows = j.at("rows");
    if (rows.size() != k) throw Error(ErrorCode::DimensionMismatch, "row count differs from k");
    Matrix out(k, n);
    for (std::size_t i = 0; i < k; ++i) {
        if (rows[i].size() != n) throw Error(ErrorCode::DimensionMismatch, "row length differs from n");
        for (std::size_t c = 0; c < n; ++c) out.at(i, c) = rows[i][c].get<Elem>();
    }
    return out;
}

std::string matrix_to_csv(const Matrix& m) {
    std::ostringstream out;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t c = 0; c < m.cols(); ++c) out << (c ? "," : "") << m.at(i, c).enc;
        out << '\n';
    }
    return out.str();
}

json code_params(const LinearCode& c) {
    return json{{"n", c.n}, {"k", c.k}, {"designed_distance", c.designed_distance}, {"deg_G", c.divisor_G.degree()}};
}

json lcp_to_json(const KummerCurve& curve, const LCPPair& pair) {
    return json{{"params_G", code_params(pair.C)},
                {"params_H", code_params(pair.E)},
                {"s", pair.s},
                {"s_range", json::array({pair.s_min, pair.s_max})},
                {"verified", pair.verified},
                {"designed_distances", json::array({pair.C.designed_distance, pair.E.designed_distance})},
                {"A", pair.A},
                {"phi_indices", pair.phi_indices},
                {"t", pair.split_points.size()},
                {"genus", curve.genus()},
                {"gcd_identity", pair.gcd_identity},
                {"lmd_identity", pair.lmd_identity},
                {"notes", pair.notes}};
}

} // namespace kummer
