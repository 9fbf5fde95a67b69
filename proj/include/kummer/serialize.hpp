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

#include <string>

#include <json.hpp>

#include "kummer/codes.hpp"
#include "kummer/curve.hpp"
#include "kummer/nonspecial.hpp"

namespace kummer {

void to_json(nlohmann::json& j, const Elem& e);
void from_json(const nlohmann::json& j, Elem& e);
void to_json(nlohmann::json& j, const InvariantTuple& a);
void from_json(const nlohmann::json& j, InvariantTuple& a);
void to_json(nlohmann::json& j, const Place& p);
void from_json(const nlohmann::json& j, Place& p);
void to_json(nlohmann::json& j, const Divisor& d);
void from_json(const nlohmann::json& j, Divisor& d);
void to_json(nlohmann::json& j, const CriterionReport& r);
void from_json(const nlohmann::json& j, CriterionReport& r);
void to_json(nlohmann::json& j, const Census& c);

/// {"p", "k", "modulus"}; reading needs only p and k.
nlohmann::json field_to_json(const Field& f);
FieldPtr field_from_json(const nlohmann::json& j);

/// {"field": {...}, "m", "a", "branches": [{"alpha", "lambda"}]} or
/// {"abstract": true, "m", "lambdas"}.
nlohmann::json curve_to_json(const KummerCurve& curve);
KummerCurve curve_from_json(const nlohmann::json& j);

/// {"n", "k", "field": {"p", "k"}, "rows": [[enc, ...], ...]}
nlohmann::json matrix_to_json(const Field& f, const Matrix& m);
Matrix matrix_from_json(const nlohmann::json& j);
/// One line per row, comma-separated encodings.
std::string matrix_to_csv(const Matrix& m);

nlohmann::json code_params(const LinearCode& c);
nlohmann::json lcp_to_json(const KummerCurve& curve, const LCPPair& pair);

std::string mode_name(CriterionMode mode);
CriterionMode mode_from_string(const std::string& s);

} // namespace kummer
