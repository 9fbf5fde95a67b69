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
#include <vector>

#include <json.hpp>

#include "kummer/curve.hpp"
#include "kummer/ffield.hpp"

namespace kummer {

/// Dickson polynomial of the first kind: phi_0 = 2, phi_1 = x,
/// phi_{d+1} = x phi_d - phi_{d-1}.
struct DicksonPoly {
    int d = 0;
    Poly poly;
};

DicksonPoly dickson(int d, const Field& field);
/// Integer coefficients, constant term first.
std::vector<long long> dickson_integer(int d);

/// q as p^k; throws NotPrime when q is not a prime power.
std::pair<int, int> prime_power(long long q);

/// y^m = (x + 2)^(m/2) phi_{(m-2)/2}(x) over GF(q^2), for m even and
/// q = m - 1 mod m(m - 2). Branches: the roots of phi_{(m-2)/2} by encoding,
/// then -2 with lambda = m/2.
KummerCurve dickson_curve_single(int m, long long q);
/// y^m = (x^2 - 4)^(m/2) phi_{m+1}(x) over GF(q^2). Branches: the roots of
/// phi_{m+1}, then 2 and -2 with lambda = m/2.
KummerCurve dickson_curve_double(int m, long long q);

struct CatalogEntry {
    std::string id;
    std::string title;
    KummerCurve curve;
    nlohmann::json expected;
};

const std::vector<std::string>& catalog_ids();
/// Throws UnknownId.
CatalogEntry catalog(const std::string& id);
/// Recomputes every key of `expected` through the library.
nlohmann::json observe(const CatalogEntry& entry);

} // namespace kummer
