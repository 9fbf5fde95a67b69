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

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "kummer/curve.hpp"
#include "kummer/instances.hpp"

namespace kummer::testing {

inline KummerCurve f49_curve() { return catalog("f49").curve; }

inline std::vector<int> random_lambdas(std::mt19937& rng, int m, int r) {
    std::uniform_int_distribution<int> pick(1, m - 1);
    while (true) {
        std::vector<int> lam(static_cast<std::size_t>(r));
        for (auto& l : lam) l = pick(rng);
        int g = m;
        for (int l : lam) g = std::gcd(g, l);
        if (g == 1) return lam;
    }
}

/// Random curve over `field` with m | q - 1 and distinct branch points.
inline KummerCurve random_curve(std::mt19937& rng, const FieldPtr& field, int m, int r, bool random_lead = true) {
    std::vector<std::uint32_t> encs(field->q());
    std::iota(encs.begin(), encs.end(), 0u);
    std::shuffle(encs.begin(), encs.end(), rng);
    const auto lam = random_lambdas(rng, m, r);
    std::vector<BranchSpec> branches;
    for (int i = 0; i < r; ++i) branches.push_back({Elem{encs[static_cast<std::size_t>(i)]}, lam[static_cast<std::size_t>(i)]});
    std::uniform_int_distribution<std::uint32_t> lead(1, field->q() - 1);
    return KummerCurve::make(field, m, branches, random_lead ? Elem{lead(rng)} : field->one());
}

} // namespace kummer::testing
