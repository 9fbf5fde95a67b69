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

#include <cmath>

#include "fixtures.hpp"
#include "kummer/curve.hpp"
#include "kummer/nonspecial.hpp"
#include "test_util.hpp"

using namespace kummer;
using kummer::testing::f49_curve;
using kummer::testing::random_curve;

namespace {

// Rational places counted by scanning all pairs and all labels; no use of nth_roots.
long long brute_census(const KummerCurve& c) {
    const Field& f = c.field();
    auto count_powers = [&](Elem target, long long n) {
        long long k = 0;
        for (std::uint32_t w = 0; w < f.q(); ++w) k += f.pow(Elem{w}, n) == target;
        return k;
    };
    long long n = 0;
    for (std::uint32_t x = 0; x < f.q(); ++x) {
        Elem fx = c.lead();
        for (int i = 0; i < c.r(); ++i) {
            fx = f.mul(fx, f.pow(f.sub(Elem{x}, c.alpha(i)), c.branches()[static_cast<std::size_t>(i)].lambda));
        }
        if (fx.enc == 0) continue;
        n += count_powers(fx, c.m());
    }
    for (int i = 0; i < c.r(); ++i) {
        Elem ci = c.lead();
        for (int k = 0; k < c.r(); ++k) {
            if (k == i) continue;
            ci = f.mul(ci, f.pow(f.sub(c.alpha(i), c.alpha(k)), c.branches()[static_cast<std::size_t>(k)].lambda));
        }
        n += count_powers(ci, c.ram().d[static_cast<std::size_t>(i)]);
    }
    return n + count_powers(c.lead(), c.ram().d_inf);
}

} // namespace

TEST(Curve, GenusValues) {
    EXPECT_EQ(f49_curve().genus(), 13);
    EXPECT_EQ(KummerCurve::make_abstract(6, {1, 1, 1, 3, 5}).genus(), 9);
    EXPECT_EQ(KummerCurve::make_abstract(2, {1, 1, 1, 1, 1}).genus(), 2);
    EXPECT_EQ(KummerCurve::make_abstract(17, {1, 2}).genus(), 8);
}

TEST(Curve, RamificationData) {
    const auto c = KummerCurve::make_abstract(6, {1, 1, 1, 3, 5});
    const auto& ram = c.ram();
    EXPECT_EQ(ram.d, (std::vector<int>{1, 1, 1, 3, 1}));
    EXPECT_EQ(ram.e, (std::vector<int>{6, 6, 6, 2, 6}));
    EXPECT_EQ(ram.Lambda, 11);
    EXPECT_EQ(ram.d_inf, 1);
    EXPECT_EQ(ram.e_inf, 6);
    for (std::size_t i = 0; i < ram.d.size(); ++i) EXPECT_EQ(ram.d[i] * ram.e[i], c.m());
}

TEST(Curve, GenusFormulaIsExactOnRandomData) {
    std::mt19937 rng(3);
    for (int it = 0; it < 2000; ++it) {
        const int m = 2 + static_cast<int>(rng() % 30);
        const int r = 1 + static_cast<int>(rng() % 8);
        const auto lam = kummer::testing::random_lambdas(rng, m, r);
        const auto ram = ramification(m, lam);
        long long twice = static_cast<long long>(m - 1) * (r - 1) - (ram.d_inf - 1);
        for (int d : ram.d) twice -= d - 1;
        EXPECT_EQ(twice % 2, 0);
        EXPECT_EQ(ram.genus, twice / 2);
        EXPECT_GE(ram.genus, 0);
    }
}

TEST(Curve, ConstructionErrors) {
    auto f = make_field(7, 2);
    EXPECT_KUMMER_ERROR(KummerCurve::make(f, 8, {{Elem{3}, 1}, {Elem{3}, 1}}), ErrorCode::DuplicateBranch);
    EXPECT_KUMMER_ERROR(KummerCurve::make(f, 8, {{Elem{3}, 2}, {Elem{4}, 6}}), ErrorCode::GcdViolation);
    EXPECT_KUMMER_ERROR(KummerCurve::make(f, 7, {{Elem{3}, 1}, {Elem{4}, 1}}), ErrorCode::CharDividesM);
    EXPECT_KUMMER_ERROR(KummerCurve::make_abstract(4, {2, 2}), ErrorCode::GcdViolation);
    EXPECT_KUMMER_ERROR(KummerCurve::make_abstract(6, {1, 6}), ErrorCode::InvalidSpec);
    EXPECT_KUMMER_ERROR(KummerCurve::make_abstract(6, {1, 1}).field(), ErrorCode::AbstractField);
}

TEST(Valuation, MonomialValues) {
    const auto c = KummerCurve::make_abstract(6, {1, 1, 1, 3, 5});
    RationalX x_minus_a4;
    x_minus_a4.branch_exp = {0, 0, 0, 1, 0};
    EXPECT_EQ(valuation(c, Place::branch(3, 0), x_minus_a4, 0), 2);
    EXPECT_EQ(valuation(c, Place::branch(0, 0), x_minus_a4, 0), 0);
    EXPECT_EQ(monomial_valuation(c, Place::q_inf(), 0, 1), -11);
    EXPECT_EQ(monomial_valuation(c, Place::q_inf(), 1, 0), -6);
    EXPECT_EQ(monomial_valuation(c, Place::branch(3, 2), 0, 1), 1);
    EXPECT_EQ(monomial_valuation(c, Place::branch(4, 0), 0, 0), 0);
    EXPECT_KUMMER_ERROR(monomial_valuation(c, Place::branch(3, 3), 0, 1), ErrorCode::InvalidPlace);
    EXPECT_KUMMER_ERROR(monomial_valuation(c, Place::infinity(1), 0, 1), ErrorCode::InvalidPlace);
}

TEST(Divisor, PrincipalDivisorsHaveDegreeZero) {
    const auto abstract = KummerCurve::make_abstract(6, {1, 1, 1, 3, 5});
    RationalX one;
    one.branch_exp.assign(5, 0);
    EXPECT_EQ(principal_divisor(abstract, one, 1).degree(), 0);

    const auto c = f49_curve();
    EXPECT_EQ(div_inf_x(c).degree(), c.m());
    for (int i = 0; i < c.r(); ++i) {
        EXPECT_EQ(div0_branch(c, i).degree(), c.m());
        const Poly lin = Poly::linear(c.field(), c.alpha(i));
        const auto div = principal_divisor(c, lin, Poly::constant(c.field().one()), 0);
        EXPECT_EQ(div.degree(), 0);
        EXPECT_EQ(div, div0_branch(c, i) - div_inf_x(c));
    }

    std::mt19937 rng(1);
    const auto pts = split_points(c);
    for (int it = 0; it < 200; ++it) {
        RationalX b;
        b.branch_exp.resize(static_cast<std::size_t>(c.r()));
        for (auto& e : b.branch_exp) e = static_cast<int>(rng() % 7) - 3;
        for (int k = 0; k < 3; ++k) b.point_exp[pts[rng() % pts.size()]] += static_cast<int>(rng() % 5) - 2;
        const long long t = static_cast<long long>(rng() % 8);
        EXPECT_EQ(principal_divisor(c, b, t).degree(), 0);
    }
}

TEST(Divisor, UnsupportedRootIsRejected) {
    const auto c = f49_curve();
    const auto pts = split_points(c);
    std::uint32_t inert = 0;
    while (c.branch_index(Elem{inert}) || std::find(pts.begin(), pts.end(), Elem{inert}) != pts.end()) ++inert;
    const Poly lin = Poly::linear(c.field(), Elem{inert});
    EXPECT_KUMMER_ERROR(principal_divisor(c, lin, Poly::constant(c.field().one()), 0), ErrorCode::UnsupportedRoot);
}

TEST(Divisor, MergesAndInvariants) {
    const auto c = f49_curve();
    const InvariantTuple a{1, {0, 2, 3, 6, 1}};
    const auto d = invariant_divisor(c, a);
    EXPECT_EQ(d.degree(), invariant_degree(c, a));
    EXPECT_EQ(invariant_degree(c, a), 1 * 2 + 0 + 2 + 3 + 6 + 1 * 2);
    EXPECT_EQ(as_invariant(c, d), a);
    Divisor broken = d;
    broken.add(Place::infinity(1), 1);
    EXPECT_FALSE(as_invariant(c, broken).has_value());

    const auto e = invariant_divisor(c, InvariantTuple{3, {1, 0, 0, 7, 0}});
    const auto lo = Divisor::min_merge(d, e);
    const auto hi = Divisor::max_merge(d, e);
    EXPECT_EQ(lo + hi, d + e);
    EXPECT_EQ(as_invariant(c, lo), (InvariantTuple{1, {0, 0, 0, 6, 0}}));
    EXPECT_TRUE(lo.is_effective());
    EXPECT_FALSE((lo - hi).is_effective());
}

TEST(Restriction, Examples) {
    const auto c = KummerCurve::make_abstract(6, {1, 1, 1, 3, 5});
    const auto a = invariant_divisor(c, InvariantTuple{2, {1, 5, 0, 1, 3}});
    EXPECT_EQ(restrict_divisor(c, a).degree(), 0);

    RationalX one;
    one.branch_exp.assign(5, 0);
    const auto r_y = restrict_divisor(c, principal_divisor(c, one, 1));
    for (int i = 0; i < c.r(); ++i) EXPECT_EQ(r_y.at(BasePlace{BasePlace::Kind::Branch, i, {}}), 0);

    for (int k = 0; k < 4; ++k) {
        EXPECT_EQ(restrict_divisor(c, k * div0_branch(c, 3)).at(BasePlace{BasePlace::Kind::Branch, 3, {}}), k);
    }
}

TEST(Restriction, MatchesRestrictedDegree) {
    std::mt19937 rng(9);
    auto f = make_field(7, 2);
    for (int it = 0; it < 60; ++it) {
        const int m = std::vector<int>{2, 3, 4, 6, 8, 12, 16, 24}[rng() % 8];
        const auto c = random_curve(rng, f, m, 1 + static_cast<int>(rng() % 5));
        for (int rep = 0; rep < 10; ++rep) {
            InvariantTuple a{static_cast<long long>(rng() % (2 * m)), {}};
            for (int i = 0; i < c.r(); ++i) a.n.push_back(static_cast<long long>(rng() % (2 * m)));
            for (int t = 0; t < m; ++t) {
                RationalX one;
                one.branch_exp.assign(static_cast<std::size_t>(c.r()), 0);
                const auto shifted = invariant_divisor(c, a) + principal_divisor(c, one, t);
                ASSERT_EQ(restrict_divisor(c, shifted).degree(), restricted_degree(c, a, t));
            }
        }
    }
}

TEST(Restriction, ClosedFormThroughCountingSet) {
    std::mt19937 rng(21);
    for (int it = 0; it < 300; ++it) {
        const int m = 2 + static_cast<int>(rng() % 11);
        const int r = 2 + static_cast<int>(rng() % 4);
        const auto c = KummerCurve::make_abstract(m, kummer::testing::random_lambdas(rng, m, r));
        const auto& ram = c.ram();
        const auto lam = c.lambdas();
        InvariantTuple a{static_cast<long long>(rng() % static_cast<unsigned>(ram.e_inf)), {}};
        for (int i = 0; i < r; ++i) a.n.push_back(static_cast<long long>(rng() % static_cast<unsigned>(ram.e[static_cast<std::size_t>(i)])));
        for (int t = 1; t < m; ++t) {
            const int j = m - t;
            long long residues = 0;
            long long count = 0;
            for (int i = 0; i < r; ++i) {
                const auto idx = static_cast<std::size_t>(i);
                residues += mod_pos(-static_cast<long long>(j) * lam[idx], m);
                const long long res = mod_pos(static_cast<long long>(j) * lam[idx], m);
                if (res > 0 && a.n[idx] * ram.d[idx] >= res) ++count;
            }
            const long long closed = floor_div(a.n0 * ram.d_inf - residues + m * count, m);
            ASSERT_EQ(restricted_degree(c, a, t), closed) << "m=" << m << " t=" << t;
        }
    }
}

TEST(Ell, BasicValues) {
    const auto ex = KummerCurve::make_abstract(6, {1, 1, 1, 3, 5});
    EXPECT_EQ(ell_invariant(ex, InvariantTuple{0, {0, 0, 0, 0, 0}}), 1);
    EXPECT_EQ(ell_invariant(ex, InvariantTuple{0, {0, 1, 3, 0, 5}}), 1);
    EXPECT_EQ(ell_invariant(f49_curve(), InvariantTuple{0, {0, 2, 3, 6, 1}}), 1);
    EXPECT_KUMMER_ERROR(ell_invariant(ex, InvariantTuple{-1, {0, 0, 0, 0, 0}}), ErrorCode::NegativeCoefficient);
    EXPECT_EQ(ell_invariant(ex, InvariantTuple{-1, {0, 0, 0, 0, 0}}, EllOptions{std::nullopt, true}), 0);
    EXPECT_EQ(ell_invariant(ex, InvariantTuple{0, {0, 0, 0, 0, 0}}, EllOptions{0, false}), 1);
}

TEST(Ell, RiemannRochAndMonotonicity) {
    std::mt19937 rng(4);
    for (int it = 0; it < 300; ++it) {
        const int m = 2 + static_cast<int>(rng() % 9);
        const int r = 1 + static_cast<int>(rng() % 5);
        const auto c = KummerCurve::make_abstract(m, kummer::testing::random_lambdas(rng, m, r));
        EXPECT_EQ(ell_invariant(c, InvariantTuple{0, std::vector<long long>(static_cast<std::size_t>(r), 0)}), 1);
        InvariantTuple a{static_cast<long long>(rng() % 20), {}};
        for (int i = 0; i < r; ++i) a.n.push_back(static_cast<long long>(rng() % 20));
        const long long deg = invariant_degree(c, a);
        const long long ell = ell_invariant(c, a);
        EXPECT_GE(ell, deg - c.genus() + 1);
        EXPECT_LE(ell, deg + 1);
        if (deg > 2 * c.genus() - 2) {
            EXPECT_EQ(ell, deg - c.genus() + 1);
        }
        InvariantTuple b = a;
        b.n[rng() % static_cast<unsigned>(r)] += 1 + static_cast<long long>(rng() % 3);
        EXPECT_GE(ell_invariant(c, b), ell);
    }
}

TEST(Splitting, Types) {
    const auto c = f49_curve();
    EXPECT_EQ(splitting_type(c, Elem{0}).kind, SplittingType::Kind::Branch);
    EXPECT_EQ(splitting_type(c, Elem{0}).places.size(), 2u);
    const Field& f = c.field();
    std::size_t split = 0;
    for (std::uint32_t a = 0; a < f.q(); ++a) {
        const auto st = splitting_type(c, Elem{a});
        if (st.kind == SplittingType::Kind::Branch) continue;
        long long roots = 0;
        for (std::uint32_t y = 0; y < f.q(); ++y) roots += f.pow(Elem{y}, 8) == c.f_at(Elem{a});
        EXPECT_EQ(st.kind == SplittingType::Kind::Split, roots == 8);
        if (st.kind == SplittingType::Kind::Split) {
            ++split;
            EXPECT_EQ(st.places.size(), 8u);
            for (const auto& p : st.places) EXPECT_EQ(f.pow(p.y, 8), c.f_at(Elem{a}));
        } else {
            EXPECT_TRUE(st.places.empty());
        }
    }
    EXPECT_EQ(split_points(c).size(), split);

    auto f9 = make_field(3, 2);
    const auto odd = KummerCurve::make(f9, 5, {{Elem{0}, 1}});
    EXPECT_KUMMER_ERROR(splitting_type(odd, Elem{1}), ErrorCode::NoRootsOfUnity);
    EXPECT_KUMMER_ERROR(split_points(KummerCurve::make_abstract(2, {1})), ErrorCode::AbstractField);
}

TEST(Census, GenusZeroConic) {
    auto f9 = make_field(3, 2);
    const auto c = KummerCurve::make(f9, 2, {{Elem{0}, 1}});
    EXPECT_EQ(c.genus(), 0);
    const auto cen = census(c);
    EXPECT_EQ(cen.rational_places, 10);
    EXPECT_TRUE(cen.is_maximal);
}

TEST(Census, MatchesBruteForceAndHasseWeil) {
    std::mt19937 rng(13);
    for (auto [p, k] : std::vector<std::pair<int, int>>{{3, 2}, {5, 2}, {7, 2}, {13, 1}, {2, 4}}) {
        auto f = make_field(p, k);
        for (int it = 0; it < 15; ++it) {
            std::vector<int> ms;
            for (int m = 2; m <= static_cast<int>(f->q()) - 1; ++m) {
                if (m % p != 0) ms.push_back(m);
            }
            const int m = ms[rng() % ms.size()];
            const auto c = random_curve(rng, f, m, 1 + static_cast<int>(rng() % 4));
            const auto cen = census(c);
            ASSERT_EQ(cen.rational_places, brute_census(c));
            EXPECT_LE(static_cast<double>(cen.rational_places), cen.hasse_weil_bound + 1e-9);
        }
    }
}

TEST(Census, InvariantUnderRelabeling) {
    std::mt19937 rng(17);
    auto f = make_field(7, 2);
    for (int it = 0; it < 20; ++it) {
        const auto c = random_curve(rng, f, 8, 2 + static_cast<int>(rng() % 4));
        auto branches = c.branches();
        std::shuffle(branches.begin(), branches.end(), rng);
        const auto permuted = KummerCurve::make(f, 8, branches, c.lead());
        EXPECT_EQ(census(c).rational_places, census(permuted).rational_places);
        EXPECT_EQ(c.genus(), permuted.genus());
    }
}

TEST(Census, F49Curve) {
    const auto c = f49_curve();
    const auto cen = census(c);
    EXPECT_EQ(cen.rational_places, brute_census(c));
    EXPECT_EQ(cen.hasse_weil_bound, 232.0);
    EXPECT_EQ(c.branch_labels(4).size(), 2u);
    EXPECT_EQ(c.infinity_labels().size(), 2u);
    EXPECT_EQ(c.q_inf_label(), c.field().one());
}
