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

#include <map>
#include <random>

#include "kummer/ffield.hpp"
#include "test_util.hpp"

using namespace kummer;

namespace {

// Independent polynomial arithmetic on coefficient vectors mod p.
std::vector<int> mul_mod(const std::vector<int>& a, const std::vector<int>& b, const std::vector<int>& modulus, int p) {
    const std::size_t k = modulus.size() - 1;
    std::vector<int> prod(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
    for (std::size_t d = prod.size(); d-- > k;) {
        const int c = prod[d];
        if (c == 0) continue;
        for (std::size_t i = 0; i <= k; ++i) prod[d - k + i] = ((prod[d - k + i] - c * modulus[i]) % p + p) % p;
    }
    prod.resize(k, 0);
    return prod;
}

bool has_root_free_factorization(const std::vector<int>& poly, int p) {
    // Irreducibility by trial division over all monic polynomials of degree <= k/2.
    const int k = static_cast<int>(poly.size()) - 1;
    for (int d = 1; d <= k / 2; ++d) {
        int count = 1;
        for (int i = 0; i < d; ++i) count *= p;
        for (int idx = 0; idx < count; ++idx) {
            std::vector<int> div(d + 1, 0);
            int v = idx;
            for (int i = 0; i < d; ++i) {
                div[i] = v % p;
                v /= p;
            }
            div[d] = 1;
            std::vector<int> rem = poly;
            for (int top = k; top >= d; --top) {
                const int c = rem[top];
                if (c == 0) continue;
                for (int i = 0; i <= d; ++i) rem[top - d + i] = ((rem[top - d + i] - c * div[i]) % p + p) % p;
            }
            bool zero = true;
            for (int i = 0; i < d; ++i) zero = zero && rem[i] == 0;
            if (zero) return false;
        }
    }
    return true;
}

} // namespace

TEST(Field, PrimeFieldInversePair) {
    auto f = make_field(7, 1);
    EXPECT_EQ(f->mul(f->element(3), f->element(5)), f->one());
    EXPECT_EQ(f->q(), 7u);
    EXPECT_EQ(f->inv(f->element(3)), f->element(5));
}

TEST(Field, Gf49HasEighthRootsOfUnity) {
    auto f = make_field(7, 2);
    EXPECT_EQ(f->q(), 49u);
    bool found = false;
    for (std::uint32_t e = 1; e < f->q(); ++e) {
        Elem a{e}, acc = a;
        std::uint64_t ord = 1;
        while (acc != f->one()) {
            acc = f->mul(acc, a);
            ++ord;
        }
        EXPECT_EQ(ord, f->order(a));
        found = found || ord == 8;
    }
    EXPECT_TRUE(found);
}

TEST(Field, ConstructionErrors) {
    EXPECT_KUMMER_ERROR(make_field(4, 1), ErrorCode::NotPrime);
    EXPECT_KUMMER_ERROR(make_field(3, 0), ErrorCode::DegreeZero);
    EXPECT_KUMMER_ERROR(make_field(2, 30), ErrorCode::FieldTooLarge);
    EXPECT_KUMMER_ERROR(make_field(3, 2)->element(9), ErrorCode::InvalidSpec);
}

TEST(Field, CanonicalModulusIsLeastIrreducible) {
    for (auto [p, k] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {2, 4}, {3, 2}, {3, 3}, {5, 2}, {7, 2}}) {
        auto f = make_field(p, k);
        const auto& mod = f->modulus();
        ASSERT_EQ(mod.size(), static_cast<std::size_t>(k + 1));
        EXPECT_EQ(mod.back(), 1);
        EXPECT_TRUE(has_root_free_factorization(mod, p));
        // No monic irreducible scans earlier with c0 most significant.
        int count = 1;
        for (int i = 0; i < k; ++i) count *= p;
        auto key = [&](const std::vector<int>& c) {
            long long v = 0;
            for (int i = 0; i < k; ++i) v = v * p + c[static_cast<std::size_t>(i)];
            return v;
        };
        for (int idx = 0; idx < count; ++idx) {
            std::vector<int> cand(static_cast<std::size_t>(k + 1), 0);
            int v = idx;
            for (int i = k - 1; i >= 0; --i) {
                cand[static_cast<std::size_t>(i)] = v % p;
                v /= p;
            }
            cand[static_cast<std::size_t>(k)] = 1;
            if (key(cand) < key(mod)) {
                EXPECT_FALSE(has_root_free_factorization(cand, p)) << p << "^" << k;
            }
        }
    }
}

TEST(Field, MultiplicationMatchesPolynomialOracle) {
    for (auto [p, k] : std::vector<std::pair<int, int>>{{2, 4}, {3, 3}, {7, 2}}) {
        auto f = make_field(p, k);
        for (std::uint32_t a = 0; a < f->q(); ++a) {
            for (std::uint32_t b = 0; b < f->q(); ++b) {
                const auto expect = mul_mod(f->coeffs(Elem{a}), f->coeffs(Elem{b}), f->modulus(), p);
                ASSERT_EQ(f->coeffs(f->mul(Elem{a}, Elem{b})), expect);
                std::vector<int> sum(static_cast<std::size_t>(k));
                for (int i = 0; i < k; ++i) {
                    sum[static_cast<std::size_t>(i)] = (f->coeffs(Elem{a})[static_cast<std::size_t>(i)] +
                                                        f->coeffs(Elem{b})[static_cast<std::size_t>(i)]) % p;
                }
                ASSERT_EQ(f->coeffs(f->add(Elem{a}, Elem{b})), sum);
            }
        }
    }
}

TEST(Field, AxiomsOnRandomSamples) {
    std::mt19937 rng(7);
    for (auto [p, k] : std::vector<std::pair<int, int>>{{2, 8}, {3, 5}, {7, 2}, {31, 2}, {101, 1}}) {
        auto f = make_field(p, k);
        std::uniform_int_distribution<std::uint32_t> pick(0, f->q() - 1);
        for (int it = 0; it < 10000; ++it) {
            const Elem a{pick(rng)}, b{pick(rng)}, c{pick(rng)};
            ASSERT_EQ(f->mul(f->mul(a, b), c), f->mul(a, f->mul(b, c)));
            ASSERT_EQ(f->add(f->add(a, b), c), f->add(a, f->add(b, c)));
            ASSERT_EQ(f->mul(a, f->add(b, c)), f->add(f->mul(a, b), f->mul(a, c)));
            ASSERT_EQ(f->add(a, f->neg(a)), f->zero());
            ASSERT_EQ(f->sub(f->add(a, b), b), a);
            if (a.enc != 0) {
                ASSERT_EQ(f->mul(a, f->inv(a)), f->one());
                ASSERT_EQ(f->pow(a, -3), f->inv(f->mul(a, f->mul(a, a))));
            }
        }
    }
}

TEST(Field, FermatExhaustive) {
    for (auto [p, k] : std::vector<std::pair<int, int>>{{2, 10}, {3, 6}, {5, 4}, {7, 3}, {31, 2}, {1021, 1}}) {
        auto f = make_field(p, k);
        for (std::uint32_t a = 0; a < f->q(); ++a) ASSERT_EQ(f->pow(Elem{a}, f->q()), Elem{a});
    }
}

TEST(Field, FromIntReducesModP) {
    auto f = make_field(7, 2);
    EXPECT_EQ(f->from_int(9), f->element(2));
    EXPECT_EQ(f->from_int(-2), f->element(5));
    EXPECT_EQ(f->add(f->from_int(3), f->from_int(4)), f->zero());
}

TEST(NthRoots, SmallCases) {
    auto f = make_field(7, 1);
    EXPECT_EQ(nth_roots(*f, f->element(1), 3), (std::vector<Elem>{Elem{1}, Elem{2}, Elem{4}}));
    EXPECT_EQ(nth_roots(*f, f->element(6), 3), (std::vector<Elem>{Elem{3}, Elem{5}, Elem{6}}));
    EXPECT_EQ(nth_roots(*f, f->zero(), 5), std::vector<Elem>{Elem{0}});
}

TEST(NthRoots, MatchesExhaustiveScan) {
    for (auto [p, k] : std::vector<std::pair<int, int>>{{2, 6}, {3, 4}, {7, 2}, {5, 3}, {13, 1}}) {
        auto f = make_field(p, k);
        for (unsigned n : {1u, 2u, 3u, 4u, 6u, 8u, 9u}) {
            std::map<std::uint32_t, std::vector<Elem>> scan;
            for (std::uint32_t y = 0; y < f->q(); ++y) scan[f->pow(Elem{y}, n).enc].push_back(Elem{y});
            std::uint64_t total = 0;
            const unsigned g = std::gcd(n, f->q() - 1);
            for (std::uint32_t c = 0; c < f->q(); ++c) {
                const auto roots = nth_roots(*f, Elem{c}, n);
                ASSERT_EQ(roots, scan[c]) << p << "^" << k << " n=" << n << " c=" << c;
                total += roots.size();
                if (c != 0) {
                    EXPECT_TRUE(roots.empty() || roots.size() == g);
                    EXPECT_EQ(!roots.empty(), f->pow(Elem{c}, (f->q() - 1) / g) == f->one());
                }
            }
            EXPECT_EQ(total, f->q());
        }
    }
}

TEST(Poly, AnalyzeExamples) {
    auto f49 = make_field(7, 2);
    const Poly quartic({f49->one(), f49->zero(), f49->zero(), f49->zero(), f49->one()});
    auto info = poly_analyze(*f49, quartic);
    EXPECT_EQ(info.roots_in_field.size(), 4u);
    EXPECT_TRUE(info.separable);
    for (const auto& [root, mult] : info.roots_in_field) {
        EXPECT_EQ(mult, 1);
        EXPECT_EQ(poly_eval(*f49, quartic, root), f49->zero());
    }

    auto f7 = make_field(7, 1);
    info = poly_analyze(*f7, Poly({f7->zero(), f7->zero(), f7->one()}));
    ASSERT_EQ(info.roots_in_field.size(), 1u);
    EXPECT_EQ(info.roots_in_field[0], std::make_pair(Elem{0}, 2));
    EXPECT_FALSE(info.separable);

    info = poly_analyze(*f7, Poly({f7->one(), f7->zero(), f7->one()}));
    EXPECT_TRUE(info.roots_in_field.empty());
    EXPECT_TRUE(info.separable);

    EXPECT_KUMMER_ERROR(poly_analyze(*f7, Poly{}), ErrorCode::ZeroPolynomial);
}

TEST(Poly, ArithmeticIdentities) {
    auto f = make_field(5, 2);
    std::mt19937 rng(11);
    std::uniform_int_distribution<std::uint32_t> pick(0, f->q() - 1);
    auto random_poly = [&](int deg) {
        std::vector<Elem> c(static_cast<std::size_t>(deg + 1));
        for (auto& e : c) e = Elem{pick(rng)};
        c.back() = Elem{1 + pick(rng) % (f->q() - 1)};
        return Poly(c);
    };
    for (int it = 0; it < 200; ++it) {
        const Poly a = random_poly(static_cast<int>(pick(rng) % 7));
        const Poly b = random_poly(1 + static_cast<int>(pick(rng) % 4));
        const auto [quo, rem] = poly_divmod(*f, a, b);
        EXPECT_LT(rem.degree(), b.degree());
        EXPECT_EQ(poly_add(*f, poly_mul(*f, quo, b), rem), a);
        const Elem x{pick(rng)};
        EXPECT_EQ(poly_eval(*f, poly_mul(*f, a, b), x), f->mul(poly_eval(*f, a, x), poly_eval(*f, b, x)));
        const Poly g = poly_gcd(*f, poly_mul(*f, a, b), b);
        EXPECT_EQ(g.leading(), f->one());
        EXPECT_EQ(g.degree(), b.degree());
    }
}

TEST(Poly, MultiplicitiesBoundedByDegree) {
    auto f = make_field(3, 2);
    std::mt19937 rng(5);
    std::uniform_int_distribution<std::uint32_t> pick(0, f->q() - 1);
    for (int it = 0; it < 300; ++it) {
        // Products of linear factors, sometimes repeated.
        Poly poly = Poly::constant(f->one());
        const int factors = 1 + static_cast<int>(pick(rng) % 5);
        for (int i = 0; i < factors; ++i) poly = poly_mul(*f, poly, Poly::linear(*f, Elem{pick(rng) % 4}));
        if (pick(rng) % 2) poly = poly_mul(*f, poly, Poly({f->one(), f->zero(), f->one()}));
        const auto info = poly_analyze(*f, poly);
        int total = 0;
        bool all_simple = true;
        for (const auto& [root, mult] : info.roots_in_field) {
            total += mult;
            all_simple = all_simple && mult == 1;
        }
        EXPECT_LE(total, poly.degree());
        if (total == poly.degree()) {
            EXPECT_EQ(info.separable, all_simple);
        }
    }
}
