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

#include "kummer/ffield.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "kummer/error.hpp"

namespace kummer {

namespace {

using IntPoly = std::vector<int>;  // GF(p)[x], constant term first

void trim(IntPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

IntPoly int_poly_mod(IntPoly a, const IntPoly& b, int p) {
    trim(a);
    const int db = static_cast<int>(b.size()) - 1;
    int lead_inv = 1;
    while ((lead_inv * b.back()) % p != 1) ++lead_inv;
    while (static_cast<int>(a.size()) - 1 >= db) {
        const int shift = static_cast<int>(a.size()) - 1 - db;
        const int factor = (a.back() * lead_inv) % p;
        for (int i = 0; i <= db; ++i) {
            a[shift + i] = ((a[shift + i] - factor * b[i]) % p + p) % p;
        }
        trim(a);
    }
    return a;
}

bool is_irreducible(const IntPoly& f, int p) {
    const int k = static_cast<int>(f.size()) - 1;
    for (int d = 1; d <= k / 2; ++d) {
        // every monic polynomial of degree d
        long long count = 1;
        for (int i = 0; i < d; ++i) count *= p;
        for (long long idx = 0; idx < count; ++idx) {
            IntPoly g(d + 1);
            long long v = idx;
            for (int i = 0; i < d; ++i) {
                g[i] = static_cast<int>(v % p);
                v /= p;
            }
            g[d] = 1;
            if (int_poly_mod(f, g, p).empty()) return false;
        }
    }
    return true;
}

IntPoly canonical_modulus(int p, int k) {
    if (k == 1) return {0, 1};
    long long count = 1;
    for (int i = 0; i < k; ++i) count *= p;
    // c0 is the most significant digit of the scan
    for (long long idx = 0; idx < count; ++idx) {
        IntPoly f(k + 1);
        long long v = idx;
        for (int i = k - 1; i >= 0; --i) {
            f[i] = static_cast<int>(v % p);
            v /= p;
        }
        f[k] = 1;
        if (f[0] == 0) continue;
        if (is_irreducible(f, p)) return f;
    }
    throw Error(ErrorCode::InvalidSpec, "no irreducible polynomial found");
}

std::vector<long long> prime_factors(long long n) {
    std::vector<long long> out;
    for (long long d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

} // namespace

bool is_prime(long long n) {
    if (n < 2) return false;
    for (long long d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

Field::Field(int p, int k, std::uint32_t cap) : p_(p), k_(k) {
    if (!is_prime(p)) throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
    if (k < 1) throw Error(ErrorCode::DegreeZero, "extension degree must be >= 1");
    unsigned long long q = 1;
    for (int i = 0; i < k; ++i) {
        q *= static_cast<unsigned long long>(p);
        if (q > cap) {
            throw Error(ErrorCode::FieldTooLarge,
                        std::to_string(p) + "^" + std::to_string(k) + " exceeds cap " + std::to_string(cap));
        }
    }
    q_ = static_cast<std::uint32_t>(q);
    modulus_ = canonical_modulus(p, k);

    auto to_digits = [&](std::uint32_t e) {
        IntPoly d(k_);
        for (int i = 0; i < k_; ++i) {
            d[i] = static_cast<int>(e % p_);
            e /= p_;
        }
        return d;
    };
    auto from_digits = [&](const IntPoly& d) {
        std::uint32_t e = 0;
        for (int i = k_ - 1; i >= 0; --i) e = e * p_ + static_cast<std::uint32_t>(i < static_cast<int>(d.size()) ? d[i] : 0);
        return e;
    };
    auto raw_mul = [&](std::uint32_t a, std::uint32_t b) {
        const IntPoly da = to_digits(a), db = to_digits(b);
        IntPoly prod(2 * k_ - 1, 0);
        for (int i = 0; i < k_; ++i) {
            if (da[i] == 0) continue;
            for (int j = 0; j < k_; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
        }
        return from_digits(k_ == 1 ? prod : int_poly_mod(prod, modulus_, p_));
    };
    auto raw_pow = [&](std::uint32_t a, unsigned long long e) {
        std::uint32_t result = 1;
        while (e > 0) {
            if (e & 1) result = raw_mul(result, a);
            a = raw_mul(a, a);
            e >>= 1;
        }
        return result;
    };

    const std::uint32_t order = q_ - 1;
    const auto factors = prime_factors(order);
    std::uint32_t gen = 1;
    for (std::uint32_t cand = 1; cand < q_; ++cand) {
        bool primitive = true;
        for (long long l : factors) {
            if (raw_pow(cand, order / l) == 1) {
                primitive = false;
                break;
            }
        }
        if (primitive) {
            gen = cand;
            break;
        }
    }

    exp_.resize(order);
    log_.assign(q_, 0);
    std::uint32_t cur = 1;
    for (std::uint32_t i = 0; i < order; ++i) {
        exp_[i] = cur;
        log_[cur] = i;
        cur = raw_mul(cur, gen);
    }

    neg_.resize(q_);
    for (std::uint32_t e = 0; e < q_; ++e) {
        IntPoly d = to_digits(e);
        for (auto& c : d) c = (p_ - c) % p_;
        neg_[e] = from_digits(d);
    }

    zech_.resize(order);
    const IntPoly one_digits = to_digits(1);
    for (std::uint32_t i = 0; i < order; ++i) {
        IntPoly d = to_digits(exp_[i]);
        for (int j = 0; j < k_; ++j) d[j] = (d[j] + one_digits[j]) % p_;
        const std::uint32_t s = from_digits(d);
        zech_[i] = s == 0 ? -1 : static_cast<std::int64_t>(log_[s]);
    }
}

Elem Field::from_int(long long v) const noexcept {
    long long r = v % p_;
    if (r < 0) r += p_;
    return Elem{static_cast<std::uint32_t>(r)};
}

Elem Field::element(std::uint32_t enc) const {
    if (enc >= q_) {
        throw Error(ErrorCode::InvalidSpec,
                    "encoding " + std::to_string(enc) + " out of range for GF(" + std::to_string(q_) + ")");
    }
    return Elem{enc};
}

std::vector<int> Field::coeffs(Elem a) const {
    std::vector<int> d(k_);
    std::uint32_t e = a.enc;
    for (int i = 0; i < k_; ++i) {
        d[i] = static_cast<int>(e % p_);
        e /= p_;
    }
    return d;
}

Elem Field::add(Elem a, Elem b) const noexcept {
    if (a.enc == 0) return b;
    if (b.enc == 0) return a;
    const std::uint32_t order = q_ - 1;
    const std::uint32_t la = log_[a.enc];
    const std::uint32_t lb = log_[b.enc];
    const std::uint32_t d = lb >= la ? lb - la : lb + order - la;
    const std::int64_t z = zech_[d];
    if (z < 0) return Elem{0};
    return Elem{exp_[(la + static_cast<std::uint64_t>(z)) % order]};
}

Elem Field::mul(Elem a, Elem b) const noexcept {
    if (a.enc == 0 || b.enc == 0) return Elem{0};
    const std::uint64_t s = static_cast<std::uint64_t>(log_[a.enc]) + log_[b.enc];
    return Elem{exp_[s % (q_ - 1)]};
}

Elem Field::inv(Elem a) const {
    if (a.enc == 0) throw Error(ErrorCode::InvalidSpec, "inverse of zero");
    const std::uint32_t order = q_ - 1;
    return Elem{exp_[(order - log_[a.enc]) % order]};
}

Elem Field::exp(long long e) const noexcept {
    const long long order = q_ - 1;
    long long r = e % order;
    if (r < 0) r += order;
    return Elem{exp_[static_cast<std::size_t>(r)]};
}

Elem Field::pow(Elem a, long long e) const {
    if (a.enc == 0) {
        if (e < 0) throw Error(ErrorCode::InvalidSpec, "negative power of zero");
        return e == 0 ? one() : zero();
    }
    const long long order = q_ - 1;
    const long long r = ((e % order) + order) % order;
    return exp(static_cast<long long>((static_cast<unsigned long long>(log_[a.enc]) * r) % order));
}

std::uint64_t Field::order(Elem a) const {
    if (a.enc == 0) throw Error(ErrorCode::InvalidSpec, "order of zero");
    const std::uint64_t n = q_ - 1;
    return n / std::gcd<std::uint64_t, std::uint64_t>(n, log_[a.enc]);
}

FieldPtr make_field(int p, int k, std::uint32_t cap) {
    return std::make_shared<const Field>(p, k, cap);
}

std::vector<Elem> nth_roots(const Field& f, Elem c, unsigned n) {
    if (n == 0) return {};
    if (c.enc == 0) return {Elem{0}};
    const std::uint64_t order = f.q() - 1;
    const std::uint64_t g = std::gcd<std::uint64_t, std::uint64_t>(n, order);
    const std::uint64_t l = f.log(c);
    if (l % g != 0) return {};
    // n e = l (mod order)  <=>  (n/g) e = l/g (mod order/g)
    const std::uint64_t reduced = order / g;
    std::uint64_t e0 = 0;
    if (reduced > 1) {
        const std::uint64_t a = (n / g) % reduced;
        // modular inverse by extended Euclid
        long long t0 = 0, t1 = 1;
        long long r0 = static_cast<long long>(reduced), r1 = static_cast<long long>(a);
        while (r1 != 0) {
            const long long qt = r0 / r1;
            std::tie(t0, t1) = std::make_pair(t1, t0 - qt * t1);
            std::tie(r0, r1) = std::make_pair(r1, r0 - qt * r1);
        }
        const long long inv = ((t0 % static_cast<long long>(reduced)) + static_cast<long long>(reduced)) %
                              static_cast<long long>(reduced);
        e0 = static_cast<std::uint64_t>((static_cast<unsigned __int128>(l / g) * static_cast<std::uint64_t>(inv)) %
                                        reduced);
    }
    std::vector<Elem> out;
    out.reserve(g);
    for (std::uint64_t i = 0; i < g; ++i) out.push_back(f.exp(static_cast<long long>(e0 + i * reduced)));
    std::sort(out.begin(), out.end());
    return out;
}

Poly::Poly(std::vector<Elem> coeffs) : c_(std::move(coeffs)) {
    while (!c_.empty() && c_.back().enc == 0) c_.pop_back();
}

Poly Poly::linear(const Field& f, Elem a) {
    return Poly({f.neg(a), f.one()});
}

Poly poly_add(const Field& f, const Poly& a, const Poly& b) {
    const std::size_t n = std::max(a.coeffs().size(), b.coeffs().size());
    std::vector<Elem> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = f.add(a.coeff(i), b.coeff(i));
    return Poly(std::move(out));
}

Poly poly_sub(const Field& f, const Poly& a, const Poly& b) {
    const std::size_t n = std::max(a.coeffs().size(), b.coeffs().size());
    std::vector<Elem> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = f.sub(a.coeff(i), b.coeff(i));
    return Poly(std::move(out));
}

Poly poly_mul(const Field& f, const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<Elem> out(a.coeffs().size() + b.coeffs().size() - 1);
    for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
        for (std::size_t j = 0; j < b.coeffs().size(); ++j) {
            out[i + j] = f.add(out[i + j], f.mul(a.coeffs()[i], b.coeffs()[j]));
        }
    }
    return Poly(std::move(out));
}

Poly poly_scale(const Field& f, const Poly& a, Elem c) {
    std::vector<Elem> out(a.coeffs());
    for (auto& e : out) e = f.mul(e, c);
    return Poly(std::move(out));
}

std::pair<Poly, Poly> poly_divmod(const Field& f, const Poly& a, const Poly& b) {
    if (b.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "division by the zero polynomial");
    std::vector<Elem> rem(a.coeffs());
    const int db = b.degree();
    if (a.degree() < db) return {Poly(), a};
    std::vector<Elem> quot(static_cast<std::size_t>(a.degree() - db + 1));
    const Elem lead_inv = f.inv(b.leading());
    for (int i = a.degree(); i >= db; --i) {
        const Elem factor = f.mul(rem[static_cast<std::size_t>(i)], lead_inv);
        quot[static_cast<std::size_t>(i - db)] = factor;
        if (factor.enc == 0) continue;
        for (int j = 0; j <= db; ++j) {
            auto& slot = rem[static_cast<std::size_t>(i - db + j)];
            slot = f.sub(slot, f.mul(factor, b.coeffs()[static_cast<std::size_t>(j)]));
        }
    }
    return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Poly poly_gcd(const Field& f, Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = poly_divmod(f, a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    return poly_scale(f, a, f.inv(a.leading()));
}

Poly poly_derivative(const Field& f, const Poly& a) {
    if (a.degree() < 1) return Poly();
    std::vector<Elem> out(a.coeffs().size() - 1);
    for (std::size_t i = 1; i < a.coeffs().size(); ++i) {
        out[i - 1] = f.mul(a.coeffs()[i], f.from_int(static_cast<long long>(i)));
    }
    return Poly(std::move(out));
}

Elem poly_eval(const Field& f, const Poly& a, Elem x) {
    Elem acc{};
    for (auto it = a.coeffs().rbegin(); it != a.coeffs().rend(); ++it) acc = f.add(f.mul(acc, x), *it);
    return acc;
}

PolyAnalysis poly_analyze(const Field& f, const Poly& poly) {
    if (poly.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "cannot analyze the zero polynomial");
    PolyAnalysis out;
    out.leading_coeff = poly.leading();
    for (std::uint32_t e = 0; e < f.q(); ++e) {
        const Elem x{e};
        if (poly_eval(f, poly, x).enc != 0) continue;
        const Poly lin = Poly::linear(f, x);
        Poly rest = poly;
        int mult = 0;
        while (true) {
            auto [quot, rem] = poly_divmod(f, rest, lin);
            if (!rem.is_zero()) break;
            rest = std::move(quot);
            ++mult;
        }
        out.roots_in_field.emplace_back(x, mult);
    }
    out.separable = poly_gcd(f, poly, poly_derivative(f, poly)).degree() == 0;
    return out;
}

} // namespace kummer
