/*
   Copyright 2026 goodlrc contributors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "goodlrc/gf.hpp"

#include <algorithm>
#include <array>
#include <sstream>

namespace goodlrc {
namespace {

constexpr unsigned kMaxM = 32;

std::uint64_t int_powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = r * a % p;
        a = a * a % p;
        e >>= 1;
    }
    return r;
}

// --- dense F_p[x] helpers used only for modulus selection/validation ---

using FpPoly = std::vector<std::uint64_t>;  // constant first, coeffs in [0,p)

void fp_trim(FpPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

// a * b mod f, f monic
FpPoly fp_mulmod(const FpPoly& a, const FpPoly& b, const FpPoly& f, std::uint64_t p) {
    if (a.empty() || b.empty()) return {};
    FpPoly prod(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
    }
    const std::size_t m = f.size() - 1;
    for (std::size_t k = prod.size(); k-- > m;) {
        std::uint64_t c = prod[k];
        if (!c) continue;
        prod[k] = 0;
        for (std::size_t j = 0; j < m; ++j)
            prod[k - m + j] = (prod[k - m + j] + c * (p - f[j])) % p;
    }
    prod.resize(std::min(prod.size(), m));
    fp_trim(prod);
    return prod;
}

// a^e mod f
FpPoly fp_powmod(FpPoly a, std::uint64_t e, const FpPoly& f, std::uint64_t p) {
    FpPoly r{1};
    while (e) {
        if (e & 1) r = fp_mulmod(r, a, f, p);
        a = fp_mulmod(a, a, f, p);
        e >>= 1;
    }
    return r;
}

FpPoly fp_mod(FpPoly a, const FpPoly& f, std::uint64_t p) {
    fp_trim(a);
    const std::size_t m = f.size() - 1;
    const std::uint64_t lead_inv = int_powmod(f.back(), p - 2, p);
    while (a.size() > m) {
        std::uint64_t c = a.back() * lead_inv % p;
        std::size_t shift = a.size() - f.size();
        if (c) {
            for (std::size_t j = 0; j < f.size(); ++j)
                a[shift + j] = (a[shift + j] + c * (p - f[j])) % p;
        }
        a.pop_back();
        fp_trim(a);
    }
    return a;
}

FpPoly fp_gcd(FpPoly a, FpPoly b, std::uint64_t p) {
    fp_trim(a);
    fp_trim(b);
    while (!b.empty()) {
        FpPoly r = fp_mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

bool fp_irreducible(const FpPoly& f, std::uint64_t p) {
    const std::size_t m = f.size() - 1;
    if (m == 1) return true;
    // f (degree m) is irreducible iff it has no factor of degree <= m/2,
    // i.e. gcd(f, X^(p^i) - X) = 1 for all i <= m/2.
    FpPoly t{0, 1};  // X
    for (std::size_t i = 1; 2 * i <= m; ++i) {
        t = fp_powmod(t, p, f, p);
        FpPoly d = t;
        if (d.size() < 2) d.resize(2, 0);
        d[1] = (d[1] + p - 1) % p;  // t - X
        fp_trim(d);
        FpPoly g = fp_gcd(f, d, p);
        if (g.size() > 1) return false;
    }
    return true;
}

}  // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::pair<std::uint64_t, unsigned> factor_prime_power(std::uint64_t q) {
    if (q < 2) throw PreconditionError("not a prime power: " + std::to_string(q));
    for (std::uint64_t d = 2; d * d <= q; ++d) {
        if (q % d == 0) {
            unsigned m = 0;
            std::uint64_t r = q;
            while (r % d == 0) {
                r /= d;
                ++m;
            }
            if (r != 1)
                throw PreconditionError("not a prime power: " + std::to_string(q));
            return {d, m};
        }
    }
    return {q, 1};  // q prime
}

FieldPtr FieldSpec::create(std::uint64_t p, unsigned m,
                           std::vector<std::uint64_t> modulus,
                           std::uint64_t guard) {
    if (!is_prime(p)) throw PreconditionError("p is not prime: " + std::to_string(p));
    if (m < 1) throw PreconditionError("extension degree out of range");
    std::uint64_t q = 1;
    for (unsigned i = 0; i < m; ++i) {
        if (q > guard / p) throw GuardError("q = p^m exceeds the resource guard");
        q *= p;
    }
    if (q > guard) throw GuardError("q = p^m exceeds the resource guard");
    if (m > kMaxM) throw PreconditionError("extension degree out of range");

    auto spec = std::shared_ptr<FieldSpec>(new FieldSpec());
    spec->p_ = p;
    spec->m_ = m;
    spec->q_ = q;

    if (!modulus.empty()) {
        if (modulus.size() != m + 1 || modulus.back() != 1)
            throw PreconditionError("modulus must be monic of degree m");
        for (auto c : modulus)
            if (c >= p) throw PreconditionError("modulus coefficient not in F_p");
        if (!fp_irreducible(modulus, p))
            throw PreconditionError("modulus is reducible over F_p");
        spec->modulus_ = std::move(modulus);
    } else {
        // Smallest monic irreducible: candidates ordered by the canonical
        // integer encoding of the non-leading coefficient vector.
        std::uint64_t limit = 1;
        for (unsigned i = 0; i < m; ++i) limit *= p;
        FpPoly cand(m + 1, 0);
        cand[m] = 1;
        bool found = false;
        for (std::uint64_t n = 0; n < limit; ++n) {
            std::uint64_t v = n;
            for (unsigned i = 0; i < m; ++i) {
                cand[i] = v % p;
                v /= p;
            }
            if (m > 1 && cand[0] == 0) continue;  // divisible by X
            if (fp_irreducible(cand, p)) {
                spec->modulus_ = cand;
                found = true;
                break;
            }
        }
        if (!found) throw PreconditionError("no irreducible modulus found");
    }

    spec->mod_digits_.resize(m);
    for (unsigned i = 0; i < m; ++i)
        spec->mod_digits_[i] = static_cast<std::uint32_t>(spec->modulus_[i]);

    return spec;
}

FieldPtr FieldSpec::parse(const std::string& label, std::uint64_t guard) {
    if (label.find("mod=") != std::string::npos)
        throw ParseError("modulus override not supported in this form");
    std::size_t caret = label.find('^');
    try {
        if (caret == std::string::npos) {
            std::uint64_t q = std::stoull(label);
            auto [p, m] = factor_prime_power(q);
            return create(p, m, {}, guard);
        }
        std::uint64_t p = std::stoull(label.substr(0, caret));
        unsigned long m = std::stoul(label.substr(caret + 1));
        return create(p, static_cast<unsigned>(m), {}, guard);
    } catch (const std::invalid_argument&) {
        throw ParseError("bad field label: " + label);
    } catch (const std::out_of_range&) {
        throw ParseError("bad field label: " + label);
    }
}

std::string FieldSpec::label() const {
    if (m_ == 1) return std::to_string(p_);
    return std::to_string(p_) + "^" + std::to_string(m_);
}

std::string FieldSpec::modulus_text() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = modulus_.size(); k-- > 0;) {
        std::uint64_t c = modulus_[k];
        if (!c) continue;
        if (!first) os << "+";
        first = false;
        if (k == 0) {
            os << c;
        } else {
            if (c != 1) os << c << "*";
            os << "x";
            if (k > 1) os << "^" << k;
        }
    }
    if (first) os << "0";
    return os.str();
}

std::uint64_t FieldSpec::add(std::uint64_t a, std::uint64_t b) const {
    if (p_ == 2) return a ^ b;
    if (m_ == 1) {
        std::uint64_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    std::uint64_t r = 0, mult = 1;
    for (unsigned i = 0; i < m_; ++i) {
        std::uint64_t s = a % p_ + b % p_;
        if (s >= p_) s -= p_;
        r += s * mult;
        mult *= p_;
        a /= p_;
        b /= p_;
    }
    return r;
}

std::uint64_t FieldSpec::neg(std::uint64_t a) const {
    if (p_ == 2) return a;
    if (m_ == 1) return a ? p_ - a : 0;
    std::uint64_t r = 0, mult = 1;
    for (unsigned i = 0; i < m_; ++i) {
        std::uint64_t d = a % p_;
        r += (d ? p_ - d : 0) * mult;
        mult *= p_;
        a /= p_;
    }
    return r;
}

std::uint64_t FieldSpec::sub(std::uint64_t a, std::uint64_t b) const {
    return add(a, neg(b));
}

std::uint64_t FieldSpec::mul_digits(std::uint64_t a, std::uint64_t b) const {
    if (m_ == 1) {
        return static_cast<std::uint64_t>(
            static_cast<unsigned __int128>(a) * b % p_);
    }
    std::array<std::uint32_t, kMaxM> da{}, db{};
    std::uint64_t x = a, y = b;
    for (unsigned i = 0; i < m_; ++i) {
        da[i] = static_cast<std::uint32_t>(x % p_);
        db[i] = static_cast<std::uint32_t>(y % p_);
        x /= p_;
        y /= p_;
    }
    std::array<std::uint64_t, 2 * kMaxM> prod{};
    for (unsigned i = 0; i < m_; ++i) {
        if (!da[i]) continue;
        for (unsigned j = 0; j < m_; ++j)
            prod[i + j] += static_cast<std::uint64_t>(da[i]) * db[j];
    }
    for (unsigned k = 2 * m_ - 2; k >= m_; --k) {
        std::uint64_t c = prod[k] % p_;
        if (c) {
            for (unsigned j = 0; j < m_; ++j) {
                std::uint32_t mc = mod_digits_[j];
                if (mc) prod[k - m_ + j] += c * (p_ - mc);
            }
        }
        if (k == m_) break;
    }
    std::uint64_t r = 0, mult = 1;
    for (unsigned i = 0; i < m_; ++i) {
        r += (prod[i] % p_) * mult;
        mult *= p_;
    }
    return r;
}

std::uint64_t FieldSpec::pow_digits(std::uint64_t a, std::uint64_t e) const {
    std::uint64_t r = 1 % q_;
    while (e) {
        if (e & 1) r = mul_digits(r, a);
        a = mul_digits(a, a);
        e >>= 1;
    }
    return r;
}

std::uint64_t FieldSpec::mul(std::uint64_t a, std::uint64_t b) const {
    if (a == 0 || b == 0) return 0;
    return mul_digits(a, b);
}

std::uint64_t FieldSpec::inv(std::uint64_t a) const {
    if (a == 0) throw PreconditionError("inversion of zero");
    return pow_digits(a, q_ - 2);
}

std::uint64_t FieldSpec::div(std::uint64_t a, std::uint64_t b) const {
    return mul(a, inv(b));
}

std::uint64_t FieldSpec::pow(std::uint64_t a, long long e) const {
    if (a == 0) {
        if (e > 0) return 0;
        if (e == 0) return 1 % q_;
        throw PreconditionError("negative power of zero");
    }
    const std::uint64_t n = q_ - 1;
    std::uint64_t em;
    if (n == 0) {
        em = 0;
    } else {
        long long r = e % static_cast<long long>(n);
        if (r < 0) r += static_cast<long long>(n);
        em = static_cast<std::uint64_t>(r);
    }
    return pow_digits(a, em);
}

std::uint64_t FieldSpec::from_int(long long v) const {
    long long r = v % static_cast<long long>(p_);
    if (r < 0) r += static_cast<long long>(p_);
    return static_cast<std::uint64_t>(r);
}

std::uint64_t FieldSpec::sqrt_odd_tonelli(std::uint64_t a) const {
    // Tonelli-Shanks on F_q^*, q odd; caller has verified a is a nonzero square.
    std::uint64_t Q = q_ - 1;
    unsigned S = 0;
    while ((Q & 1) == 0) {
        Q >>= 1;
        ++S;
    }
    std::uint64_t z = 2;
    while (z < q_ && pow(z, static_cast<long long>((q_ - 1) / 2)) == 1) ++z;
    std::uint64_t c = pow(z, static_cast<long long>(Q));
    std::uint64_t x = pow(a, static_cast<long long>((Q + 1) / 2));
    std::uint64_t t = pow(a, static_cast<long long>(Q));
    unsigned mexp = S;
    while (t != 1) {
        std::uint64_t t2 = t;
        unsigned i = 0;
        while (t2 != 1) {
            t2 = mul(t2, t2);
            ++i;
        }
        std::uint64_t b = c;
        for (unsigned j = 0; j + i + 1 < mexp; ++j) b = mul(b, b);
        x = mul(x, b);
        c = mul(b, b);
        t = mul(t, c);
        mexp = i;
    }
    return x;
}

std::pair<bool, std::uint64_t> FieldSpec::sqrt(std::uint64_t a) const {
    if (a == 0) return {true, 0};
    if (p_ == 2) {
        // Frobenius is bijective: the unique root is a^(q/2).
        return {true, pow(a, static_cast<long long>(q_ / 2))};
    }
    if (pow(a, static_cast<long long>((q_ - 1) / 2)) != 1) return {false, 0};
    std::uint64_t r = sqrt_odd_tonelli(a);
    return {true, std::min(r, neg(r))};
}

}  // namespace goodlrc
