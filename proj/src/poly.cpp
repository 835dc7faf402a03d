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

#include "goodlrc/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace goodlrc {

namespace {
constexpr std::uint64_t kMaxExponent = 1u << 20;
}

Polynomial::Polynomial(FieldPtr field, std::vector<std::uint64_t> coeffs)
    : field_(std::move(field)), c_(std::move(coeffs)) {
    if (!field_) throw PreconditionError("polynomial needs a field");
    for (auto c : c_)
        if (c >= field_->q()) throw ParseError("coefficient code out of range");
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Polynomial Polynomial::from_roots(FieldPtr field,
                                  std::span<const std::uint64_t> roots) {
    std::vector<std::uint64_t> c{1};
    const FieldSpec& F = *field;
    for (auto r : roots) {
        // multiply by (X - r)
        std::vector<std::uint64_t> next(c.size() + 1, 0);
        std::uint64_t nr = F.neg(r);
        for (std::size_t i = 0; i < c.size(); ++i) {
            next[i + 1] = F.add(next[i + 1], c[i]);
            next[i] = F.add(next[i], F.mul(c[i], nr));
        }
        c = std::move(next);
    }
    return Polynomial(std::move(field), std::move(c));
}

void Polynomial::check_same_field(const Polynomial& o) const {
    if (*field_ != *o.field_)
        throw PreconditionError("polynomials belong to different fields");
}

bool Polynomial::separable() const {
    // f is in F_q[X^p] exactly when its formal derivative vanishes.
    return !derivative().is_zero();
}

std::uint64_t Polynomial::eval(std::uint64_t a) const {
    if (c_.empty()) return 0;
    if (a == 0) return c_[0];
    const FieldSpec& F = *field_;
    // Sparse-aware Horner: gaps of zero coefficients are bridged with pow.
    std::uint64_t result = 0;
    std::size_t prev = c_.size() - 1;
    result = c_[prev];
    for (std::size_t k = prev; k-- > 0;) {
        if (c_[k] == 0) continue;
        std::uint64_t gap = prev - k;
        result = F.mul(result, gap == 1 ? a : F.pow(a, static_cast<long long>(gap)));
        result = F.add(result, c_[k]);
        prev = k;
    }
    if (prev > 0)
        result = F.mul(result, F.pow(a, static_cast<long long>(prev)));
    return result;
}

FieldElement Polynomial::eval(const FieldElement& a) const {
    if (*a.field() != *field_)
        throw PreconditionError("evaluation point from a different field");
    return FieldElement(field_, eval(a.code()));
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    check_same_field(o);
    std::vector<std::uint64_t> c(std::max(c_.size(), o.c_.size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] = field_->add(coeff(i), o.coeff(i));
    return Polynomial(field_, std::move(c));
}

Polynomial Polynomial::operator-() const {
    std::vector<std::uint64_t> c(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) c[i] = field_->neg(c_[i]);
    return Polynomial(field_, std::move(c));
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
    check_same_field(o);
    if (c_.empty() || o.c_.empty()) return zero(field_);
    std::vector<std::uint64_t> c(c_.size() + o.c_.size() - 1, 0);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (!c_[i]) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j)
            c[i + j] = field_->add(c[i + j], field_->mul(c_[i], o.c_[j]));
    }
    return Polynomial(field_, std::move(c));
}

bool Polynomial::operator==(const Polynomial& o) const {
    return *field_ == *o.field_ && c_ == o.c_;
}

Polynomial Polynomial::scaled(std::uint64_t s) const {
    std::vector<std::uint64_t> c(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) c[i] = field_->mul(c_[i], s);
    return Polynomial(field_, std::move(c));
}

Polynomial Polynomial::monic() const {
    if (c_.empty()) return *this;
    return scaled(field_->inv(c_.back()));
}

Polynomial Polynomial::derivative() const {
    if (c_.size() <= 1) return zero(field_);
    std::vector<std::uint64_t> c(c_.size() - 1, 0);
    for (std::size_t k = 1; k < c_.size(); ++k) {
        std::uint64_t factor = field_->from_int(static_cast<long long>(k));
        c[k - 1] = field_->mul(c_[k], factor);
    }
    return Polynomial(field_, std::move(c));
}

Polynomial Polynomial::plus_constant(std::uint64_t c) const {
    std::vector<std::uint64_t> v = c_;
    if (v.empty()) v.push_back(0);
    v[0] = field_->add(v[0], c);
    return Polynomial(field_, std::move(v));
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& d) const {
    check_same_field(d);
    if (d.is_zero()) throw PreconditionError("division by the zero polynomial");
    if (degree() < d.degree()) return {zero(field_), *this};
    const FieldSpec& F = *field_;
    std::vector<std::uint64_t> rem = c_;
    std::vector<std::uint64_t> quot(c_.size() - d.c_.size() + 1, 0);
    const std::uint64_t lead_inv = F.inv(d.c_.back());
    const std::size_t dn = d.c_.size();
    for (std::size_t ki = rem.size(); ki >= dn; --ki) {
        const std::size_t k = ki - 1;
        if (rem[k] == 0) continue;
        std::uint64_t factor = F.mul(rem[k], lead_inv);
        std::size_t shift = k - (dn - 1);
        quot[shift] = factor;
        for (std::size_t j = 0; j < dn; ++j)
            rem[shift + j] = F.sub(rem[shift + j], F.mul(factor, d.c_[j]));
    }
    return {Polynomial(field_, std::move(quot)), Polynomial(field_, std::move(rem))};
}

std::vector<std::pair<std::uint64_t, int>> Polynomial::roots() const {
    if (is_zero()) throw PreconditionError("the zero polynomial has no root set");
    std::vector<std::pair<std::uint64_t, int>> out;
    if (degree() == 0) return out;
    const FieldSpec& F = *field_;
    for (std::uint64_t a = 0; a < F.q(); ++a) {
        if (eval(a) != 0) continue;
        // multiplicity by repeated division by (X - a)
        int mult = 0;
        Polynomial linear(field_, {F.neg(a), 1});
        Polynomial cur = *this;
        for (;;) {
            auto [q, r] = cur.divmod(linear);
            if (!r.is_zero()) break;
            ++mult;
            cur = std::move(q);
            if (cur.degree() < 1) break;
        }
        out.emplace_back(a, mult);
    }
    return out;
}

int Polynomial::distinct_root_count_gcd() const {
    if (is_zero()) throw PreconditionError("the zero polynomial has no root set");
    if (degree() == 0) return 0;
    Polynomial r = xq_mod(*this);                       // X^q mod f
    Polynomial d = r - (Polynomial::x(field_) % *this);  // (X^q - X) mod f
    Polynomial g = poly_gcd(*this, d);
    return g.degree();
}

Polynomial poly_gcd(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() && b.is_zero())
        throw PreconditionError("gcd of two zero polynomials");
    Polynomial x = a, y = b;
    while (!y.is_zero()) {
        Polynomial r = x % y;
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

Polynomial poly_powmod(const Polynomial& base, std::uint64_t e, const Polynomial& f) {
    if (f.degree() < 1) throw PreconditionError("modulus polynomial must have degree >= 1");
    Polynomial r = Polynomial::constant(base.field(), 1) % f;
    Polynomial b = base % f;
    while (e) {
        if (e & 1) r = (r * b) % f;
        b = (b * b) % f;
        e >>= 1;
    }
    return r;
}

Polynomial xq_mod(const Polynomial& f) {
    return poly_powmod(Polynomial::x(f.field()), f.field()->q(), f);
}

std::uint64_t smallest_root(const FieldPtr& field,
                            std::span<const std::uint64_t> prime_coeffs) {
    std::vector<std::uint64_t> coeffs(prime_coeffs.begin(), prime_coeffs.end());
    for (auto c : coeffs)
        if (c >= field->p())
            throw PreconditionError("coefficient not in the prime subfield");
    Polynomial f(field, std::move(coeffs));
    for (std::uint64_t a = 0; a < field->q(); ++a)
        if (f.eval(a) == 0) return a;
    throw PreconditionError("polynomial has no root in " + field->label());
}

// --- text grammar ---

Polynomial Polynomial::parse(FieldPtr field, const std::string& text) {
    const FieldSpec& F = *field;
    std::vector<std::uint64_t> coeffs;
    auto bump = [&](std::uint64_t k, std::uint64_t code) {
        if (coeffs.size() <= k) coeffs.resize(k + 1, 0);
        coeffs[k] = F.add(coeffs[k], code);
    };

    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    auto read_uint = [&](std::uint64_t mod) -> std::uint64_t {
        if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
            throw ParseError("expected an integer at position " + std::to_string(i));
        std::uint64_t v = 0;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            v = v * 10 + static_cast<std::uint64_t>(text[i] - '0');
            if (mod) v %= mod;
            if (!mod && v > kMaxExponent) throw ParseError("integer literal too large");
            ++i;
        }
        return v;
    };

    skip_ws();
    if (i >= text.size()) throw ParseError("empty polynomial text");
    bool first = true;
    while (true) {
        skip_ws();
        if (i >= text.size()) break;
        bool negative = false;
        if (text[i] == '+' || text[i] == '-') {
            negative = text[i] == '-';
            ++i;
            skip_ws();
        } else if (!first) {
            throw ParseError(std::string("unexpected character '") + text[i] + "'");
        }
        first = false;

        bool have_coeff = false;
        std::uint64_t code = 1;
        if (i < text.size() && text[i] == '#') {
            ++i;
            std::uint64_t save = i;
            // full encoding: read without modular folding
            if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
                throw ParseError("expected an encoding after '#'");
            std::uint64_t v = 0;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
                v = v * 10 + static_cast<std::uint64_t>(text[i] - '0');
                if (v >= F.q()) throw ParseError("encoding out of range at position " +
                                                 std::to_string(save));
                ++i;
            }
            code = v;
            have_coeff = true;
        } else if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            code = read_uint(F.p());
            have_coeff = true;
        }
        skip_ws();
        if (i < text.size() && text[i] == '*') {
            if (!have_coeff) throw ParseError("'*' without a coefficient");
            ++i;
            skip_ws();
            if (i >= text.size() || (text[i] != 'x' && text[i] != 'X'))
                throw ParseError("'*' must be followed by x");
        }
        std::uint64_t k = 0;
        if (i < text.size() && (text[i] == 'x' || text[i] == 'X')) {
            ++i;
            k = 1;
            skip_ws();
            if (i < text.size() && text[i] == '^') {
                ++i;
                skip_ws();
                k = read_uint(0);
            }
        } else if (!have_coeff) {
            throw ParseError(i < text.size()
                                 ? std::string("unexpected character '") + text[i] + "'"
                                 : std::string("dangling sign"));
        }
        bump(k, negative ? F.neg(code) : code);
        skip_ws();
        if (i < text.size() && text[i] != '+' && text[i] != '-')
            throw ParseError(std::string("unexpected character '") + text[i] + "'");
    }
    return Polynomial(std::move(field), std::move(coeffs));
}

std::string Polynomial::format() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = c_.size(); k-- > 0;) {
        std::uint64_t c = c_[k];
        if (!c) continue;
        if (!first) os << "+";
        first = false;
        std::string ctext = field_->in_prime_subfield(c)
                                ? std::to_string(c)
                                : "#" + std::to_string(c);
        if (k == 0) {
            os << ctext;
        } else {
            if (c != 1) os << ctext << "*";
            os << "x";
            if (k > 1) os << "^" << k;
        }
    }
    return os.str();
}

}  // namespace goodlrc
