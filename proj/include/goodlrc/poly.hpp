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

#ifndef GOODLRC_POLY_HPP
#define GOODLRC_POLY_HPP

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "goodlrc/gf.hpp"

namespace goodlrc {

/**
 * Univariate polynomial over a FieldSpec. Coefficients are canonical codes,
 * constant term first, with no trailing zeros. Immutable value type.
 */
class Polynomial {
   public:
    Polynomial(FieldPtr field, std::vector<std::uint64_t> coeffs);

    static Polynomial zero(FieldPtr field) { return Polynomial(std::move(field), {}); }
    static Polynomial constant(FieldPtr field, std::uint64_t c) {
        return Polynomial(std::move(field), {c});
    }
    static Polynomial x(FieldPtr field) { return Polynomial(std::move(field), {0, 1}); }
    /// prod (X - root_i); roots need not be distinct.
    static Polynomial from_roots(FieldPtr field, std::span<const std::uint64_t> roots);

    /// Grammar: terms c*x^k joined by + or -, c an integer (mapped into the
    /// prime subfield) or #n (canonical encoding). No parentheses/products.
    static Polynomial parse(FieldPtr field, const std::string& text);
    /// Canonical text: descending powers, zero terms omitted, coefficients
    /// printed as integers when in the prime subfield, #n otherwise.
    /// parse(format(f)) == f.
    std::string format() const;

    const FieldPtr& field() const { return field_; }
    const std::vector<std::uint64_t>& coeffs() const { return c_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    bool is_zero() const { return c_.empty(); }
    std::uint64_t coeff(std::size_t k) const { return k < c_.size() ? c_[k] : 0; }
    std::uint64_t leading() const { return c_.empty() ? 0 : c_.back(); }

    /// True iff f is not a polynomial in X^p (equivalently f' != 0).
    bool separable() const;

    std::uint64_t eval(std::uint64_t a) const;
    FieldElement eval(const FieldElement& a) const;

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator-() const;
    bool operator==(const Polynomial& o) const;
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    Polynomial scaled(std::uint64_t c) const;
    Polynomial monic() const;
    Polynomial derivative() const;
    /// Adds c to the constant term (used for f - t0).
    Polynomial plus_constant(std::uint64_t c) const;

    /// Quotient and remainder; divisor must be nonzero.
    std::pair<Polynomial, Polynomial> divmod(const Polynomial& d) const;
    Polynomial operator%(const Polynomial& d) const { return divmod(d).second; }

    /// All roots in F_q with multiplicities, by evaluation sweep over the
    /// field, sorted by encoding. Throws on the zero polynomial.
    std::vector<std::pair<std::uint64_t, int>> roots() const;
    /// deg gcd(f, X^q - X): number of distinct roots in F_q, computed without
    /// sweeping. Kept as an independent oracle for roots().
    int distinct_root_count_gcd() const;

   private:
    void check_same_field(const Polynomial& o) const;

    FieldPtr field_;
    std::vector<std::uint64_t> c_;
};

/// Monic gcd via Euclid; not both zero.
Polynomial poly_gcd(const Polynomial& a, const Polynomial& b);

/// base^e mod f (f with deg >= 1).
Polynomial poly_powmod(const Polynomial& base, std::uint64_t e, const Polynomial& f);

/// X^q mod f, q the field order; deg f >= 1.
Polynomial xq_mod(const Polynomial& f);

/// The root of a polynomial with prime-subfield coefficients that has the
/// smallest canonical encoding in `field`; used to embed subfield generators.
/// Throws PreconditionError if the polynomial has no root in the field.
std::uint64_t smallest_root(const FieldPtr& field,
                            std::span<const std::uint64_t> prime_coeffs);

}  // namespace goodlrc

#endif
