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

#ifndef GOODLRC_GF_HPP
#define GOODLRC_GF_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "goodlrc/errors.hpp"

namespace goodlrc {

class FieldSpec;
using FieldPtr = std::shared_ptr<const FieldSpec>;

/**
 * Exact arithmetic in F_q, q = p^m, on canonical integer codes.
 *
 * An element sum c_i alpha^i (0 <= c_i < p, alpha a root of the modulus) is
 * encoded as the integer sum c_i p^i; the encoding is a bijection
 * {0,...,q-1} <-> F_q and gives the total order used everywhere ties must
 * break deterministically.
 *
 * Immutable after construction; all operations are pure and safe to call
 * concurrently. Arithmetic works directly on base-p digit vectors reduced
 * modulo the modulus (single Montgomery-free mulmod for prime fields); no
 * lookup tables are kept, so construction cost is independent of q.
 */
class FieldSpec {
   public:
    static constexpr std::uint64_t kDefaultGuard = 1ull << 26;

    /// Constructs F_{p^m}. If modulus (coefficient codes, constant term
    /// first, monic of degree m over F_p) is empty, the canonically smallest
    /// monic irreducible of degree m is selected: candidates ordered by the
    /// integer encoding of their non-leading coefficients, irreducibility
    /// checked by trial gcd with X^(p^i) - X for i <= m/2.
    static FieldPtr create(std::uint64_t p, unsigned m,
                           std::vector<std::uint64_t> modulus = {},
                           std::uint64_t guard = kDefaultGuard);

    /// Parses "q" or "p^m"; modulus overrides go through create().
    static FieldPtr parse(const std::string& label,
                          std::uint64_t guard = kDefaultGuard);

    std::uint64_t p() const { return p_; }
    unsigned m() const { return m_; }
    std::uint64_t q() const { return q_; }
    const std::vector<std::uint64_t>& modulus() const { return modulus_; }
    std::string label() const;
    /// Modulus as polynomial text over F_p, e.g. "x^3+x+1".
    std::string modulus_text() const;

    bool operator==(const FieldSpec& o) const {
        return p_ == o.p_ && m_ == o.m_ && modulus_ == o.modulus_;
    }
    bool operator!=(const FieldSpec& o) const { return !(*this == o); }

    // Arithmetic on canonical codes. All arguments must be < q.
    std::uint64_t add(std::uint64_t a, std::uint64_t b) const;
    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const;
    std::uint64_t neg(std::uint64_t a) const;
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const;
    std::uint64_t inv(std::uint64_t a) const;  // throws on a == 0
    std::uint64_t div(std::uint64_t a, std::uint64_t b) const;
    /// Square-and-multiply; negative exponents require a nonzero base.
    std::uint64_t pow(std::uint64_t a, long long e) const;

    /// Maps an integer into the prime subfield (value mod p).
    std::uint64_t from_int(long long v) const;
    /// True iff the element lies in the prime subfield F_p.
    bool in_prime_subfield(std::uint64_t a) const { return a < p_; }

    /// (flag, root): flag true iff a is a square; root then is the square
    /// root with the smaller canonical encoding. Every element of an even
    /// characteristic field is a square.
    std::pair<bool, std::uint64_t> sqrt(std::uint64_t a) const;
    bool is_square(std::uint64_t a) const { return sqrt(a).first; }

   private:
    FieldSpec() = default;

    std::uint64_t mul_digits(std::uint64_t a, std::uint64_t b) const;
    std::uint64_t pow_digits(std::uint64_t a, std::uint64_t e) const;
    std::uint64_t sqrt_odd_tonelli(std::uint64_t a) const;

    std::uint64_t p_ = 0;
    unsigned m_ = 0;
    std::uint64_t q_ = 0;
    std::vector<std::uint64_t> modulus_;  // constant first, monic, length m+1
    std::vector<std::uint32_t> mod_digits_;  // non-leading coefficients
};

/// A field element bound to its field; binary operations check that both
/// operands share the same FieldSpec.
class FieldElement {
   public:
    FieldElement() = default;
    FieldElement(FieldPtr f, std::uint64_t code) : f_(std::move(f)), code_(code) {
        if (code_ >= f_->q()) throw ParseError("element code out of range");
    }

    std::uint64_t code() const { return code_; }
    const FieldPtr& field() const { return f_; }

    FieldElement operator+(const FieldElement& o) const { return make(f_->add(code_, check(o))); }
    FieldElement operator-(const FieldElement& o) const { return make(f_->sub(code_, check(o))); }
    FieldElement operator*(const FieldElement& o) const { return make(f_->mul(code_, check(o))); }
    FieldElement operator/(const FieldElement& o) const { return make(f_->div(code_, check(o))); }
    FieldElement operator-() const { return make(f_->neg(code_)); }
    FieldElement inv() const { return make(f_->inv(code_)); }
    FieldElement pow(long long e) const { return make(f_->pow(code_, e)); }

    bool operator==(const FieldElement& o) const { return code_ == check(o); }
    bool operator!=(const FieldElement& o) const { return !(*this == o); }

   private:
    FieldElement make(std::uint64_t c) const { return FieldElement(f_, c); }
    std::uint64_t check(const FieldElement& o) const {
        if (!f_ || !o.f_ || *f_ != *o.f_)
            throw PreconditionError("operands belong to different fields");
        return o.code_;
    }

    FieldPtr f_;
    std::uint64_t code_ = 0;
};

bool is_prime(std::uint64_t n);

/// Factors a prime power q = p^m; throws PreconditionError otherwise.
std::pair<std::uint64_t, unsigned> factor_prime_power(std::uint64_t q);

}  // namespace goodlrc

#endif
