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

#ifndef GOODLRC_GOODPOLY_HPP
#define GOODLRC_GOODPOLY_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "goodlrc/poly.hpp"

namespace goodlrc {

/**
 * The full-size fibers of a polynomial: the list of pairs (t, A) with
 * |A| = deg f and f(A) = {t}. Sets are sorted by the encoding of t, each A
 * sorted by element encoding, so serialized coverings are byte-comparable.
 */
struct SplittingCovering {
    struct Fiber {
        std::uint64_t t;
        std::vector<std::uint64_t> elems;
    };

    Polynomial f;
    std::uint64_t r = 0;  // deg f - 1
    std::vector<Fiber> sets;

    std::uint64_t ell() const { return sets.size(); }
    std::uint64_t cap() const { return f.field()->q() / (r + 1); }
};

/// Provenance tag recorded by the family constructors; bound selection is
/// driven by this tag, never inferred from the coefficients.
enum class Family { none, monomial, additive, deg3, deg4, deg6, from_roots };

std::string family_name(Family f);
Family family_from_name(const std::string& name);

struct FamilyInfo {
    Family tag = Family::none;
    std::vector<std::uint64_t> params;  // meaning depends on the tag
    std::uint64_t promised_ell = 0;     // 0 when the family gives no exact count
    bool degenerate = false;            // e.g. additive subgroup = whole field
};

struct ConstructedPoly {
    Polynomial poly;
    FamilyInfo info;
};

struct GoodPolyReport {
    Polynomial f;
    std::uint64_t r = 0;
    std::uint64_t ell_measured = 0;
    std::uint64_t cap = 0;
    std::optional<long long> bound_lower;
    std::optional<long long> bound_upper;
    Family family_tag = Family::none;
};

/// Single pass over F_q grouping preimages by value; emits the groups of
/// size deg f. ell() of the result is the maximal ell for which f is
/// (r,ell)-good.
SplittingCovering splitting_covering(const Polynomial& f);

/// True iff f - t0 factors into deg f distinct linear factors, tested as
/// f - t0 | X^q - X. Independent of the fiber scan; the two form an
/// oracle pair.
bool is_totally_split_at(const Polynomial& f, std::uint64_t t0);

/// Measured (r, ell) data with theorem bounds attached when the family tag
/// pins one.
GoodPolyReport good_params(const Polynomial& f, const FamilyInfo* family = nullptr);

/// X^m for m | q-1, m >= 2; promised ell = (q-1)/m.
ConstructedPoly construct_monomial(const FieldPtr& field, std::uint64_t m);

/// prod_{v in V}(X - v) for V the F_p-span of the generators (checked
/// independent); promised ell = q/#V. V = F_q is allowed but flagged
/// degenerate.
ConstructedPoly construct_additive(const FieldPtr& field,
                                   std::span<const std::uint64_t> generators);

/// x(x-1)(x-b), b not in {0,1}.
ConstructedPoly construct_deg3(const FieldPtr& field, std::uint64_t b);
/// X^4 + aX^2, q odd >= 5, a != 0.
ConstructedPoly construct_deg4(const FieldPtr& field, std::uint64_t a);
/// (X^3 - aX)^2, q odd, char != 3, a a non-square.
ConstructedPoly construct_deg6(const FieldPtr& field, std::uint64_t a);
/// prod_{b in B}(X - b), B distinct, gcd(q, (#B)!) = 1.
ConstructedPoly construct_from_roots(const FieldPtr& field,
                                     std::span<const std::uint64_t> roots);

/// Re-checks constancy, fiber sizes, disjointness and the cap. Diagnostics
/// are appended on failure when a sink is given.
bool verify_covering(const SplittingCovering& c,
                     std::vector<std::string>* diagnostics = nullptr);

/// True certifies that the constants field of the splitting field of f - t
/// is trivial (a totally split value exists). False proves nothing.
/// Requires separable f.
bool constants_field_certificate(const Polynomial& f);

}  // namespace goodlrc

#endif
