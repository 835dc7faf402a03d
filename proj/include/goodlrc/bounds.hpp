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

#ifndef GOODLRC_BOUNDS_HPP
#define GOODLRC_BOUNDS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

#include "goodlrc/goodpoly.hpp"
#include "goodlrc/poly.hpp"

namespace goodlrc {

using BigInt = boost::multiprecision::cpp_int;

/**
 * Theorem-supplied parameters for the split-place count estimate. This
 * module never computes Galois-theoretic objects; the profile carries them.
 */
struct TheoremProfile {
    long long G_order = 1;       // size of the monodromy group
    long long genus = 0;         // genus of the splitting field, or an upper bound
    long long ram1 = 1;          // ramified degree-1 places (infinity included)
    bool constants_trivial = false;  // constants field equals F_q
};

struct BoundReport {
    std::uint64_t q = 0;
    Family family_tag = Family::none;
    std::uint64_t r = 0;
    long long lower = 0;
    std::optional<long long> upper;
    long long main_term = 0;  // ceil((q+1)/(r+1)!)
    std::optional<long long> threshold;
    std::string case_label;
};

/// Exact ceil((A - B*sqrt(q))/D) and floor((A + B*sqrt(q))/D), decided by
/// integer arithmetic on squared forms (B >= 0, D > 0). All paper-facing
/// ceilings route through these so values near integer boundaries are
/// bit-exact.
long long ceil_sub_sqrt(const BigInt& A, const BigInt& B, const BigInt& D,
                        const BigInt& q);
long long floor_add_sqrt(const BigInt& A, const BigInt& B, const BigInt& D,
                         const BigInt& q);

/// Real-valued count bounds: lower = (q+1-2g*sqrt(q))/#G - ram1/2,
/// upper = (q+1+2g*sqrt(q))/#G. For display; integer claims use the exact
/// variants below. Requires constants_trivial.
std::pair<double, double> split_count_bounds(std::uint64_t q,
                                             const TheoremProfile& profile);
long long split_count_lower_ceil(std::uint64_t q, const TheoremProfile& profile);
long long split_count_upper_floor(std::uint64_t q, const TheoremProfile& profile);

/// Smallest integer C with (C+1-2g*sqrt(C))/#G - ram1/2 > 0, by ascending
/// scan. Requires constants_trivial.
long long threshold_C(const TheoremProfile& profile);

/// floor(((n-2)#G + 2)/2); caller asserts p does not divide #G.
long long genus_bound(int n, long long G_order);

/// 1 + number of distinct roots of f' in F_q (the 1 is the place at
/// infinity). Requires separable f.
long long ram1_count(const Polynomial& f);

/// Per-family lower bound (and upper bound where the group order is pinned
/// exactly), chosen by the constructor's provenance tag. Hypotheses are
/// re-checked; violations throw PreconditionError naming the hypothesis.
BoundReport theorem_bound(const FieldPtr& field, const FamilyInfo& family);

/// The cubic lower-bound format ceil((q+1-2*sqrt(q))/6 - 1) used by the
/// reference columns of the degree-3 scan tables.
long long cubic_table_bound(std::uint64_t q);

/// Generic estimate ceil(((q+1)-2g*sqrt(q))/(r+1)! - (r+1)/2) with the genus
/// supplied by the caller; advisory.
long long generic_bound(std::uint64_t q, std::uint64_t r, long long genus);

/// ceil(binomial(q, r+1)/q^r), exact big-integer arithmetic.
BigInt baseline_tamo_barg(std::uint64_t q, std::uint64_t r);

BigInt factorial(std::uint64_t n);

}  // namespace goodlrc

#endif
