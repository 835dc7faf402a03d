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

#ifndef GOODLRC_LRC_HPP
#define GOODLRC_LRC_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "goodlrc/goodpoly.hpp"

namespace goodlrc {

/**
 * An optimal locally recoverable code built from a good polynomial g and its
 * splitting covering: n = (r+1)*ell, k = r*t, and messages encode as
 * evaluations of f_a(X) = sum_{i<r} sum_{j<t} a[i*t+j] g(X)^j X^i at the
 * frozen evaluation points (covering order, elements in encoding order).
 *
 * Messages are flattened row-major with i outer and j inner. Codes are
 * immutable after build; encode and repair are pure.
 */
struct LrcCode {
    Polynomial g;
    SplittingCovering covering;
    std::uint64_t t = 0;
    std::uint64_t r = 0;
    std::uint64_t n = 0;
    std::uint64_t k = 0;
    std::vector<std::uint64_t> eval_points;
    std::vector<std::uint32_t> set_index;  // position -> covering set
    long long optimal_d = 0;               // n - k - ceil(k/r) + 2

    const FieldPtr& field() const { return g.field(); }
};

/// A codeword with erasures: vals aligned with eval_points, erased[i] true
/// marks position i unknown.
struct ErasureWord {
    std::vector<std::uint64_t> vals;
    std::vector<bool> erased;
};

LrcCode lrc_build(const Polynomial& g, const SplittingCovering& covering,
                  std::uint64_t t);

std::vector<std::uint64_t> encode(const LrcCode& code,
                                  std::span<const std::uint64_t> message);

/// Row basis: encodings of the unit messages, in message order.
std::vector<std::vector<std::uint64_t>> generator_matrix(const LrcCode& code);

/// Recovers the erased symbol at pos by Lagrange interpolation over the r
/// surviving positions of its local set. Requires pos erased and exactly one
/// erasure in that set.
std::uint64_t local_repair(const LrcCode& code, const ErasureWord& w, std::size_t pos);

/// Exact minimum distance by enumerating all q^k - 1 nonzero messages;
/// throws GuardError if q^k exceeds the guard.
long long min_distance_bruteforce(const LrcCode& code,
                                  std::uint64_t guard = 10'000'000);

/// Randomized weight search: an upper bound on the distance only.
long long distance_upper_bound_sampled(const LrcCode& code, std::uint64_t trials,
                                       std::uint64_t seed = 1);

/// n - k - ceil(k/r) + 2.
long long optimal_distance(long long n, long long k, long long r);

}  // namespace goodlrc

#endif
