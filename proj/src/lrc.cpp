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

#include "goodlrc/lrc.hpp"

#include <algorithm>
#include <random>

namespace goodlrc {

LrcCode lrc_build(const Polynomial& g, const SplittingCovering& covering,
                  std::uint64_t t) {
    if (covering.f != g)
        throw PreconditionError("covering does not belong to this polynomial");
    std::vector<std::string> diags;
    if (!verify_covering(covering, &diags)) {
        std::string msg = "covering verification failed";
        for (const auto& d : diags) msg += "; " + d;
        throw PreconditionError(msg);
    }
    const std::uint64_t ell = covering.ell();
    if (t < 1 || t > ell)
        throw PreconditionError("t must satisfy 1 <= t <= ell = " + std::to_string(ell));
    const std::uint64_t r = covering.r;
    if (r < 1) throw PreconditionError("locality r must be >= 1");

    LrcCode code{g, covering, t, r, (r + 1) * ell, r * t, {}, {}, 0};
    code.eval_points.reserve(code.n);
    code.set_index.reserve(code.n);
    for (std::size_t s = 0; s < covering.sets.size(); ++s) {
        for (auto a : covering.sets[s].elems) {
            code.eval_points.push_back(a);
            code.set_index.push_back(static_cast<std::uint32_t>(s));
        }
    }
    code.optimal_d = optimal_distance(static_cast<long long>(code.n),
                                      static_cast<long long>(code.k),
                                      static_cast<long long>(r));
    return code;
}

std::vector<std::uint64_t> encode(const LrcCode& code,
                                  std::span<const std::uint64_t> message) {
    if (message.size() != code.k)
        throw PreconditionError("message length must be k = " + std::to_string(code.k));
    const FieldSpec& F = *code.field();
    std::vector<std::uint64_t> word(code.n, 0);
    for (std::size_t pos = 0; pos < code.n; ++pos) {
        const std::uint64_t x = code.eval_points[pos];
        const std::uint64_t gx = code.g.eval(x);
        // f_a(x) = sum_i x^i * (sum_j a[i*t+j] g(x)^j)
        std::uint64_t acc = 0;
        std::uint64_t xi = 1;
        for (std::uint64_t i = 0; i < code.r; ++i) {
            std::uint64_t inner = 0;
            std::uint64_t gj = 1;
            for (std::uint64_t j = 0; j < code.t; ++j) {
                inner = F.add(inner, F.mul(message[i * code.t + j], gj));
                gj = F.mul(gj, gx);
            }
            acc = F.add(acc, F.mul(inner, xi));
            xi = F.mul(xi, x);
        }
        word[pos] = acc;
    }
    return word;
}

std::vector<std::vector<std::uint64_t>> generator_matrix(const LrcCode& code) {
    std::vector<std::vector<std::uint64_t>> rows;
    rows.reserve(code.k);
    std::vector<std::uint64_t> unit(code.k, 0);
    for (std::uint64_t idx = 0; idx < code.k; ++idx) {
        unit[idx] = 1;
        rows.push_back(encode(code, unit));
        unit[idx] = 0;
    }
    return rows;
}

std::uint64_t local_repair(const LrcCode& code, const ErasureWord& w, std::size_t pos) {
    if (w.vals.size() != code.n || w.erased.size() != code.n)
        throw PreconditionError("codeword length must be n = " + std::to_string(code.n));
    if (pos >= code.n || !w.erased[pos])
        throw PreconditionError("repair position must be erased");
    const std::uint32_t set = code.set_index[pos];
    std::vector<std::size_t> survivors;
    for (std::size_t i = 0; i < code.n; ++i) {
        if (code.set_index[i] != set || i == pos) continue;
        if (w.erased[i])
            throw PreconditionError("more than one erasure in the local set");
        survivors.push_back(i);
    }
    // On a local set g is constant, so f_a restricted to it has degree
    // <= r-1: interpolate through the r survivors and evaluate at pos.
    const FieldSpec& F = *code.field();
    const std::uint64_t x0 = code.eval_points[pos];
    std::uint64_t acc = 0;
    for (std::size_t i : survivors) {
        std::uint64_t num = 1, den = 1;
        const std::uint64_t xi = code.eval_points[i];
        for (std::size_t j : survivors) {
            if (j == i) continue;
            const std::uint64_t xj = code.eval_points[j];
            num = F.mul(num, F.sub(x0, xj));
            den = F.mul(den, F.sub(xi, xj));
        }
        acc = F.add(acc, F.mul(w.vals[i], F.div(num, den)));
    }
    return acc;
}

long long min_distance_bruteforce(const LrcCode& code, std::uint64_t guard) {
    const FieldSpec& F = *code.field();
    const std::uint64_t q = F.q();
    // q^k enumerations, guarded
    std::uint64_t total = 1;
    for (std::uint64_t i = 0; i < code.k; ++i) {
        if (total > guard / q)
            throw GuardError(
                "q^k exceeds the enumeration guard; use the sampled upper bound");
        total *= q;
    }
    auto rows = generator_matrix(code);
    std::vector<std::uint64_t> msg(code.k, 0);
    std::vector<std::uint64_t> word(code.n);
    long long best = static_cast<long long>(code.n) + 1;
    for (std::uint64_t counter = 1; counter < total; ++counter) {
        // odometer increment
        for (std::uint64_t i = 0; i < code.k; ++i) {
            if (++msg[i] < q) break;
            msg[i] = 0;
        }
        std::fill(word.begin(), word.end(), 0);
        for (std::uint64_t i = 0; i < code.k; ++i) {
            if (!msg[i]) continue;
            for (std::uint64_t c = 0; c < code.n; ++c)
                word[c] = F.add(word[c], F.mul(msg[i], rows[i][c]));
        }
        long long wt = 0;
        for (auto v : word) wt += v != 0;
        best = std::min(best, wt);
    }
    return best;
}

long long distance_upper_bound_sampled(const LrcCode& code, std::uint64_t trials,
                                       std::uint64_t seed) {
    const FieldSpec& F = *code.field();
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::uint64_t> dist(0, F.q() - 1);
    std::vector<std::uint64_t> msg(code.k);
    long long best = static_cast<long long>(code.n) + 1;
    for (std::uint64_t trial = 0; trial < trials; ++trial) {
        bool nonzero = false;
        for (auto& m : msg) {
            m = dist(rng);
            nonzero |= m != 0;
        }
        if (!nonzero) continue;
        auto word = encode(code, msg);
        long long wt = 0;
        for (auto v : word) wt += v != 0;
        best = std::min(best, wt);
    }
    return best;
}

long long optimal_distance(long long n, long long k, long long r) {
    if (r < 1) throw PreconditionError("locality r must be >= 1");
    if (k > n) throw PreconditionError("k must not exceed n");
    return n - k - (k + r - 1) / r + 2;
}

}  // namespace goodlrc
