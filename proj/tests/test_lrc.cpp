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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "goodlrc/io.hpp"
#include "goodlrc/lrc.hpp"

using namespace goodlrc;

namespace {

LrcCode make_f13_code(std::uint64_t t) {
    FieldPtr F = FieldSpec::parse("13");
    Polynomial g = Polynomial::parse(F, "x^3");
    return lrc_build(g, splitting_covering(g), t);
}

// Gaussian elimination rank oracle over the code's field.
std::size_t rank_oracle(const FieldPtr& Fp, std::vector<std::vector<std::uint64_t>> m) {
    const FieldSpec& F = *Fp;
    std::size_t rank = 0;
    std::size_t cols = m.empty() ? 0 : m[0].size();
    for (std::size_t col = 0; col < cols && rank < m.size(); ++col) {
        std::size_t pivot = rank;
        while (pivot < m.size() && m[pivot][col] == 0) ++pivot;
        if (pivot == m.size()) continue;
        std::swap(m[rank], m[pivot]);
        std::uint64_t inv = F.inv(m[rank][col]);
        for (auto& v : m[rank]) v = F.mul(v, inv);
        for (std::size_t row = 0; row < m.size(); ++row) {
            if (row == rank || m[row][col] == 0) continue;
            std::uint64_t factor = m[row][col];
            for (std::size_t j = 0; j < cols; ++j)
                m[row][j] = F.sub(m[row][j], F.mul(factor, m[rank][j]));
        }
        ++rank;
    }
    return rank;
}

}  // namespace

TEST_CASE("build parameters") {
    LrcCode code = make_f13_code(2);
    CHECK(code.n == 12);
    CHECK(code.k == 4);
    CHECK(code.r == 2);
    CHECK(code.optimal_d == 8);
    CHECK(code.eval_points.size() == 12);
    // frozen order: covering sets by t, elements ascending
    CHECK(code.eval_points[0] == 1);
    CHECK(code.eval_points[1] == 3);
    CHECK(code.eval_points[2] == 9);
    CHECK(code.set_index[3] == 1);

    CHECK_THROWS_AS(make_f13_code(0), PreconditionError);
    CHECK_THROWS_AS(make_f13_code(5), PreconditionError);  // ell = 4
}

TEST_CASE("build rejects foreign or corrupted coverings") {
    FieldPtr F = FieldSpec::parse("13");
    Polynomial g = Polynomial::parse(F, "x^3");
    SplittingCovering cov = splitting_covering(g);
    Polynomial other = Polynomial::parse(F, "x^4");
    CHECK_THROWS_AS(lrc_build(other, cov, 1), PreconditionError);
    SplittingCovering bad = cov;
    bad.sets[0].elems[0] = 2;  // f(2) != 1
    CHECK_THROWS_AS(lrc_build(g, bad, 1), PreconditionError);
}

TEST_CASE("encode basics") {
    LrcCode code = make_f13_code(2);
    std::vector<std::uint64_t> zero(code.k, 0);
    for (auto v : encode(code, zero)) CHECK(v == 0);

    // message (a_00) with only the g(x)^0 x^0 term: constant word
    std::vector<std::uint64_t> constant{5, 0, 0, 0};
    for (auto v : encode(code, constant)) CHECK(v == 5);

    // single x^1 term: word equals the evaluation point
    std::vector<std::uint64_t> linear{0, 0, 1, 0};
    auto word = encode(code, linear);
    for (std::size_t i = 0; i < code.n; ++i) CHECK(word[i] == code.eval_points[i]);

    std::vector<std::uint64_t> wrong(3, 0);
    CHECK_THROWS_AS(encode(code, wrong), PreconditionError);
}

TEST_CASE("encode is linear") {
    LrcCode code = make_f13_code(2);
    const FieldSpec& F = *code.field();
    std::mt19937_64 rng(47);
    std::uniform_int_distribution<std::uint64_t> dist(0, 12);
    for (int iter = 0; iter < 200; ++iter) {
        std::vector<std::uint64_t> a(code.k), b(code.k), sum(code.k);
        for (std::size_t i = 0; i < code.k; ++i) {
            a[i] = dist(rng);
            b[i] = dist(rng);
            sum[i] = F.add(a[i], b[i]);
        }
        auto wa = encode(code, a), wb = encode(code, b), ws = encode(code, sum);
        for (std::size_t i = 0; i < code.n; ++i)
            REQUIRE(ws[i] == F.add(wa[i], wb[i]));
    }
}

TEST_CASE("generator matrix has full rank k") {
    for (std::uint64_t t : {1, 2, 3, 4}) {
        LrcCode code = make_f13_code(t);
        auto rows = generator_matrix(code);
        REQUIRE(rows.size() == code.k);
        REQUIRE(rank_oracle(code.field(), rows) == code.k);
    }
    FieldPtr F4 = FieldSpec::parse("4");
    Polynomial g = Polynomial::parse(F4, "x^2+x");
    LrcCode c4 = lrc_build(g, splitting_covering(g), 2);
    CHECK(rank_oracle(F4, generator_matrix(c4)) == c4.k);
}

TEST_CASE("local repair round-trips randomly erased symbols") {
    LrcCode code = make_f13_code(3);
    std::mt19937_64 rng(53);
    std::uniform_int_distribution<std::uint64_t> sym(0, 12);
    std::uniform_int_distribution<std::size_t> posd(0, code.n - 1);
    for (int iter = 0; iter < 2000; ++iter) {
        std::vector<std::uint64_t> msg(code.k);
        for (auto& m : msg) m = sym(rng);
        auto word = encode(code, msg);
        std::size_t pos = posd(rng);
        ErasureWord w{word, std::vector<bool>(code.n, false)};
        std::uint64_t truth = w.vals[pos];
        w.vals[pos] = 0;
        w.erased[pos] = true;
        REQUIRE(local_repair(code, w, pos) == truth);
    }
}

TEST_CASE("local repair precondition errors") {
    LrcCode code = make_f13_code(2);
    std::vector<std::uint64_t> msg(code.k, 1);
    auto word = encode(code, msg);
    ErasureWord w{word, std::vector<bool>(code.n, false)};
    CHECK_THROWS_AS(local_repair(code, w, 0), PreconditionError);  // not erased
    w.erased[0] = true;
    w.erased[1] = true;  // same local set as 0
    CHECK_THROWS_AS(local_repair(code, w, 0), PreconditionError);
    w.erased[1] = false;
    w.erased[3] = true;  // different set: fine
    CHECK(local_repair(code, w, 0) == word[0]);
    ErasureWord short_word{{1, 2, 3}, {false, false, true}};
    CHECK_THROWS_AS(local_repair(code, short_word, 2), PreconditionError);
}

TEST_CASE("minimum distance meets the optimal bound") {
    CHECK(min_distance_bruteforce(make_f13_code(1)) == 11);
    CHECK(min_distance_bruteforce(make_f13_code(2)) == 8);

    FieldPtr F4 = FieldSpec::parse("4");
    Polynomial g = Polynomial::parse(F4, "x^2+x");
    LrcCode c4 = lrc_build(g, splitting_covering(g), 1);
    CHECK(min_distance_bruteforce(c4) == 4);
    CHECK(c4.optimal_d == 4);

    CHECK_THROWS_AS(min_distance_bruteforce(make_f13_code(2), 100), GuardError);
}

TEST_CASE("sampled distance never beats the true distance") {
    LrcCode code = make_f13_code(2);
    long long exact = min_distance_bruteforce(code);
    long long sampled = distance_upper_bound_sampled(code, 5000, 7);
    CHECK(sampled >= exact);
    CHECK(sampled <= static_cast<long long>(code.n));
}

TEST_CASE("optimal distance formula") {
    CHECK(optimal_distance(12, 4, 2) == 8);
    CHECK(optimal_distance(12, 2, 2) == 11);
    CHECK(optimal_distance(4, 1, 1) == 4);
    CHECK(optimal_distance(68, 51, 3) == 2);  // n=(3+1)*17, k=3*17
    CHECK_THROWS_AS(optimal_distance(4, 5, 1), PreconditionError);
    CHECK_THROWS_AS(optimal_distance(4, 1, 0), PreconditionError);
}

TEST_CASE("code JSON round trip") {
    LrcCode code = make_f13_code(2);
    Json j = code_to_json(code);
    LrcCode back = code_from_json(j);
    CHECK(back.n == code.n);
    CHECK(back.k == code.k);
    CHECK(back.eval_points == code.eval_points);
    CHECK(back.g == code.g);

    Json tampered = j;
    tampered["k"] = 5;
    CHECK_THROWS_AS(code_from_json(tampered), ParseError);
}

TEST_CASE("covering JSON round trip, including extension fields") {
    FieldPtr F = FieldSpec::parse("2^3");
    Polynomial f = Polynomial::parse(F, "x^2+x");
    SplittingCovering cov = splitting_covering(f);
    SplittingCovering back = covering_from_json(covering_to_json(cov));
    CHECK(back.f == cov.f);
    CHECK(back.r == cov.r);
    REQUIRE(back.sets.size() == cov.sets.size());
    for (std::size_t i = 0; i < cov.sets.size(); ++i) {
        CHECK(back.sets[i].t == cov.sets[i].t);
        CHECK(back.sets[i].elems == cov.sets[i].elems);
    }
}

TEST_CASE("codeword text parsing") {
    FieldPtr F = FieldSpec::parse("13");
    ErasureWord w = parse_codeword("1,?,12", F);
    REQUIRE(w.vals.size() == 3);
    CHECK(w.erased[1]);
    CHECK(format_codeword(w) == "1,?,12");
    CHECK_THROWS_AS(parse_codeword("1,13", F), ParseError);
    CHECK_THROWS_AS(parse_codeword("1,x", F), ParseError);
    CHECK_THROWS_AS(parse_message("1,?", F), ParseError);
    CHECK(parse_message("0,1,2", F) == std::vector<std::uint64_t>{0, 1, 2});
}
