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

#include "goodlrc/poly.hpp"

using namespace goodlrc;

namespace {

Polynomial random_poly(const FieldPtr& F, int deg, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::uint64_t> dist(0, F->q() - 1);
    std::vector<std::uint64_t> c(static_cast<std::size_t>(deg) + 1);
    for (auto& v : c) v = dist(rng);
    if (c.back() == 0) c.back() = 1;
    return Polynomial(F, c);
}

// Evaluation oracle independent of the sparse Horner path: plain power sums.
std::uint64_t eval_oracle(const Polynomial& f, std::uint64_t a) {
    const FieldSpec& F = *f.field();
    std::uint64_t acc = 0;
    for (std::size_t k = 0; k < f.coeffs().size(); ++k)
        acc = F.add(acc, F.mul(f.coeffs()[k], F.pow(a, static_cast<long long>(k))));
    return acc;
}

}  // namespace

TEST_CASE("construction normalizes trailing zeros") {
    FieldPtr F = FieldSpec::parse("13");
    Polynomial f(F, {1, 2, 0, 0});
    CHECK(f.degree() == 1);
    CHECK(Polynomial(F, {0, 0}).is_zero());
    CHECK(Polynomial::zero(F).degree() == -1);
    CHECK(Polynomial::x(F).degree() == 1);
}

TEST_CASE("parsing") {
    FieldPtr F = FieldSpec::parse("13");
    CHECK(Polynomial::parse(F, "x^3") == Polynomial(F, {0, 0, 0, 1}));
    CHECK(Polynomial::parse(F, "x^4+7*x^2") == Polynomial(F, {0, 0, 7, 0, 1}));
    CHECK(Polynomial::parse(F, "x^2 - 3*x + 26") == Polynomial(F, {0, 10, 1}));
    CHECK(Polynomial::parse(F, "5") == Polynomial::constant(F, 5));
    CHECK(Polynomial::parse(F, "-x") == Polynomial(F, {0, 12}));
    CHECK(Polynomial::parse(F, "0") == Polynomial::zero(F));
    CHECK_THROWS_AS(Polynomial::parse(F, "x*(x+1)"), ParseError);
    CHECK_THROWS_AS(Polynomial::parse(F, ""), ParseError);
    CHECK_THROWS_AS(Polynomial::parse(F, "x^"), ParseError);
    CHECK_THROWS_AS(Polynomial::parse(F, "y+1"), ParseError);

    FieldPtr E = FieldSpec::parse("2^3");
    // #n denotes a canonical encoding outside the prime subfield
    CHECK(Polynomial::parse(E, "x+#5") == Polynomial(E, {5, 1}));
    CHECK_THROWS_AS(Polynomial::parse(E, "#9"), ParseError);  // 9 >= q

    FieldPtr F4 = FieldSpec::parse("2^2");
    CHECK(Polynomial::parse(F4, "#3*x + 1") == Polynomial(F4, {1, 3}));
}

TEST_CASE("format and round-trip") {
    FieldPtr F = FieldSpec::parse("13");
    CHECK(Polynomial(F, {0, 0, 7, 0, 1}).format() == "x^4+7*x^2");
    CHECK(Polynomial(F, {5}).format() == "5");
    CHECK(Polynomial::zero(F).format() == "0");
    CHECK(Polynomial(F, {12, 1}).format() == "x+12");

    std::mt19937_64 rng(3);
    for (const char* label : {"13", "2^3", "5^3"}) {
        FieldPtr K = FieldSpec::parse(label);
        for (int iter = 0; iter < 200; ++iter) {
            Polynomial f = random_poly(K, static_cast<int>(rng() % 7), rng);
            CHECK(Polynomial::parse(K, f.format()) == f);
        }
    }
}

TEST_CASE("evaluation matches the power-sum oracle") {
    std::mt19937_64 rng(5);
    for (const char* label : {"101", "2^5", "7^2"}) {
        FieldPtr F = FieldSpec::parse(label);
        for (int iter = 0; iter < 50; ++iter) {
            Polynomial f = random_poly(F, static_cast<int>(rng() % 9), rng);
            for (std::uint64_t a = 0; a < F->q(); ++a)
                REQUIRE(f.eval(a) == eval_oracle(f, a));
        }
        // sparse polynomials exercise the gap-bridging path
        Polynomial g = Polynomial::parse(F, "x^50+3*x^7+1");
        for (std::uint64_t a = 0; a < F->q(); ++a)
            REQUIRE(g.eval(a) == eval_oracle(g, a));
    }
}

TEST_CASE("ring operations") {
    FieldPtr F = FieldSpec::parse("13");
    std::mt19937_64 rng(9);
    for (int iter = 0; iter < 300; ++iter) {
        Polynomial a = random_poly(F, static_cast<int>(rng() % 6), rng);
        Polynomial b = random_poly(F, static_cast<int>(rng() % 6), rng);
        Polynomial c = random_poly(F, static_cast<int>(rng() % 6), rng);
        REQUIRE(a + b == b + a);
        REQUIRE(a * b == b * a);
        REQUIRE(a * (b + c) == a * b + a * c);
        REQUIRE((a - a).is_zero());
        // evaluation is a ring homomorphism
        std::uint64_t x = rng() % 13;
        REQUIRE((a * b).eval(x) == F->mul(a.eval(x), b.eval(x)));
        REQUIRE((a + b).eval(x) == F->add(a.eval(x), b.eval(x)));
    }
}

TEST_CASE("derivative rules") {
    FieldPtr F = FieldSpec::parse("13");
    std::mt19937_64 rng(13);
    for (int iter = 0; iter < 200; ++iter) {
        Polynomial a = random_poly(F, static_cast<int>(rng() % 6), rng);
        Polynomial b = random_poly(F, static_cast<int>(rng() % 6), rng);
        REQUIRE((a + b).derivative() == a.derivative() + b.derivative());
        REQUIRE((a * b).derivative() == a.derivative() * b + a * b.derivative());
    }
    // characteristic kills p-th powers
    FieldPtr E = FieldSpec::parse("5^2");
    CHECK(Polynomial::parse(E, "x^5+2").derivative().is_zero());
    CHECK(!Polynomial::parse(E, "x^5+2").separable());
    CHECK(Polynomial::parse(E, "x^5+x").separable());
}

TEST_CASE("division") {
    FieldPtr F = FieldSpec::parse("13");
    std::mt19937_64 rng(17);
    for (int iter = 0; iter < 300; ++iter) {
        Polynomial f = random_poly(F, static_cast<int>(rng() % 8), rng);
        Polynomial d = random_poly(F, static_cast<int>(rng() % 4), rng);
        auto [quot, rem] = f.divmod(d);
        REQUIRE(quot * d + rem == f);
        REQUIRE(rem.degree() < d.degree());
    }
    CHECK_THROWS_AS(Polynomial::x(F).divmod(Polynomial::zero(F)), PreconditionError);
}

TEST_CASE("gcd and powmod") {
    FieldPtr F = FieldSpec::parse("13");
    Polynomial f = Polynomial::parse(F, "x^2-1");
    Polynomial g = Polynomial::parse(F, "x^2+2*x+1");  // (x+1)^2
    CHECK(poly_gcd(f, g) == Polynomial::parse(F, "x+1"));
    CHECK(poly_gcd(f, Polynomial::zero(F)) == f.monic());

    // x^13 mod (x^2+1): x^13 = x*(x^2)^6 = x*(-1)^6 = x
    Polynomial m = Polynomial::parse(F, "x^2+1");
    CHECK(poly_powmod(Polynomial::x(F), 13, m) == Polynomial::x(F));
    CHECK(xq_mod(m) == Polynomial::x(F));
}

TEST_CASE("roots agree with the gcd-degree oracle") {
    std::mt19937_64 rng(23);
    for (const char* label : {"13", "2^4", "5^2"}) {
        FieldPtr F = FieldSpec::parse(label);
        for (int iter = 0; iter < 100; ++iter) {
            Polynomial f = random_poly(F, 1 + static_cast<int>(rng() % 6), rng);
            auto roots = f.roots();
            REQUIRE(static_cast<int>(roots.size()) == f.distinct_root_count_gcd());
            for (auto [a, mult] : roots) {
                REQUIRE(f.eval(a) == 0);
                REQUIRE(mult >= 1);
            }
        }
    }
    FieldPtr F = FieldSpec::parse("13");
    CHECK_THROWS_AS(Polynomial::zero(F).roots(), PreconditionError);
    // multiplicity: (x-1)^2(x-2)
    auto roots = Polynomial::parse(F, "x^3-4*x^2+5*x-2").roots();
    REQUIRE(roots.size() == 2);
    CHECK(roots[0] == std::pair<std::uint64_t, int>{1, 2});
    CHECK(roots[1] == std::pair<std::uint64_t, int>{2, 1});
}

TEST_CASE("from_roots") {
    FieldPtr F = FieldSpec::parse("5");
    std::vector<std::uint64_t> r{0, 4, 2};  // x(x+1)(x+3) has roots 0,-1,-3
    Polynomial f = Polynomial::from_roots(F, r);
    CHECK(f == Polynomial::parse(F, "x^3+4*x^2+3*x"));
    for (auto a : r) CHECK(f.eval(a) == 0);
    CHECK(f.leading() == 1);
}

TEST_CASE("smallest_root embeds subfield generators") {
    FieldPtr F = FieldSpec::parse("2^3");
    // x^3+x+1 is the modulus, so alpha itself (code 2) is its smallest root
    std::vector<std::uint64_t> coeffs{1, 1, 0, 1};
    CHECK(smallest_root(F, coeffs) == 2);
    FieldPtr E = FieldSpec::parse("2^6");
    std::uint64_t a = smallest_root(E, coeffs);
    // verify it really is a root, computed in F_{2^6}
    Polynomial f(E, {1, 1, 0, 1});
    CHECK(f.eval(a) == 0);
    CHECK_THROWS_AS(smallest_root(FieldSpec::parse("5"), coeffs), PreconditionError);
}

TEST_CASE("cross-field operands are rejected") {
    FieldPtr F1 = FieldSpec::parse("13");
    FieldPtr F2 = FieldSpec::parse("17");
    CHECK_THROWS_AS(Polynomial::x(F1) + Polynomial::x(F2), PreconditionError);
}
