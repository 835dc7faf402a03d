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

#include "goodlrc/goodpoly.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>

#include "goodlrc/bounds.hpp"

namespace goodlrc {

std::string family_name(Family f) {
    switch (f) {
        case Family::monomial: return "monomial";
        case Family::additive: return "additive";
        case Family::deg3: return "deg3";
        case Family::deg4: return "deg4";
        case Family::deg6: return "deg6";
        case Family::from_roots: return "from-roots";
        case Family::none: break;
    }
    return "none";
}

Family family_from_name(const std::string& name) {
    if (name == "monomial") return Family::monomial;
    if (name == "additive") return Family::additive;
    if (name == "deg3") return Family::deg3;
    if (name == "deg4") return Family::deg4;
    if (name == "deg6") return Family::deg6;
    if (name == "from-roots") return Family::from_roots;
    if (name == "none") return Family::none;
    throw ParseError("unknown family: " + name);
}

SplittingCovering splitting_covering(const Polynomial& f) {
    if (f.degree() < 1)
        throw PreconditionError("fiber scan needs deg f >= 1");
    const FieldSpec& F = *f.field();
    const std::uint64_t q = F.q();
    const std::uint64_t d = static_cast<std::uint64_t>(f.degree());

    std::vector<std::uint32_t> val(q), cnt(q, 0);
    for (std::uint64_t a = 0; a < q; ++a) {
        std::uint32_t v = static_cast<std::uint32_t>(f.eval(a));
        val[a] = v;
        ++cnt[v];
    }

    SplittingCovering cov{f, d - 1, {}};
    std::unordered_map<std::uint64_t, std::size_t> index;
    for (std::uint64_t a = 0; a < q; ++a) {
        if (cnt[val[a]] != d) continue;
        auto [it, inserted] = index.try_emplace(val[a], cov.sets.size());
        if (inserted) cov.sets.push_back({val[a], {}});
        cov.sets[it->second].elems.push_back(a);
    }
    std::sort(cov.sets.begin(), cov.sets.end(),
              [](const auto& x, const auto& y) { return x.t < y.t; });
    return cov;
}

bool is_totally_split_at(const Polynomial& f, std::uint64_t t0) {
    if (f.degree() < 1)
        throw PreconditionError("split test needs deg f >= 1");
    Polynomial g = f.plus_constant(f.field()->neg(t0));
    Polynomial r = xq_mod(g) - (Polynomial::x(f.field()) % g);
    return r.is_zero();
}

GoodPolyReport good_params(const Polynomial& f, const FamilyInfo* family) {
    SplittingCovering cov = splitting_covering(f);
    GoodPolyReport rep{f};
    rep.r = cov.r;
    rep.ell_measured = cov.ell();
    rep.cap = cov.cap();
    if (family && family->tag != Family::none) {
        rep.family_tag = family->tag;
        try {
            BoundReport br = theorem_bound(f.field(), *family);
            rep.bound_lower = br.lower;
            rep.bound_upper = br.upper;
        } catch (const PreconditionError&) {
            // family hypotheses do not hold; report measured data only
        }
    }
    return rep;
}

ConstructedPoly construct_monomial(const FieldPtr& field, std::uint64_t m) {
    const std::uint64_t q = field->q();
    if (m < 2) throw PreconditionError("monomial degree must be >= 2");
    if ((q - 1) % m != 0)
        throw PreconditionError("m = " + std::to_string(m) + " does not divide q-1 = " +
                                std::to_string(q - 1));
    std::vector<std::uint64_t> coeffs(m + 1, 0);
    coeffs[m] = 1;
    ConstructedPoly out{Polynomial(field, std::move(coeffs)), {}};
    out.info.tag = Family::monomial;
    out.info.params = {m};
    out.info.promised_ell = (q - 1) / m;
    return out;
}

ConstructedPoly construct_additive(const FieldPtr& field,
                                   std::span<const std::uint64_t> generators) {
    const FieldSpec& F = *field;
    if (generators.empty())
        throw PreconditionError("additive family needs at least one generator");
    // Closure under the F_p-span; a generator already in the span is dependent.
    std::set<std::uint64_t> span{0};
    for (auto g : generators) {
        if (g >= F.q()) throw ParseError("generator code out of range");
        if (span.count(g))
            throw PreconditionError("generators are linearly dependent over F_p");
        std::set<std::uint64_t> next;
        for (auto v : span) {
            std::uint64_t cg = 0;
            for (std::uint64_t c = 0; c < F.p(); ++c) {
                next.insert(F.add(v, cg));
                cg = F.add(cg, g);
            }
        }
        span = std::move(next);
    }
    std::vector<std::uint64_t> elems(span.begin(), span.end());
    ConstructedPoly out{Polynomial::from_roots(field, elems), {}};
    out.info.tag = Family::additive;
    out.info.params.assign(generators.begin(), generators.end());
    out.info.promised_ell = F.q() / elems.size();
    out.info.degenerate = elems.size() == F.q();
    return out;
}

ConstructedPoly construct_deg3(const FieldPtr& field, std::uint64_t b) {
    if (b >= field->q()) throw ParseError("b out of range");
    if (b == 0 || b == 1)
        throw PreconditionError("deg3 family requires b not in {0,1}");
    std::vector<std::uint64_t> roots{0, 1, b};
    ConstructedPoly out{Polynomial::from_roots(field, roots), {}};
    out.info.tag = Family::deg3;
    out.info.params = {b};
    return out;
}

ConstructedPoly construct_deg4(const FieldPtr& field, std::uint64_t a) {
    const FieldSpec& F = *field;
    if (a >= F.q()) throw ParseError("a out of range");
    if (F.p() == 2 || F.q() < 5)
        throw PreconditionError("deg4 family requires odd q >= 5");
    if (a == 0) throw PreconditionError("deg4 family requires a != 0");
    std::vector<std::uint64_t> coeffs(5, 0);
    coeffs[2] = a;
    coeffs[4] = 1;
    ConstructedPoly out{Polynomial(field, std::move(coeffs)), {}};
    out.info.tag = Family::deg4;
    out.info.params = {a};
    return out;
}

ConstructedPoly construct_deg6(const FieldPtr& field, std::uint64_t a) {
    const FieldSpec& F = *field;
    if (a >= F.q()) throw ParseError("a out of range");
    if (F.p() == 2) throw PreconditionError("deg6 family requires odd q");
    if (F.p() == 3) throw PreconditionError("deg6 family requires characteristic != 3");
    if (F.is_square(a))
        throw PreconditionError("deg6 family requires a to be a non-square");
    // (X^3 - aX)^2
    Polynomial cubic(field, {0, F.neg(a), 0, 1});
    ConstructedPoly out{cubic * cubic, {}};
    out.info.tag = Family::deg6;
    out.info.params = {a};
    return out;
}

ConstructedPoly construct_from_roots(const FieldPtr& field,
                                     std::span<const std::uint64_t> roots) {
    const FieldSpec& F = *field;
    std::set<std::uint64_t> distinct(roots.begin(), roots.end());
    if (distinct.size() != roots.size())
        throw PreconditionError("root set must consist of distinct elements");
    if (roots.empty()) throw PreconditionError("root set must be nonempty");
    if (F.p() <= roots.size())
        throw PreconditionError("from-roots family requires gcd(q, (r+1)!) = 1");
    for (auto b : roots)
        if (b >= F.q()) throw ParseError("root code out of range");
    ConstructedPoly out{Polynomial::from_roots(field, roots), {}};
    out.info.tag = Family::from_roots;
    out.info.params.assign(roots.begin(), roots.end());
    return out;
}

bool verify_covering(const SplittingCovering& c,
                     std::vector<std::string>* diagnostics) {
    auto fail = [&](const std::string& msg) {
        if (diagnostics) diagnostics->push_back(msg);
        return false;
    };
    bool ok = true;
    const FieldSpec& F = *c.f.field();
    if (c.f.degree() < 1) return fail("polynomial has degree < 1");
    const std::uint64_t d = static_cast<std::uint64_t>(c.f.degree());
    if (c.r + 1 != d) ok = fail("r does not match deg f - 1");
    std::set<std::uint64_t> seen_elems;
    std::uint64_t prev_t = 0;
    bool first = true;
    for (const auto& fiber : c.sets) {
        if (!first && fiber.t <= prev_t) ok = fail("t values not strictly increasing");
        prev_t = fiber.t;
        first = false;
        if (fiber.elems.size() != d)
            ok = fail("set at t=" + std::to_string(fiber.t) + " has size " +
                      std::to_string(fiber.elems.size()) + " != deg f");
        std::uint64_t prev_a = 0;
        bool first_a = true;
        for (auto a : fiber.elems) {
            if (!first_a && a <= prev_a)
                ok = fail("set elements not strictly increasing");
            prev_a = a;
            first_a = false;
            if (!seen_elems.insert(a).second)
                ok = fail("element " + std::to_string(a) + " appears in two sets");
            if (c.f.eval(a) != fiber.t)
                ok = fail("f(" + std::to_string(a) + ") != t = " + std::to_string(fiber.t));
        }
    }
    if (c.ell() > F.q() / d)
        ok = fail("ell exceeds the cap floor(q/(r+1))");
    return ok;
}

bool constants_field_certificate(const Polynomial& f) {
    if (!f.separable())
        throw PreconditionError("certificate requires a separable polynomial");
    return splitting_covering(f).ell() >= 1;
}

}  // namespace goodlrc
