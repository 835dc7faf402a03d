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

#include "goodlrc/io.hpp"

#include <sstream>

namespace goodlrc {

namespace {

std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t");
    return s.substr(a, b - a + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep)) out.push_back(item);
    if (!s.empty() && s.back() == sep) out.push_back("");
    return out;
}

FieldPtr field_from_parts(const std::string& pm, const std::string& mod_text,
                          std::uint64_t guard) {
    std::uint64_t p;
    unsigned m;
    try {
        std::size_t caret = pm.find('^');
        if (caret == std::string::npos) {
            auto [fp, fm] = factor_prime_power(std::stoull(pm));
            p = fp;
            m = fm;
        } else {
            p = std::stoull(pm.substr(0, caret));
            m = static_cast<unsigned>(std::stoul(pm.substr(caret + 1)));
        }
    } catch (const std::invalid_argument&) {
        throw ParseError("bad field label: " + pm);
    } catch (const std::out_of_range&) {
        throw ParseError("bad field label: " + pm);
    }
    if (mod_text.empty()) return FieldSpec::create(p, m, {}, guard);
    FieldPtr prime = FieldSpec::create(p, 1, {}, guard);
    Polynomial mod = Polynomial::parse(prime, mod_text);
    return FieldSpec::create(p, m, mod.coeffs(), guard);
}

}  // namespace

FieldPtr parse_field(const std::string& label, std::uint64_t guard) {
    std::string text = trim(label);
    std::string mod_text;
    std::size_t pos = text.find("mod=");
    if (pos != std::string::npos) {
        mod_text = trim(text.substr(pos + 4));
        text = trim(text.substr(0, pos));
    }
    return field_from_parts(text, mod_text, guard);
}

Json field_to_json(const FieldSpec& field) {
    Json j;
    j["field"] = field.label();
    j["p"] = field.p();
    j["m"] = field.m();
    j["q"] = field.q();
    j["modulus"] = field.modulus_text();
    return j;
}

Json covering_to_json(const SplittingCovering& c) {
    Json j;
    j["field"] = c.f.field()->label();
    j["modulus"] = c.f.field()->modulus_text();
    j["poly"] = c.f.format();
    j["r"] = c.r;
    j["ell"] = c.ell();
    Json sets = Json::array();
    for (const auto& fiber : c.sets) {
        Json s;
        s["t"] = fiber.t;
        s["A"] = fiber.elems;
        sets.push_back(std::move(s));
    }
    j["sets"] = std::move(sets);
    return j;
}

SplittingCovering covering_from_json(const Json& j, std::uint64_t guard) {
    FieldPtr field = field_from_parts(j.at("field").get<std::string>(),
                                      j.at("modulus").get<std::string>(), guard);
    Polynomial f = Polynomial::parse(field, j.at("poly").get<std::string>());
    SplittingCovering c{f, j.at("r").get<std::uint64_t>(), {}};
    for (const auto& s : j.at("sets")) {
        SplittingCovering::Fiber fiber;
        fiber.t = s.at("t").get<std::uint64_t>();
        fiber.elems = s.at("A").get<std::vector<std::uint64_t>>();
        c.sets.push_back(std::move(fiber));
    }
    return c;
}

Json code_to_json(const LrcCode& code) {
    Json j;
    j["field"] = code.field()->label();
    j["modulus"] = code.field()->modulus_text();
    j["poly"] = code.g.format();
    j["covering"] = covering_to_json(code.covering);
    j["t"] = code.t;
    j["n"] = code.n;
    j["k"] = code.k;
    j["r"] = code.r;
    j["eval_points"] = code.eval_points;
    j["message_layout"] = "row-major, i outer, j inner";
    return j;
}

LrcCode code_from_json(const Json& j, std::uint64_t guard) {
    SplittingCovering cov = covering_from_json(j.at("covering"), guard);
    LrcCode code = lrc_build(cov.f, cov, j.at("t").get<std::uint64_t>());
    if (j.at("n").get<std::uint64_t>() != code.n ||
        j.at("k").get<std::uint64_t>() != code.k ||
        j.at("r").get<std::uint64_t>() != code.r)
        throw ParseError("code file parameters are inconsistent");
    if (j.at("eval_points").get<std::vector<std::uint64_t>>() != code.eval_points)
        throw ParseError("code file evaluation points do not match the covering");
    return code;
}

Json bound_report_to_json(const BoundReport& rep) {
    Json j;
    j["q"] = rep.q;
    j["family"] = family_name(rep.family_tag);
    j["r"] = rep.r;
    j["case"] = rep.case_label;
    j["lower"] = rep.lower;
    if (rep.upper) j["upper"] = *rep.upper;
    j["main_term"] = rep.main_term;
    if (rep.threshold) j["threshold"] = *rep.threshold;
    return j;
}

ErasureWord parse_codeword(const std::string& text, const FieldPtr& field) {
    ErasureWord w;
    for (const auto& raw : split(text, ',')) {
        std::string item = trim(raw);
        if (item == "?") {
            w.vals.push_back(0);
            w.erased.push_back(true);
            continue;
        }
        try {
            std::uint64_t v = std::stoull(item);
            if (v >= field->q()) throw ParseError("symbol out of range: " + item);
            w.vals.push_back(v);
            w.erased.push_back(false);
        } catch (const std::invalid_argument&) {
            throw ParseError("bad codeword symbol: '" + item + "'");
        } catch (const std::out_of_range&) {
            throw ParseError("bad codeword symbol: '" + item + "'");
        }
    }
    return w;
}

std::string format_codeword(const ErasureWord& w) {
    std::ostringstream os;
    for (std::size_t i = 0; i < w.vals.size(); ++i) {
        if (i) os << ",";
        if (w.erased[i])
            os << "?";
        else
            os << w.vals[i];
    }
    return os.str();
}

std::vector<std::uint64_t> parse_message(const std::string& text, const FieldPtr& field) {
    ErasureWord w = parse_codeword(text, field);
    for (bool e : w.erased)
        if (e) throw ParseError("messages cannot contain erasures");
    return w.vals;
}

}  // namespace goodlrc
