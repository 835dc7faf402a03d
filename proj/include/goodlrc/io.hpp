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

#ifndef GOODLRC_IO_HPP
#define GOODLRC_IO_HPP

#include <string>

#include <json.hpp>

#include "goodlrc/bounds.hpp"
#include "goodlrc/goodpoly.hpp"
#include "goodlrc/lrc.hpp"

namespace goodlrc {

using Json = nlohmann::ordered_json;

/// Field text form: "q", "p^m", optionally followed by " mod=<poly over F_p>".
FieldPtr parse_field(const std::string& label,
                     std::uint64_t guard = FieldSpec::kDefaultGuard);

Json field_to_json(const FieldSpec& field);

Json covering_to_json(const SplittingCovering& c);
SplittingCovering covering_from_json(const Json& j,
                                     std::uint64_t guard = FieldSpec::kDefaultGuard);

Json code_to_json(const LrcCode& code);
LrcCode code_from_json(const Json& j,
                       std::uint64_t guard = FieldSpec::kDefaultGuard);

Json bound_report_to_json(const BoundReport& rep);

/// Comma-separated encodings; "?" marks an erasure.
ErasureWord parse_codeword(const std::string& text, const FieldPtr& field);
std::string format_codeword(const ErasureWord& w);

std::vector<std::uint64_t> parse_message(const std::string& text, const FieldPtr& field);

}  // namespace goodlrc

#endif
