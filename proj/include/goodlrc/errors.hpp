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

#ifndef GOODLRC_ERRORS_HPP
#define GOODLRC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace goodlrc {

/// Malformed textual input (field labels, polynomial grammar, codewords).
class ParseError : public std::runtime_error {
   public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// A stated mathematical precondition does not hold (non-prime p, t > ell,
/// hypothesis of a bound violated, ...). The message names the failed hypothesis.
class PreconditionError : public std::runtime_error {
   public:
    explicit PreconditionError(const std::string& what) : std::runtime_error(what) {}
};

/// A resource guard was exceeded (field too large, enumeration too big).
class GuardError : public std::runtime_error {
   public:
    explicit GuardError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace goodlrc

#endif
