// Copyright 2026 The minwit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MINWIT_ERRORS_H
#define MINWIT_ERRORS_H

#include <cstddef>
#include <stdexcept>
#include <string>

namespace minwit {

/// Operands disagree on qubit count or matrix dimension.
struct DimensionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A caller-supplied argument violates an operation's precondition.
struct ArgumentError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Witness construction could not produce a usable result.
struct ConstructionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Input data is incomplete (e.g. a correlation the witness needs is absent).
struct DataError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Input data is present but violates a physical or format invariant.
struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed file contents. `line()` is 1-based, 0 when not line-oriented.
class ParseError : public std::runtime_error {
   public:
    ParseError(const std::string &what, std::size_t line)
        : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {
    }
    std::size_t line() const {
        return line_;
    }

   private:
    std::size_t line_;
};

}  // namespace minwit

#endif
