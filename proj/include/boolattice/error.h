// Copyright 2026 The boolattice Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef BOOLATTICE_ERROR_H_
#define BOOLATTICE_ERROR_H_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace boolattice {

enum class ErrorKind {
  kClosureCapExceeded,
  kElementNotInLattice,
  kNotFactorable,
  kNotFactorizable,
  kQuarkTooLarge,
  kNotAComponent,
  kPreconditionViolated,
  kVerificationFailed,
  kUnknownExample,
  kParseError,
};

std::string_view ErrorKindName(ErrorKind kind);

// Every domain failure in the library is reported through this type; the
// kind lets callers (and the CLI exit-code mapping) dispatch without parsing
// the message.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(ErrorKindName(kind)) + ": " + message),
        kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

// Malformed generator text. Line and column are 1-based.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& reason);

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  const std::string& reason() const { return reason_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string reason_;
};

// Thrown by the construction verifiers; `claim()` names the violated claim
// (e.g. "quarks", "J_2.factorizations", "unique", "elasticity").
class VerificationFailed : public Error {
 public:
  VerificationFailed(std::string claim, const std::string& detail)
      : Error(ErrorKind::kVerificationFailed, claim + ": " + detail),
        claim_(std::move(claim)) {}

  const std::string& claim() const { return claim_; }

 private:
  std::string claim_;
};

}  // namespace boolattice

#endif  // BOOLATTICE_ERROR_H_
