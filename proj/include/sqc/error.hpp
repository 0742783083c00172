// Copyright 2026 The squarecodes Authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace sqc {

enum class ErrorKind {
  InversionOfZero,
  MismatchedFields,
  InvalidField,
  BudgetExceeded,
  MismatchedAmbient,
  NotReduced,
  InvalidOrder,
  ParityError,
  RangeError,
  EmptySet,
  DimensionMismatch,
  SupportOutsideA,
  ParseError,
  InvalidArgument,
  InternalError,
};

const char* error_kind_name(ErrorKind kind) noexcept;

/// All library failures are reported as this exception; kind() says which
/// precondition was violated.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

inline void require(bool cond, ErrorKind kind, const std::string& what) {
  if (!cond) fail(kind, what);
}

}  // namespace sqc
