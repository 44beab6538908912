// Copyright 2026 The medsel Authors
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

#ifndef MEDSEL_ERRORS_H_
#define MEDSEL_ERRORS_H_

#include <stdexcept>
#include <string>

namespace medsel {

// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A GameSetting violates its invariants (J = 0, N_j <= 0, negative cost...).
class InvalidSettingError : public Error {
 public:
  using Error::Error;
};

// A strategy profile refers to a medium that does not exist.
class InvalidProfileError : public Error {
 public:
  using Error::Error;
};

// An argument lies outside the domain of the operation, e.g. a load vector
// whose total differs from the number of seeds.
class DomainError : public Error {
 public:
  using Error::Error;
};

// The requested numeric backend cannot decide the query (ties need exact
// arithmetic).
class BackendError : public Error {
 public:
  using Error::Error;
};

// A bound system has no integer solution.
class InfeasibleError : public Error {
 public:
  using Error::Error;
};

// An exhaustive enumeration would exceed its budget.
class CapacityError : public Error {
 public:
  using Error::Error;
};

// Malformed serialized input. The message names the offending field.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace medsel

#endif  // MEDSEL_ERRORS_H_
