// Copyright 2026 The eqsamp Authors.
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

#ifndef EQSAMP_ERRORS_H_
#define EQSAMP_ERRORS_H_

#include <stdexcept>
#include <string>

namespace eqsamp {

// Root of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// An index, dimension or probability vector does not fit the game.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// A payoff lies outside [0,1].
class PayoffRangeError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

// A utilities array does not have prod_i m_i entries.
class LengthError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

// Text input (JSON, CSV) is malformed.
class ParseError : public Error {
 public:
  using Error::Error;
};

// A numeric argument is outside its documented domain.
class ArgumentError : public Error {
 public:
  using Error::Error;
};

// The request is well-formed but exceeds a configured size cap.
class CapabilityError : public Error {
 public:
  using Error::Error;
};

}  // namespace eqsamp

#endif  // EQSAMP_ERRORS_H_
