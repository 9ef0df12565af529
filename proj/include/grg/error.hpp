// Copyright 2026 The grgcycles Authors
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

#ifndef GRG_ERROR_HPP_
#define GRG_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace grg {

// Precondition or parameter violations.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A moment that the caller needs is infinite for the given law.
class InfiniteMoment : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// An exact enumeration would exceed the configured candidate cap.
class CapExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

// Malformed input file or configuration.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace grg

#endif  // GRG_ERROR_HPP_
