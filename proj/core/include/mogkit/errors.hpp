// Copyright 2026 The mogkit Authors
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

#ifndef MOGKIT_ERRORS_HPP_
#define MOGKIT_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace mogkit {

// Precondition violations: dimension mismatch, out-of-range action,
// non-positive weights, size guards.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A component that must be strictly positive (a denominator, a log-grid
// input) is zero or negative.
class PositiveDomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A game or file that does not satisfy its structural invariants.
class MalformedGame : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A potential annotation that fails the exact-potential identity.
class PotentialInvalid : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace mogkit

#endif  // MOGKIT_ERRORS_HPP_
