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

#ifndef MOGKIT_RATIONAL_HPP_
#define MOGKIT_RATIONAL_HPP_

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace mogkit {

// Exact rational scalar used for every payoff, ratio and probability.
using Rational = mpq_class;

// Parses "7", "-3", "13/200" or a plain decimal such as "0.065" (read as
// the exact fraction 65/1000). Throws InvalidArgument on anything else.
Rational parse_rational(std::string_view text);

// Canonical text form: "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& value);

}  // namespace mogkit

#endif  // MOGKIT_RATIONAL_HPP_
