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

#include "mogkit/rational.hpp"

#include <cctype>
#include <string>

#include "mogkit/errors.hpp"

namespace mogkit {
namespace {

bool IsSignedDigits(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

std::string StripPlus(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  return std::string(s);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) {
    text.remove_prefix(1);
  }
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) {
    text.remove_suffix(1);
  }
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    std::string_view num = text.substr(0, slash);
    std::string_view den = text.substr(slash + 1);
    if (!IsSignedDigits(num) || !IsSignedDigits(den)) {
      throw InvalidArgument("not a rational: '" + std::string(text) + "'");
    }
    mpz_class n(StripPlus(num), 10), d(StripPlus(den), 10);
    if (d == 0) throw InvalidArgument("zero denominator: '" + std::string(text) + "'");
    Rational r(n, d);
    r.canonicalize();
    return r;
  }
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view whole = text.substr(0, dot);
    std::string_view frac = text.substr(dot + 1);
    bool negative = !whole.empty() && whole.front() == '-';
    if (!whole.empty() && (whole.front() == '-' || whole.front() == '+')) {
      whole.remove_prefix(1);
    }
    if (whole.empty() && frac.empty()) {
      throw InvalidArgument("not a rational: '" + std::string(text) + "'");
    }
    if ((!whole.empty() && !IsSignedDigits(whole)) ||
        (!frac.empty() && !IsSignedDigits(frac)) ||
        (!frac.empty() && (frac.front() == '-' || frac.front() == '+'))) {
      throw InvalidArgument("not a rational: '" + std::string(text) + "'");
    }
    mpz_class den = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
    mpz_class num(std::string(whole.empty() ? "0" : whole) + std::string(frac), 10);
    Rational r(negative ? mpz_class(-num) : num, den);
    r.canonicalize();
    return r;
  }
  if (!IsSignedDigits(text)) {
    throw InvalidArgument("not a rational: '" + std::string(text) + "'");
  }
  return Rational(mpz_class(StripPlus(text), 10));
}

std::string to_string(const Rational& value) { return value.get_str(); }

}  // namespace mogkit
