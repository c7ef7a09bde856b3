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

#include "mogkit/payoff_vector.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "mogkit/errors.hpp"

namespace mogkit {
namespace {

void RequireSameDim(const PayoffVector& x, const PayoffVector& y,
                    const char* what) {
  if (x.dim() != y.dim()) {
    std::ostringstream msg;
    msg << what << ": dimension mismatch (" << x.dim() << " vs " << y.dim()
        << ")";
    throw InvalidArgument(msg.str());
  }
}

}  // namespace

PayoffVector::PayoffVector(std::vector<Rational> components)
    : components_(std::move(components)) {
  if (components_.empty()) {
    throw InvalidArgument("payoff vector must have at least one objective");
  }
}

PayoffVector::PayoffVector(std::initializer_list<Rational> components)
    : PayoffVector(std::vector<Rational>(components)) {}

PayoffVector PayoffVector::Zeros(std::size_t d) { return Constant(d, 0); }

PayoffVector PayoffVector::Ones(std::size_t d) { return Constant(d, 1); }

PayoffVector PayoffVector::Constant(std::size_t d, const Rational& value) {
  return PayoffVector(std::vector<Rational>(d, value));
}

bool PayoffVector::IsStrictlyPositive() const {
  return std::all_of(components_.begin(), components_.end(),
                     [](const Rational& c) { return sgn(c) > 0; });
}

bool PayoffVector::IsNonNegative() const {
  return std::all_of(components_.begin(), components_.end(),
                     [](const Rational& c) { return sgn(c) >= 0; });
}

PayoffVector& PayoffVector::operator+=(const PayoffVector& other) {
  RequireSameDim(*this, other, "operator+=");
  for (std::size_t k = 0; k < components_.size(); ++k) {
    components_[k] += other.components_[k];
  }
  return *this;
}

PayoffVector& PayoffVector::operator*=(const Rational& scale) {
  for (auto& c : components_) c *= scale;
  return *this;
}

std::string PayoffVector::ToString() const {
  std::string out = "(";
  for (std::size_t k = 0; k < components_.size(); ++k) {
    if (k) out += ", ";
    out += to_string(components_[k]);
  }
  return out + ")";
}

bool operator<(const PayoffVector& a, const PayoffVector& b) {
  return std::lexicographical_compare(
      a.components_.begin(), a.components_.end(), b.components_.begin(),
      b.components_.end(),
      [](const Rational& x, const Rational& y) { return cmp(x, y) < 0; });
}

PayoffVector operator+(PayoffVector a, const PayoffVector& b) {
  a += b;
  return a;
}

PayoffVector operator*(const Rational& scale, PayoffVector v) {
  v *= scale;
  return v;
}

std::ostream& operator<<(std::ostream& os, const PayoffVector& v) {
  return os << v.ToString();
}

bool dominates(const PayoffVector& x, const PayoffVector& y) {
  RequireSameDim(x, y, "dominates");
  bool strict = false;
  for (std::size_t k = 0; k < x.dim(); ++k) {
    int c = cmp(x[k], y[k]);
    if (c < 0) return false;
    if (c > 0) strict = true;
  }
  return strict;
}

bool weakly_dominates(const PayoffVector& x, const PayoffVector& y) {
  RequireSameDim(x, y, "weakly_dominates");
  for (std::size_t k = 0; k < x.dim(); ++k) {
    if (cmp(x[k], y[k]) < 0) return false;
  }
  return true;
}

Rational pow_int(const Rational& base, long exponent) {
  if (exponent < 0) {
    if (sgn(base) == 0) throw PositiveDomainError("0 raised to a negative power");
    Rational inv = 1 / base;
    return pow_int(inv, -exponent);
  }
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(),
             static_cast<unsigned long>(exponent));
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(),
             static_cast<unsigned long>(exponent));
  Rational r(num, den);
  r.canonicalize();
  return r;
}

PayoffVector elementwise(ElementwiseOp op, const PayoffVector& x,
                         const PayoffVector& y) {
  RequireSameDim(x, y, "elementwise");
  std::vector<Rational> out(x.dim());
  for (std::size_t k = 0; k < x.dim(); ++k) {
    switch (op) {
      case ElementwiseOp::kStar:
        out[k] = x[k] * y[k];
        break;
      case ElementwiseOp::kDivide:
        if (sgn(y[k]) <= 0) {
          throw PositiveDomainError("divide: denominator component " +
                                    std::to_string(k) + " is not positive");
        }
        out[k] = x[k] / y[k];
        break;
      case ElementwiseOp::kWedge:
        out[k] = cmp(x[k], y[k]) <= 0 ? x[k] : y[k];
        break;
      case ElementwiseOp::kPow:
        if (y[k].get_den() != 1) {
          throw InvalidArgument("pow: exponent component " + std::to_string(k) +
                                " is not an integer");
        }
        if (!y[k].get_num().fits_slong_p()) {
          throw InvalidArgument("pow: exponent out of range");
        }
        out[k] = pow_int(x[k], y[k].get_num().get_si());
        break;
    }
  }
  return PayoffVector(std::move(out));
}

}  // namespace mogkit
