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

#ifndef MOGKIT_PAYOFF_VECTOR_HPP_
#define MOGKIT_PAYOFF_VECTOR_HPP_

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "mogkit/rational.hpp"

namespace mogkit {

// A point in d-objective space with exact rational components.
//
// The dimension is fixed at construction and is at least 1. Ordering is
// lexicographic on components, which is the canonical order of VectorSet.
class PayoffVector {
 public:
  PayoffVector() = default;
  explicit PayoffVector(std::vector<Rational> components);
  PayoffVector(std::initializer_list<Rational> components);

  static PayoffVector Zeros(std::size_t d);
  static PayoffVector Ones(std::size_t d);
  static PayoffVector Constant(std::size_t d, const Rational& value);

  std::size_t dim() const { return components_.size(); }
  const Rational& operator[](std::size_t k) const { return components_[k]; }
  std::span<const Rational> components() const { return components_; }

  // True when every component is > 0 (resp. >= 0).
  bool IsStrictlyPositive() const;
  bool IsNonNegative() const;

  PayoffVector& operator+=(const PayoffVector& other);
  PayoffVector& operator*=(const Rational& scale);

  std::string ToString() const;

  friend bool operator==(const PayoffVector& a, const PayoffVector& b) {
    return a.components_ == b.components_;
  }
  friend bool operator<(const PayoffVector& a, const PayoffVector& b);

 private:
  std::vector<Rational> components_;
};

PayoffVector operator+(PayoffVector a, const PayoffVector& b);
PayoffVector operator*(const Rational& scale, PayoffVector v);
std::ostream& operator<<(std::ostream& os, const PayoffVector& v);

// x ≻ y: x >= y in every objective and x > y in at least one.
bool dominates(const PayoffVector& x, const PayoffVector& y);

// x ≽ y: x >= y in every objective.
bool weakly_dominates(const PayoffVector& x, const PayoffVector& y);

enum class ElementwiseOp { kStar, kDivide, kWedge, kPow };

// Componentwise product, quotient, minimum, or power. kPow requires every
// exponent component to be an integer; kDivide requires y > 0.
PayoffVector elementwise(ElementwiseOp op, const PayoffVector& x,
                         const PayoffVector& y);

inline PayoffVector star(const PayoffVector& x, const PayoffVector& y) {
  return elementwise(ElementwiseOp::kStar, x, y);
}
inline PayoffVector divide(const PayoffVector& x, const PayoffVector& y) {
  return elementwise(ElementwiseOp::kDivide, x, y);
}
inline PayoffVector wedge(const PayoffVector& x, const PayoffVector& y) {
  return elementwise(ElementwiseOp::kWedge, x, y);
}

// Integer power of a rational; negative exponents invert. 0^negative throws.
Rational pow_int(const Rational& base, long exponent);

}  // namespace mogkit

#endif  // MOGKIT_PAYOFF_VECTOR_HPP_
