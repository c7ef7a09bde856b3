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

#ifndef MOGKIT_VECTOR_SET_HPP_
#define MOGKIT_VECTOR_SET_HPP_

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <string>
#include <vector>

#include "mogkit/payoff_vector.hpp"

namespace mogkit {

// Finite set of payoff vectors of a common dimension, stored deduplicated
// in ascending lexicographic order. Two sets with the same members compare
// equal and iterate identically.
class VectorSet {
 public:
  using const_iterator = std::vector<PayoffVector>::const_iterator;

  VectorSet() = default;
  explicit VectorSet(std::vector<PayoffVector> vectors);
  VectorSet(std::initializer_list<PayoffVector> vectors);

  // Skips canonicalization; `sorted_unique` must already be canonical.
  static VectorSet FromCanonical(std::vector<PayoffVector> sorted_unique);

  std::size_t size() const { return vectors_.size(); }
  bool empty() const { return vectors_.empty(); }
  // 0 for the empty set.
  std::size_t dim() const { return empty() ? 0 : vectors_.front().dim(); }

  const_iterator begin() const { return vectors_.begin(); }
  const_iterator end() const { return vectors_.end(); }
  const PayoffVector& operator[](std::size_t i) const { return vectors_[i]; }
  const std::vector<PayoffVector>& vectors() const { return vectors_; }

  bool contains(const PayoffVector& v) const;
  bool IsSubsetOf(const VectorSet& other) const;

  // Image of the set under a componentwise map, recanonicalized.
  VectorSet Scaled(const PayoffVector& r) const;   // r ⋆ X
  VectorSet DividedBy(const PayoffVector& r) const;  // X / r

  std::string ToString() const;

  friend bool operator==(const VectorSet& a, const VectorSet& b) {
    return a.vectors_ == b.vectors_;
  }

 private:
  std::vector<PayoffVector> vectors_;
};

std::ostream& operator<<(std::ostream& os, const VectorSet& s);

// Pareto-efficient members: those no other member dominates.
// Dispatches to a sort-and-sweep pass for d <= 2 and to a front-filtering
// pass over descending lexicographic order otherwise.
VectorSet eff(const VectorSet& x);

// Worst members: those that dominate no other member.
VectorSet wst(const VectorSet& x);

// Reference quadratic pairwise implementations.
VectorSet eff_pairwise(const VectorSet& x);
VectorSet wst_pairwise(const VectorSet& x);

// Sort-based O(N log N) path for d == 2. Throws InvalidArgument otherwise.
VectorSet eff_sweep_2d(const VectorSet& x);
VectorSet wst_sweep_2d(const VectorSet& x);

// Canonical eff/wst of an arbitrary list (duplicates allowed). These are
// the entry points used by solvers that accumulate raw outcomes.
VectorSet eff_of(std::vector<PayoffVector> vectors);
VectorSet wst_of(std::vector<PayoffVector> vectors);

// Indices of `row` whose vectors are Pareto-efficient within `row`. Equal
// vectors are both efficient.
std::vector<std::size_t> efficient_indices(const std::vector<PayoffVector>& row);

}  // namespace mogkit

#endif  // MOGKIT_VECTOR_SET_HPP_
