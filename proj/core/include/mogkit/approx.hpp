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

#ifndef MOGKIT_APPROX_HPP_
#define MOGKIT_APPROX_HPP_

#include <vector>

#include "mogkit/rational.hpp"
#include "mogkit/vector_set.hpp"

namespace mogkit {

// Precision of a (1+eps) logarithmic grid.
class CoveringParams {
 public:
  explicit CoveringParams(Rational eps);
  const Rational& eps() const { return eps_; }
  const Rational& base() const { return base_; }  // 1 + eps

 private:
  Rational eps_;
  Rational base_;
};

// Per coordinate, the largest integer l with (1+eps)^l <= x_k. Computed with
// exact rational arithmetic; negative for x_k < 1.
std::vector<long> log_grid_index(const PayoffVector& x, const CoveringParams& params);

// The grid point ((1+eps)^l_k)_k.
PayoffVector grid_point(const std::vector<long>& index, const CoveringParams& params);

// WST of the grid points obtained by snapping each vector of WST[worst] down
// to its cell corner. Every input vector dominates some output vector and
// every output vector, scaled by (1+eps), dominates some input vector.
VectorSet under_cover(const VectorSet& worst, const CoveringParams& params);

// One member of `frontier` per occupied grid cell (the lexicographically
// smallest), then WST. The result is a subset of `frontier`, and every
// z in `frontier` has an output z' with (1+eps) z ≽ z'.
VectorSet stick_cover(const VectorSet& frontier, const CoveringParams& params);

struct ApproxResult {
  VectorSet ratios;        // coordination ratio of the two coverings
  Rational guarantee;      // (1+eps1)(1+eps2)
  VectorSet worst_cover;   // under-cover of WST[E]
  VectorSet frontier_cover;  // stick-cover of F
};

ApproxResult approx_mocr(const VectorSet& worst, const VectorSet& frontier,
                         const Rational& eps1, const Rational& eps2);

}  // namespace mogkit

#endif  // MOGKIT_APPROX_HPP_
