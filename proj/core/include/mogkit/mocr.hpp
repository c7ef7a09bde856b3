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

// Multi-objective coordination ratio.
//
// A vector rho bounds the inefficiency of equilibrium outcomes E against
// efficient outcomes F when every y in E weakly dominates rho ⋆ z for some z
// in F. The set of such rho is a union of lower cones; its apex antichain is
// the coordination ratio. Apexes are built layer by layer from WST[E]:
//   D1 = EFF{y1 / z : z in F},
//   Dt = EFF{rho ∧ (yt / z) : rho in D(t-1), z in F}.

#ifndef MOGKIT_MOCR_HPP_
#define MOGKIT_MOCR_HPP_

#include <cstddef>

#include "mogkit/vector_set.hpp"

namespace mogkit {

// Union of lower cones C(x) = {y : x ≽ y}, represented by its efficient apexes.
class ConeUnion {
 public:
  ConeUnion() = default;
  explicit ConeUnion(const VectorSet& apexes) : apexes_(eff(apexes)) {}

  const VectorSet& apexes() const { return apexes_; }
  bool contains(const PayoffVector& y) const;

  friend bool operator==(const ConeUnion&, const ConeUnion&) = default;

 private:
  VectorSet apexes_;
};

ConeUnion cone_union(const ConeUnion& a, const ConeUnion& b);
// C(x1) ∩ C(x2) = C(x1 ∧ x2), extended pairwise over the apexes.
ConeUnion cone_intersect(const ConeUnion& a, const ConeUnion& b);

// ∀ y in E, ∃ z in F: y / z ≽ rho. F must be strictly positive and E
// non-negative (PositiveDomainError otherwise).
bool ratio_member(const PayoffVector& rho, const VectorSet& equilibria,
                  const VectorSet& frontier);

// Layered apex construction. `worst` is normally WST[E]; any E gives the same
// answer since dominating members only add looser constraints.
VectorSet mocr(const VectorSet& worst, const VectorSet& frontier);

// Reference semantics: EFF over the wedge of yt / z_pi(t) for every path
// pi : layers -> F. Throws InvalidArgument when m^q exceeds `max_paths`.
VectorSet mocr_oracle(const VectorSet& worst, const VectorSet& frontier,
                      std::size_t max_paths = 1'000'000);

}  // namespace mogkit

#endif  // MOGKIT_MOCR_HPP_
