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

#include "mogkit/mocr.hpp"

#include <algorithm>
#include <utility>
#include <vector>

#include "mogkit/errors.hpp"

namespace mogkit {
namespace {

void ValidateInputs(const VectorSet& worst, const VectorSet& frontier) {
  if (worst.empty() || frontier.empty()) {
    throw InvalidArgument("coordination ratio needs nonempty E and F");
  }
  if (worst.dim() != frontier.dim()) {
    throw InvalidArgument("E and F have different dimensions");
  }
  for (const auto& z : frontier) {
    if (!z.IsStrictlyPositive()) {
      throw PositiveDomainError("efficient outcome " + z.ToString() +
                                " is not strictly positive");
    }
  }
  for (const auto& y : worst) {
    if (!y.IsNonNegative()) {
      throw PositiveDomainError("equilibrium outcome " + y.ToString() +
                                " has a negative component");
    }
  }
}

}  // namespace

bool ConeUnion::contains(const PayoffVector& y) const {
  return std::any_of(apexes_.begin(), apexes_.end(),
                     [&](const PayoffVector& x) { return weakly_dominates(x, y); });
}

ConeUnion cone_union(const ConeUnion& a, const ConeUnion& b) {
  std::vector<PayoffVector> all(a.apexes().begin(), a.apexes().end());
  all.insert(all.end(), b.apexes().begin(), b.apexes().end());
  return ConeUnion(VectorSet(std::move(all)));
}

ConeUnion cone_intersect(const ConeUnion& a, const ConeUnion& b) {
  std::vector<PayoffVector> wedges;
  wedges.reserve(a.apexes().size() * b.apexes().size());
  for (const auto& x : a.apexes()) {
    for (const auto& y : b.apexes()) wedges.push_back(wedge(x, y));
  }
  return ConeUnion(VectorSet(std::move(wedges)));
}

bool ratio_member(const PayoffVector& rho, const VectorSet& equilibria,
                  const VectorSet& frontier) {
  ValidateInputs(equilibria, frontier);
  if (rho.dim() != frontier.dim()) throw InvalidArgument("rho dimension mismatch");
  return std::all_of(equilibria.begin(), equilibria.end(), [&](const PayoffVector& y) {
    return std::any_of(frontier.begin(), frontier.end(), [&](const PayoffVector& z) {
      return weakly_dominates(divide(y, z), rho);
    });
  });
}

VectorSet mocr(const VectorSet& worst, const VectorSet& frontier) {
  ValidateInputs(worst, frontier);
  std::vector<PayoffVector> layer;
  layer.reserve(frontier.size());
  for (const auto& z : frontier) layer.push_back(divide(worst[0], z));
  VectorSet apexes = eff_of(std::move(layer));

  for (std::size_t t = 1; t < worst.size(); ++t) {
    std::vector<PayoffVector> ratios;
    ratios.reserve(frontier.size());
    for (const auto& z : frontier) ratios.push_back(divide(worst[t], z));
    std::vector<PayoffVector> next;
    next.reserve(apexes.size() * ratios.size());
    for (const auto& rho : apexes) {
      for (const auto& r : ratios) next.push_back(wedge(rho, r));
    }
    apexes = eff_of(std::move(next));
  }
  return apexes;
}

VectorSet mocr_oracle(const VectorSet& worst, const VectorSet& frontier,
                      std::size_t max_paths) {
  ValidateInputs(worst, frontier);
  const std::size_t q = worst.size();
  const std::size_t m = frontier.size();
  std::size_t paths = 1;
  for (std::size_t t = 0; t < q; ++t) {
    if (paths > max_paths / m) {
      throw InvalidArgument("path expansion exceeds the size guard");
    }
    paths *= m;
  }

  std::vector<PayoffVector> wedges;
  wedges.reserve(paths);
  std::vector<std::size_t> path(q, 0);
  for (std::size_t p = 0; p < paths; ++p) {
    PayoffVector acc = divide(worst[0], frontier[path[0]]);
    for (std::size_t t = 1; t < q; ++t) {
      acc = wedge(acc, divide(worst[t], frontier[path[t]]));
    }
    wedges.push_back(std::move(acc));
    for (std::size_t t = q; t-- > 0;) {
      if (++path[t] < m) break;
      path[t] = 0;
    }
  }
  return eff_pairwise(VectorSet(std::move(wedges)));
}

}  // namespace mogkit
