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

#include "mogkit/approx.hpp"

#include <map>
#include <string>
#include <utility>

#include "mogkit/errors.hpp"
#include "mogkit/mocr.hpp"

namespace mogkit {
namespace {

void RequirePositive(const VectorSet& set, const char* what) {
  for (const auto& v : set) {
    if (!v.IsStrictlyPositive()) {
      throw PositiveDomainError(std::string(what) + " contains non-positive vector " +
                                v.ToString());
    }
  }
}

long LogFloor(const Rational& x, const Rational& base) {
  if (sgn(x) <= 0) throw PositiveDomainError("log-grid index of a non-positive value");
  long l = 0;
  Rational power = 1;
  if (x >= 1) {
    while (true) {
      Rational next = power * base;
      if (next > x) break;
      power = std::move(next);
      ++l;
    }
  } else {
    while (power > x) {
      power /= base;
      --l;
    }
  }
  return l;
}

}  // namespace

CoveringParams::CoveringParams(Rational eps) : eps_(std::move(eps)) {
  if (sgn(eps_) <= 0) throw InvalidArgument("covering precision must be > 0");
  base_ = 1 + eps_;
}

std::vector<long> log_grid_index(const PayoffVector& x, const CoveringParams& params) {
  std::vector<long> index(x.dim());
  for (std::size_t k = 0; k < x.dim(); ++k) index[k] = LogFloor(x[k], params.base());
  return index;
}

PayoffVector grid_point(const std::vector<long>& index, const CoveringParams& params) {
  std::vector<Rational> v;
  v.reserve(index.size());
  for (long l : index) v.push_back(pow_int(params.base(), l));
  return PayoffVector(std::move(v));
}

VectorSet under_cover(const VectorSet& worst, const CoveringParams& params) {
  RequirePositive(worst, "under_cover input");
  std::vector<PayoffVector> corners;
  for (const auto& y : wst(worst)) {
    corners.push_back(grid_point(log_grid_index(y, params), params));
  }
  return wst_of(std::move(corners));
}

VectorSet stick_cover(const VectorSet& frontier, const CoveringParams& params) {
  RequirePositive(frontier, "stick_cover input");
  // Canonical order is ascending, so the first member seen in a cell is the
  // lexicographically smallest.
  std::map<std::vector<long>, PayoffVector> cells;
  for (const auto& z : frontier) cells.try_emplace(log_grid_index(z, params), z);
  std::vector<PayoffVector> picked;
  picked.reserve(cells.size());
  for (auto& [cell, z] : cells) picked.push_back(std::move(z));
  return wst_of(std::move(picked));
}

ApproxResult approx_mocr(const VectorSet& worst, const VectorSet& frontier,
                         const Rational& eps1, const Rational& eps2) {
  const CoveringParams p1(eps1), p2(eps2);
  ApproxResult result;
  result.worst_cover = under_cover(worst, p1);
  result.frontier_cover = stick_cover(frontier, p2);
  result.ratios = mocr(result.worst_cover, result.frontier_cover);
  result.guarantee = p1.base() * p2.base();
  return result;
}

}  // namespace mogkit
