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

#include "mogkit/vector_set.hpp"

#include <algorithm>
#include <iterator>
#include <utility>

#include "mogkit/errors.hpp"

namespace mogkit {
namespace {

void Canonicalize(std::vector<PayoffVector>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

void RequireCommonDim(const std::vector<PayoffVector>& v) {
  for (const auto& x : v) {
    if (x.dim() != v.front().dim()) {
      throw InvalidArgument("vector set mixes dimensions " +
                            std::to_string(v.front().dim()) + " and " +
                            std::to_string(x.dim()));
    }
  }
}

// Maximal elements. Walking in descending lexicographic order, a vector can
// only be dominated by one already seen, and if that one is itself dominated
// its dominator is on the front; so testing against the front suffices.
std::vector<PayoffVector> MaximalFront(const std::vector<PayoffVector>& canon) {
  std::vector<PayoffVector> front;
  for (auto it = canon.rbegin(); it != canon.rend(); ++it) {
    bool dominated = std::any_of(front.begin(), front.end(), [&](const auto& f) {
      return weakly_dominates(f, *it);
    });
    if (!dominated) front.push_back(*it);
  }
  std::reverse(front.begin(), front.end());
  return front;
}

std::vector<PayoffVector> MinimalFront(const std::vector<PayoffVector>& canon) {
  std::vector<PayoffVector> front;
  for (const auto& y : canon) {
    bool dominating = std::any_of(front.begin(), front.end(), [&](const auto& f) {
      return weakly_dominates(y, f);
    });
    if (!dominating) front.push_back(y);
  }
  return front;
}

std::vector<PayoffVector> MaximalSweep2d(const std::vector<PayoffVector>& canon) {
  std::vector<PayoffVector> front;
  const Rational* best = nullptr;
  for (auto it = canon.rbegin(); it != canon.rend(); ++it) {
    if (best == nullptr || cmp((*it)[1], *best) > 0) {
      front.push_back(*it);
      best = &(*it)[1];
    }
  }
  std::reverse(front.begin(), front.end());
  return front;
}

std::vector<PayoffVector> MinimalSweep2d(const std::vector<PayoffVector>& canon) {
  std::vector<PayoffVector> front;
  const Rational* best = nullptr;
  for (const auto& y : canon) {
    if (best == nullptr || cmp(y[1], *best) < 0) {
      front.push_back(y);
      best = &y[1];
    }
  }
  return front;
}

}  // namespace

VectorSet::VectorSet(std::vector<PayoffVector> vectors)
    : vectors_(std::move(vectors)) {
  RequireCommonDim(vectors_);
  Canonicalize(vectors_);
}

VectorSet::VectorSet(std::initializer_list<PayoffVector> vectors)
    : VectorSet(std::vector<PayoffVector>(vectors)) {}

VectorSet VectorSet::FromCanonical(std::vector<PayoffVector> sorted_unique) {
  VectorSet s;
  s.vectors_ = std::move(sorted_unique);
  return s;
}

bool VectorSet::contains(const PayoffVector& v) const {
  return std::binary_search(vectors_.begin(), vectors_.end(), v);
}

bool VectorSet::IsSubsetOf(const VectorSet& other) const {
  return std::includes(other.vectors_.begin(), other.vectors_.end(),
                       vectors_.begin(), vectors_.end());
}

VectorSet VectorSet::Scaled(const PayoffVector& r) const {
  std::vector<PayoffVector> out;
  out.reserve(vectors_.size());
  for (const auto& v : vectors_) out.push_back(star(r, v));
  return VectorSet(std::move(out));
}

VectorSet VectorSet::DividedBy(const PayoffVector& r) const {
  std::vector<PayoffVector> out;
  out.reserve(vectors_.size());
  for (const auto& v : vectors_) out.push_back(divide(v, r));
  return VectorSet(std::move(out));
}

std::string VectorSet::ToString() const {
  std::string out = "{";
  for (std::size_t i = 0; i < vectors_.size(); ++i) {
    if (i) out += ", ";
    out += vectors_[i].ToString();
  }
  return out + "}";
}

std::ostream& operator<<(std::ostream& os, const VectorSet& s) {
  return os << s.ToString();
}

VectorSet eff_pairwise(const VectorSet& x) {
  std::vector<PayoffVector> out;
  for (const auto& y : x) {
    bool dominated = std::any_of(x.begin(), x.end(),
                                 [&](const auto& z) { return dominates(z, y); });
    if (!dominated) out.push_back(y);
  }
  return VectorSet::FromCanonical(std::move(out));
}

VectorSet wst_pairwise(const VectorSet& x) {
  std::vector<PayoffVector> out;
  for (const auto& y : x) {
    bool dominating = std::any_of(x.begin(), x.end(),
                                  [&](const auto& z) { return dominates(y, z); });
    if (!dominating) out.push_back(y);
  }
  return VectorSet::FromCanonical(std::move(out));
}

VectorSet eff_sweep_2d(const VectorSet& x) {
  if (!x.empty() && x.dim() != 2) throw InvalidArgument("eff_sweep_2d needs d == 2");
  return VectorSet::FromCanonical(MaximalSweep2d(x.vectors()));
}

VectorSet wst_sweep_2d(const VectorSet& x) {
  if (!x.empty() && x.dim() != 2) throw InvalidArgument("wst_sweep_2d needs d == 2");
  return VectorSet::FromCanonical(MinimalSweep2d(x.vectors()));
}

VectorSet eff(const VectorSet& x) {
  if (x.dim() == 2) return eff_sweep_2d(x);
  return VectorSet::FromCanonical(MaximalFront(x.vectors()));
}

VectorSet wst(const VectorSet& x) {
  if (x.dim() == 2) return wst_sweep_2d(x);
  return VectorSet::FromCanonical(MinimalFront(x.vectors()));
}

VectorSet eff_of(std::vector<PayoffVector> vectors) {
  return eff(VectorSet(std::move(vectors)));
}

VectorSet wst_of(std::vector<PayoffVector> vectors) {
  return wst(VectorSet(std::move(vectors)));
}

std::vector<std::size_t> efficient_indices(const std::vector<PayoffVector>& row) {
  std::vector<std::size_t> out;
  for (std::size_t a = 0; a < row.size(); ++a) {
    bool dominated = false;
    for (std::size_t b = 0; b < row.size() && !dominated; ++b) {
      dominated = b != a && dominates(row[b], row[a]);
    }
    if (!dominated) out.push_back(a);
  }
  return out;
}

}  // namespace mogkit
