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

#ifndef MOGKIT_SIMPLEX_HPP_
#define MOGKIT_SIMPLEX_HPP_

#include <vector>

#include "mogkit/rational.hpp"

namespace mogkit {

enum class Relation { kLessEqual, kEqual, kGreaterEqual };

// maximize objective · x  subject to  rows[r] · x (relations[r]) rhs[r],  x >= 0.
struct LinearProgram {
  std::vector<Rational> objective;
  std::vector<std::vector<Rational>> rows;
  std::vector<Relation> relations;
  std::vector<Rational> rhs;
};

enum class LpStatus { kOptimal, kInfeasible, kUnbounded };

struct LpSolution {
  LpStatus status = LpStatus::kInfeasible;
  Rational value;
  std::vector<Rational> x;
};

// Two-phase dense tableau simplex over exact rationals with Bland's rule,
// so it terminates on degenerate problems. Sized for small programs.
LpSolution solve_lp(const LinearProgram& lp);

}  // namespace mogkit

#endif  // MOGKIT_SIMPLEX_HPP_
