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

// Two-phase pipeline: enumerate equilibria and the frontier (phase 1), then
// compute the coordination ratio exactly or on coverings (phase 2).

#ifndef MOGKIT_EXPERIMENT_HPP_
#define MOGKIT_EXPERIMENT_HPP_

#include <cstddef>
#include <optional>
#include <vector>

#include "mogkit/game_forms.hpp"
#include "mogkit/rational.hpp"
#include "mogkit/vector_set.hpp"

namespace mogkit {

struct CoveringPrecision {
  Rational eps1;
  Rational eps2;
};

struct PipelineRun {
  std::size_t n = 0;
  double phase1_seconds = 0;
  double phase2_seconds = 0;
  std::size_t m = 0;      // |F|
  std::size_t q = 0;      // |WST[E]|
  std::size_t m_eps = 0;  // |stick cover of F|, equals m when exact
  std::size_t q_eps = 0;  // |under cover of WST[E]|, equals q when exact
  VectorSet ratios;       // empty when the game has no pure equilibrium
};

// Without `precision`, runs the exact coordination ratio on WST[E] and F.
PipelineRun run_pipeline(const Game& game,
                         const std::optional<CoveringPrecision>& precision);

// Column-wise mean of several runs (the ratio sets are not averaged).
struct PipelineAverage {
  double n = 0;
  double phase1_seconds = 0;
  double m = 0;
  double q = 0;
  double m_eps = 0;
  double q_eps = 0;
  double phase2_seconds = 0;
  double mocr_size = 0;
};

PipelineAverage average_runs(const std::vector<PipelineRun>& runs);

}  // namespace mogkit

#endif  // MOGKIT_EXPERIMENT_HPP_
