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

#ifndef MOGKIT_EQUILIBRIA_HPP_
#define MOGKIT_EQUILIBRIA_HPP_

#include <cstddef>
#include <span>
#include <vector>

#include "mogkit/game_forms.hpp"
#include "mogkit/vector_set.hpp"

namespace mogkit {

// Pure Pareto-Nash equilibria of a game and the outcome sets derived from
// them. For symmetric games `pn` holds configurations, not profiles.
struct SolveResult {
  bool pn_are_configurations = false;
  std::vector<Profile> pn;
  VectorSet outcomes;      // E: utilitarian welfare of each equilibrium
  VectorSet eff_outcomes;  // EFF[E]
  VectorSet wst_outcomes;  // WST[E]
  VectorSet frontier;      // F: EFF over the welfare of every profile
};

// Actions of `agent` whose payoff is Pareto-efficient against the other
// agents' actions in `profile` (the agent's own entry is ignored).
std::vector<std::size_t> efficient_responses(const Game& game, std::size_t agent,
                                             std::span<const std::size_t> profile);

SolveResult pareto_nash_normal(const NormalFormGame& game);
SolveResult pareto_nash_symmetric(const SymmetricGame& game);
// Exhaustive over profiles; payoffs are read from the local tables and each
// agent's efficient-response mask is computed once per local neighborhood.
SolveResult pareto_nash_graphical(const GraphicalGame& game);
SolveResult pareto_nash(const Game& game);

// Pure Nash equilibria of the single-objective game where agent i's payoff is
// the dot product weights[i] · u^i. Every weight component must be > 0.
// Returns profiles (also for symmetric games), ascending by profile index.
std::vector<Profile> scalarized_nash(const Game& game,
                                     const std::vector<PayoffVector>& weights);

}  // namespace mogkit

#endif  // MOGKIT_EQUILIBRIA_HPP_
