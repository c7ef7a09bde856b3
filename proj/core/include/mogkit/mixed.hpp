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

#ifndef MOGKIT_MIXED_HPP_
#define MOGKIT_MIXED_HPP_

#include <cstddef>
#include <vector>

#include "mogkit/game_forms.hpp"
#include "mogkit/rational.hpp"

namespace mogkit {

// One probability distribution per agent over that agent's actions.
class MixedProfile {
 public:
  MixedProfile() = default;
  // Each distribution must be non-negative and sum to exactly 1.
  explicit MixedProfile(std::vector<std::vector<Rational>> distributions);

  // Point masses on `profile`.
  static MixedProfile Pure(std::span<const std::size_t> profile,
                           std::span<const std::size_t> actions);

  std::size_t num_agents() const { return distributions_.size(); }
  const std::vector<Rational>& distribution(std::size_t agent) const {
    return distributions_[agent];
  }
  const std::vector<std::vector<Rational>>& distributions() const {
    return distributions_;
  }

 private:
  std::vector<std::vector<Rational>> distributions_;
};

// E_{a ~ p}[u^i(a)].
PayoffVector expected_payoff(const Game& game, const MixedProfile& profile,
                             std::size_t agent);

// Row b holds u^i(b, p^-i): the expected payoff of each pure action of
// `agent` against the other agents' mixtures.
std::vector<PayoffVector> expected_rows(const Game& game, const MixedProfile& profile,
                                        std::size_t agent);

struct MixtureDomination {
  bool dominated = false;
  // A distribution over rows whose expected vector dominates the target,
  // when dominated.
  std::vector<Rational> witness;
};

// Decides whether some mixture q of `rows` satisfies sum_b q_b rows[b] ≻ target
// by maximizing sum_k delta_k subject to
//   sum_b q_b rows[b]_k >= target_k + delta_k,  delta >= 0,  q in the simplex.
MixtureDomination mixture_domination(const std::vector<PayoffVector>& rows,
                                     const PayoffVector& target);

// No agent has a mixed deviation whose expected vector Pareto-dominates its
// current expected vector.
bool is_def4_equilibrium(const Game& game, const MixedProfile& profile);

// Every action played with positive probability is a Pareto-efficient pure
// response against the other agents' mixtures.
bool is_def5_equilibrium(const Game& game, const MixedProfile& profile);

}  // namespace mogkit

#endif  // MOGKIT_MIXED_HPP_
