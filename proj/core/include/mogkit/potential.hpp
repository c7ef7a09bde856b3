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

#ifndef MOGKIT_POTENTIAL_HPP_
#define MOGKIT_POTENTIAL_HPP_

#include <cstdint>
#include <utility>
#include <vector>

#include "mogkit/game_forms.hpp"

namespace mogkit {

// True iff for every profile a, agent i, deviation b and objective k:
//   phi_k(b, a^-i) - phi_k(a) == u^i_k(b, a^-i) - u^i_k(a).
// Throws InvalidArgument if phi is not shaped like the game.
bool is_exact_potential(const NormalFormGame& game, const PotentialAnnotation& phi);

// Profiles whose potential is not dominated by the potential of any
// unilateral deviation, ascending by profile index.
std::vector<Profile> locally_efficient(const PotentialAnnotation& phi);

struct PotentialReport {
  std::vector<Profile> pareto_nash;
  std::vector<Profile> locally_efficient;
  bool sets_equal = false;
  bool nonempty = false;
  bool holds() const { return sets_equal && nonempty; }
};

// Compares the Pareto-Nash set of the game to LOC(phi). Throws
// PotentialInvalid when phi is not an exact potential of the game.
PotentialReport check_potential_equivalence(const NormalFormGame& game,
                                            const PotentialAnnotation& phi);

struct PotentialGame {
  NormalFormGame game;
  PotentialAnnotation phi;
};

// Draws phi uniformly over [lo, hi]^d per profile and, unless
// `identical_interest`, a dummy term w^i(a^-i) per agent over the same range;
// then u^i(a) = phi(a) + w^i(a^-i). Deterministic in `seed`.
PotentialGame gen_potential_game(std::size_t n, std::size_t alpha, std::size_t d,
                                 long lo, long hi, std::uint64_t seed,
                                 bool identical_interest = false);

}  // namespace mogkit

#endif  // MOGKIT_POTENTIAL_HPP_
