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

#include "mogkit/potential.hpp"

#include <algorithm>
#include <random>
#include <utility>

#include "mogkit/equilibria.hpp"
#include "mogkit/errors.hpp"
#include "mogkit/random.hpp"

namespace mogkit {
namespace {

void RequireSameShape(const NormalFormGame& game, const PotentialAnnotation& phi) {
  if (game.actions() != phi.actions() || game.dim() != phi.dim()) {
    throw InvalidArgument("potential table is not shaped like the game");
  }
}

PayoffVector DrawVector(Rng& rng, std::size_t d, long lo, long hi) {
  std::uniform_int_distribution<long> dist(lo, hi);
  std::vector<Rational> v(d);
  for (auto& c : v) c = dist(rng);
  return PayoffVector(std::move(v));
}

}  // namespace

bool is_exact_potential(const NormalFormGame& game, const PotentialAnnotation& phi) {
  RequireSameShape(game, phi);
  const auto& actions = game.actions();
  const std::size_t total = game.num_profiles();
  std::size_t stride = total;
  for (std::size_t i = 0; i < game.num_agents(); ++i) {
    stride /= actions[i];
    for (std::size_t p = 0; p < total; ++p) {
      const std::size_t own = (p / stride) % actions[i];
      const std::size_t base = p - own * stride;
      for (std::size_t b = 0; b < actions[i]; ++b) {
        const std::size_t q = base + b * stride;
        if (q == p) continue;
        for (std::size_t k = 0; k < game.dim(); ++k) {
          if (phi.value(q)[k] - phi.value(p)[k] !=
              game.payoff(q, i)[k] - game.payoff(p, i)[k]) {
            return false;
          }
        }
      }
    }
  }
  return true;
}

std::vector<Profile> locally_efficient(const PotentialAnnotation& phi) {
  const auto& actions = phi.actions();
  const std::size_t total = num_profiles(actions);
  std::vector<Profile> out;
  for (std::size_t p = 0; p < total; ++p) {
    bool dominated = false;
    std::size_t stride = total;
    for (std::size_t i = 0; i < actions.size() && !dominated; ++i) {
      stride /= actions[i];
      const std::size_t base = p - ((p / stride) % actions[i]) * stride;
      for (std::size_t b = 0; b < actions[i] && !dominated; ++b) {
        dominated = dominates(phi.value(base + b * stride), phi.value(p));
      }
    }
    if (!dominated) out.push_back(profile_from_index(p, actions));
  }
  return out;
}

PotentialReport check_potential_equivalence(const NormalFormGame& game,
                                            const PotentialAnnotation& phi) {
  if (!is_exact_potential(game, phi)) {
    throw PotentialInvalid("annotation is not an exact potential of the game");
  }
  PotentialReport report;
  report.pareto_nash = pareto_nash_normal(game).pn;
  report.locally_efficient = locally_efficient(phi);
  report.sets_equal = report.pareto_nash == report.locally_efficient;
  report.nonempty = !report.pareto_nash.empty() && !report.locally_efficient.empty();
  return report;
}

PotentialGame gen_potential_game(std::size_t n, std::size_t alpha, std::size_t d,
                                 long lo, long hi, std::uint64_t seed,
                                 bool identical_interest) {
  if (n == 0 || alpha == 0 || d == 0) {
    throw InvalidArgument("gen_potential_game needs n, alpha, d >= 1");
  }
  if (lo > hi) throw InvalidArgument("payoff range is empty");
  Rng rng(mix_seed(seed));
  std::vector<std::size_t> actions(n, alpha);
  const std::size_t total = num_profiles(actions);

  std::vector<PayoffVector> phi;
  phi.reserve(total);
  for (std::size_t p = 0; p < total; ++p) phi.push_back(DrawVector(rng, d, lo, hi));

  std::vector<std::vector<PayoffVector>> payoffs(n);
  std::size_t stride = total;
  for (std::size_t i = 0; i < n; ++i) {
    stride /= alpha;
    // w^i indexed by the adversary profile (agent i's digit removed).
    std::vector<PayoffVector> dummy;
    if (!identical_interest) {
      dummy.reserve(total / alpha);
      for (std::size_t r = 0; r < total / alpha; ++r) {
        dummy.push_back(DrawVector(rng, d, lo, hi));
      }
    }
    payoffs[i].reserve(total);
    for (std::size_t p = 0; p < total; ++p) {
      if (identical_interest) {
        payoffs[i].push_back(phi[p]);
        continue;
      }
      const std::size_t adversary = (p / (stride * alpha)) * stride + p % stride;
      payoffs[i].push_back(phi[p] + dummy[adversary]);
    }
  }
  PotentialGame out{NormalFormGame(d, actions, std::move(payoffs)),
                    PotentialAnnotation(d, actions, std::move(phi))};
  return out;
}

}  // namespace mogkit
