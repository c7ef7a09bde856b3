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

#include "mogkit/equilibria.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "mogkit/errors.hpp"

namespace mogkit {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

// Marks which entries of `row` are Pareto-efficient within the row.
void EfficientMask(const std::vector<const PayoffVector*>& row,
                   std::vector<bool>& mask) {
  mask.assign(row.size(), true);
  for (std::size_t a = 0; a < row.size(); ++a) {
    for (std::size_t b = 0; b < row.size(); ++b) {
      if (b != a && dominates(*row[b], *row[a])) {
        mask[a] = false;
        break;
      }
    }
  }
}

// Keeps a running EFF of a stream of vectors without storing the stream.
class FrontierAccumulator {
 public:
  void Add(PayoffVector v) {
    pending_.push_back(std::move(v));
    if (pending_.size() >= 2 * front_.size() + 4096) Compact();
  }
  VectorSet Finish() {
    Compact();
    return front_;
  }

 private:
  void Compact() {
    if (pending_.empty()) return;
    pending_.insert(pending_.end(), front_.begin(), front_.end());
    front_ = eff_of(std::move(pending_));
    pending_.clear();
  }

  std::vector<PayoffVector> pending_;
  VectorSet front_;
};

void IncrementProfile(Profile& profile, const std::vector<std::size_t>& actions) {
  for (std::size_t i = profile.size(); i-- > 0;) {
    if (++profile[i] < actions[i]) return;
    profile[i] = 0;
  }
}

void FillOutcomeSets(SolveResult& result, std::vector<PayoffVector> outcomes,
                     VectorSet frontier) {
  result.outcomes = VectorSet(std::move(outcomes));
  result.eff_outcomes = eff(result.outcomes);
  result.wst_outcomes = wst(result.outcomes);
  result.frontier = std::move(frontier);
}

}  // namespace

std::vector<std::size_t> efficient_responses(const Game& game, std::size_t agent,
                                             std::span<const std::size_t> profile) {
  const auto actions = action_counts(game);
  if (agent >= actions.size()) throw InvalidArgument("agent out of range");
  Profile p(profile.begin(), profile.end());
  if (p.size() != actions.size()) throw InvalidArgument("profile size mismatch");
  p[agent] = 0;
  std::vector<PayoffVector> row;
  for (std::size_t b = 0; b < actions[agent]; ++b) {
    p[agent] = b;
    row.push_back(payoff(game, p, agent));
  }
  return efficient_indices(row);
}

SolveResult pareto_nash_normal(const NormalFormGame& game) {
  const std::size_t n = game.num_agents();
  const std::size_t total = game.num_profiles();
  const auto& actions = game.actions();
  std::vector<bool> stable(total, true);
  std::vector<const PayoffVector*> row;
  std::vector<bool> mask;

  std::size_t stride = total;
  for (std::size_t i = 0; i < n; ++i) {
    stride /= actions[i];
    const std::size_t alpha = actions[i];
    // Profiles whose digit for agent i is 0 enumerate the adversary profiles.
    for (std::size_t base = 0; base < total; ++base) {
      if ((base / stride) % alpha != 0) continue;
      row.clear();
      for (std::size_t b = 0; b < alpha; ++b) {
        row.push_back(&game.payoff(base + b * stride, i));
      }
      EfficientMask(row, mask);
      for (std::size_t b = 0; b < alpha; ++b) {
        if (!mask[b]) stable[base + b * stride] = false;
      }
    }
  }

  SolveResult result;
  std::vector<PayoffVector> outcomes;
  FrontierAccumulator frontier;
  for (std::size_t p = 0; p < total; ++p) {
    PayoffVector welfare = game.payoff(p, 0);
    for (std::size_t i = 1; i < n; ++i) welfare += game.payoff(p, i);
    if (stable[p]) {
      result.pn.push_back(profile_from_index(p, actions));
      outcomes.push_back(welfare);
    }
    frontier.Add(std::move(welfare));
  }
  FillOutcomeSets(result, std::move(outcomes), frontier.Finish());
  return result;
}

SolveResult pareto_nash_symmetric(const SymmetricGame& game) {
  const std::size_t alpha = game.alpha();
  SolveResult result;
  result.pn_are_configurations = true;
  std::vector<PayoffVector> outcomes;
  FrontierAccumulator frontier;
  for (const Configuration& c : game.configurations()) {
    bool stable = true;
    PayoffVector welfare = PayoffVector::Zeros(game.dim());
    for (std::size_t a = 0; a < alpha; ++a) {
      if (c[a] == 0) continue;
      const PayoffVector& current = game.payoff_star(a, c);
      welfare += Rational(static_cast<unsigned long>(c[a])) * current;
      for (std::size_t b = 0; b < alpha && stable; ++b) {
        if (b == a) continue;
        Configuration moved = c;
        --moved[a];
        ++moved[b];
        if (dominates(game.payoff_star(b, moved), current)) stable = false;
      }
    }
    if (stable) {
      result.pn.push_back(c);
      outcomes.push_back(welfare);
    }
    frontier.Add(std::move(welfare));
  }
  FillOutcomeSets(result, std::move(outcomes), frontier.Finish());
  return result;
}

SolveResult pareto_nash_graphical(const GraphicalGame& game) {
  const std::size_t n = game.num_agents();
  const auto& actions = game.actions();

  // efficient[i][L]: is agent i's own action efficient at local profile L.
  std::vector<std::vector<bool>> efficient(n);
  std::vector<const PayoffVector*> row;
  std::vector<bool> mask;
  for (std::size_t i = 0; i < n; ++i) {
    const auto& local = game.local_actions(i);
    const std::size_t size = game.table(i).size();
    std::size_t stride = 1;
    for (std::size_t j = game.self_position(i) + 1; j < local.size(); ++j) {
      stride *= local[j];
    }
    const std::size_t alpha = actions[i];
    efficient[i].assign(size, false);
    for (std::size_t base = 0; base < size; ++base) {
      if ((base / stride) % alpha != 0) continue;
      row.clear();
      for (std::size_t b = 0; b < alpha; ++b) {
        row.push_back(&game.table(i)[base + b * stride]);
      }
      EfficientMask(row, mask);
      for (std::size_t b = 0; b < alpha; ++b) {
        efficient[i][base + b * stride] = mask[b];
      }
    }
  }

  SolveResult result;
  std::vector<PayoffVector> outcomes;
  FrontierAccumulator frontier;
  const std::size_t total = num_profiles(actions);
  Profile profile(n, 0);
  for (std::size_t p = 0; p < total; ++p, IncrementProfile(profile, actions)) {
    bool stable = true;
    PayoffVector welfare = PayoffVector::Zeros(game.dim());
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t local = game.local_index(profile, i);
      welfare += game.table(i)[local];
      stable = stable && efficient[i][local];
    }
    if (stable) {
      result.pn.push_back(profile);
      outcomes.push_back(welfare);
    }
    frontier.Add(std::move(welfare));
  }
  FillOutcomeSets(result, std::move(outcomes), frontier.Finish());
  return result;
}

SolveResult pareto_nash(const Game& game) {
  return std::visit(
      Overloaded{
          [](const NormalFormGame& g) { return pareto_nash_normal(g); },
          [](const SymmetricGame& g) { return pareto_nash_symmetric(g); },
          [](const GraphicalGame& g) { return pareto_nash_graphical(g); },
      },
      game);
}

std::vector<Profile> scalarized_nash(const Game& game,
                                     const std::vector<PayoffVector>& weights) {
  const std::size_t n = num_agents(game);
  const std::size_t d = dim(game);
  if (weights.size() != n) {
    throw InvalidArgument("scalarized_nash needs one weight vector per agent");
  }
  for (const auto& w : weights) {
    if (w.dim() != d) throw InvalidArgument("weight vector dimension mismatch");
    if (!w.IsStrictlyPositive()) {
      throw InvalidArgument("scalarization weights must be strictly positive");
    }
  }
  const NormalFormGame normal = to_normal_form(game);
  const auto& actions = normal.actions();
  const std::size_t total = normal.num_profiles();

  // scalar[i][p] = weights[i] · u^i(p)
  std::vector<std::vector<Rational>> scalar(n, std::vector<Rational>(total));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t p = 0; p < total; ++p) {
      const PayoffVector& u = normal.payoff(p, i);
      Rational s = 0;
      for (std::size_t k = 0; k < d; ++k) s += weights[i][k] * u[k];
      scalar[i][p] = std::move(s);
    }
  }

  std::vector<bool> stable(total, true);
  std::size_t stride = total;
  for (std::size_t i = 0; i < n; ++i) {
    stride /= actions[i];
    for (std::size_t base = 0; base < total; ++base) {
      if ((base / stride) % actions[i] != 0) continue;
      Rational best = scalar[i][base];
      for (std::size_t b = 1; b < actions[i]; ++b) {
        if (scalar[i][base + b * stride] > best) best = scalar[i][base + b * stride];
      }
      for (std::size_t b = 0; b < actions[i]; ++b) {
        if (scalar[i][base + b * stride] < best) stable[base + b * stride] = false;
      }
    }
  }

  std::vector<Profile> out;
  for (std::size_t p = 0; p < total; ++p) {
    if (stable[p]) out.push_back(profile_from_index(p, actions));
  }
  return out;
}

}  // namespace mogkit
