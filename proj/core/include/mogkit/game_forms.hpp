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

// Game representations for multi-objective games and their payoff queries.
//
// Profiles are indexed row-major with agent 0 most significant:
//   index = sum_i profile[i] * prod_{j > i} actions[j].
// Graphical games use the same convention over each agent's sorted scope.

#ifndef MOGKIT_GAME_FORMS_HPP_
#define MOGKIT_GAME_FORMS_HPP_

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string_view>
#include <variant>
#include <vector>

#include "mogkit/payoff_vector.hpp"

namespace mogkit {

using Profile = std::vector<std::size_t>;
using Configuration = std::vector<std::size_t>;

// Product of the action counts. Throws InvalidArgument on overflow.
std::size_t num_profiles(std::span<const std::size_t> actions);

std::size_t profile_index(std::span<const std::size_t> profile,
                          std::span<const std::size_t> actions);
Profile profile_from_index(std::size_t index, std::span<const std::size_t> actions);

// All length-alpha count vectors summing to n, lexicographically ascending.
std::vector<Configuration> configurations(std::size_t n, std::size_t alpha);

// Count vector of a profile over `alpha` shared actions.
Configuration configuration_of(std::span<const std::size_t> profile,
                               std::size_t alpha);

// C(n, k) in 64 bits; throws InvalidArgument on overflow.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

class NormalFormGame {
 public:
  NormalFormGame() = default;
  // payoffs[i][p] is agent i's vector at profile index p.
  NormalFormGame(std::size_t d, std::vector<std::size_t> actions,
                 std::vector<std::vector<PayoffVector>> payoffs);

  std::size_t num_agents() const { return actions_.size(); }
  std::size_t dim() const { return d_; }
  const std::vector<std::size_t>& actions() const { return actions_; }
  std::size_t num_profiles() const { return num_profiles_; }

  const PayoffVector& payoff(std::size_t profile_idx, std::size_t agent) const {
    return payoffs_[agent][profile_idx];
  }
  const PayoffVector& payoff(std::span<const std::size_t> profile,
                             std::size_t agent) const;
  const std::vector<PayoffVector>& table(std::size_t agent) const {
    return payoffs_[agent];
  }

  friend bool operator==(const NormalFormGame&, const NormalFormGame&) = default;

 private:
  std::size_t d_ = 0;
  std::vector<std::size_t> actions_;
  std::size_t num_profiles_ = 0;
  std::vector<std::vector<PayoffVector>> payoffs_;
};

struct SymmetricEntry {
  std::size_t action;
  Configuration config;
  PayoffVector payoff;
};

// Anonymous game: an agent's payoff depends only on its own action and the
// configuration (agents per action) of the profile.
class SymmetricGame {
 public:
  SymmetricGame() = default;
  // Requires exactly one entry per (action, config) with config[action] >= 1.
  SymmetricGame(std::size_t n, std::size_t alpha, std::size_t d,
                std::vector<SymmetricEntry> entries);

  std::size_t num_agents() const { return n_; }
  std::size_t alpha() const { return alpha_; }
  std::size_t dim() const { return d_; }
  std::vector<std::size_t> actions() const {
    return std::vector<std::size_t>(n_, alpha_);
  }
  const std::vector<Configuration>& configurations() const { return configs_; }

  // u*(action, config). Throws MalformedGame if no such entry exists.
  const PayoffVector& payoff_star(std::size_t action, const Configuration& config) const;
  const PayoffVector& payoff(std::span<const std::size_t> profile,
                             std::size_t agent) const;

  // Entries in (config rank, action) order, suitable for serialization.
  std::vector<SymmetricEntry> entries() const;

  friend bool operator==(const SymmetricGame& a, const SymmetricGame& b) {
    return a.n_ == b.n_ && a.alpha_ == b.alpha_ && a.d_ == b.d_ &&
           a.table_ == b.table_;
  }

 private:
  std::size_t rank_of(const Configuration& config) const;

  std::size_t n_ = 0;
  std::size_t alpha_ = 0;
  std::size_t d_ = 0;
  std::vector<Configuration> configs_;
  std::map<Configuration, std::size_t> rank_;
  // table_[rank * alpha + action]; empty vector when config[action] == 0.
  std::vector<PayoffVector> table_;
};

// Graphical game: agent i's payoff reads only the actions of scope(i), a
// sorted list that always contains i.
class GraphicalGame {
 public:
  GraphicalGame() = default;
  GraphicalGame(std::size_t d, std::vector<std::size_t> actions,
                std::vector<std::vector<std::size_t>> scopes,
                std::vector<std::vector<PayoffVector>> tables);

  std::size_t num_agents() const { return actions_.size(); }
  std::size_t dim() const { return d_; }
  const std::vector<std::size_t>& actions() const { return actions_; }
  const std::vector<std::size_t>& scope(std::size_t agent) const {
    return scopes_[agent];
  }
  const std::vector<std::vector<std::size_t>>& scopes() const { return scopes_; }
  // Action counts of scope(agent), in scope order.
  const std::vector<std::size_t>& local_actions(std::size_t agent) const {
    return local_actions_[agent];
  }
  // Position of the agent inside its own scope.
  std::size_t self_position(std::size_t agent) const { return self_pos_[agent]; }
  const std::vector<PayoffVector>& table(std::size_t agent) const {
    return tables_[agent];
  }

  std::size_t local_index(std::span<const std::size_t> profile,
                          std::size_t agent) const;
  const PayoffVector& payoff(std::span<const std::size_t> profile,
                             std::size_t agent) const;

  friend bool operator==(const GraphicalGame& a, const GraphicalGame& b) {
    return a.d_ == b.d_ && a.actions_ == b.actions_ && a.scopes_ == b.scopes_ &&
           a.tables_ == b.tables_;
  }

 private:
  std::size_t d_ = 0;
  std::vector<std::size_t> actions_;
  std::vector<std::vector<std::size_t>> scopes_;
  std::vector<std::vector<std::size_t>> local_actions_;
  std::vector<std::size_t> self_pos_;
  std::vector<std::vector<PayoffVector>> tables_;
};

// Vector-valued exact potential over the profiles of a normal-form game.
class PotentialAnnotation {
 public:
  PotentialAnnotation() = default;
  PotentialAnnotation(std::size_t d, std::vector<std::size_t> actions,
                      std::vector<PayoffVector> phi);

  std::size_t dim() const { return d_; }
  const std::vector<std::size_t>& actions() const { return actions_; }
  const std::vector<PayoffVector>& values() const { return phi_; }
  const PayoffVector& value(std::size_t profile_idx) const { return phi_[profile_idx]; }

  friend bool operator==(const PotentialAnnotation&,
                         const PotentialAnnotation&) = default;

 private:
  std::size_t d_ = 0;
  std::vector<std::size_t> actions_;
  std::vector<PayoffVector> phi_;
};

using Game = std::variant<NormalFormGame, SymmetricGame, GraphicalGame>;

std::string_view kind_name(const Game& game);
std::size_t num_agents(const Game& game);
std::size_t dim(const Game& game);
std::vector<std::size_t> action_counts(const Game& game);

// Validates the profile, then dispatches to the form's lookup.
PayoffVector payoff(const Game& game, std::span<const std::size_t> profile,
                    std::size_t agent);

// Componentwise sum of every agent's payoff at `profile`.
PayoffVector utilitarian(const Game& game, std::span<const std::size_t> profile);

// Scalars needed to write the game down: n * prod(alpha) * d for normal form,
// alpha * C(n+alpha-1, alpha-1) * d for symmetric, and
// sum_i d * prod_{j in scope(i)} alpha_j for graphical games.
std::uint64_t representation_length(const Game& game);

// Explicit normal form of a compact game. Sizes are capped by num_profiles.
NormalFormGame to_normal_form(const SymmetricGame& game);
NormalFormGame to_normal_form(const GraphicalGame& game);
NormalFormGame to_normal_form(const Game& game);

}  // namespace mogkit

#endif  // MOGKIT_GAME_FORMS_HPP_
