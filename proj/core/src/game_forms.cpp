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

#include "mogkit/game_forms.hpp"

#include <algorithm>
#include <limits>
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

std::size_t CheckedMul(std::size_t a, std::size_t b) {
  if (a != 0 && b > std::numeric_limits<std::size_t>::max() / a) {
    throw InvalidArgument("profile count overflows");
  }
  return a * b;
}

void CheckActions(const std::vector<std::size_t>& actions) {
  if (actions.empty()) throw MalformedGame("game needs at least one agent");
  for (std::size_t i = 0; i < actions.size(); ++i) {
    if (actions[i] == 0) {
      throw MalformedGame("agent " + std::to_string(i) + " has no actions");
    }
  }
}

void CheckTable(const std::vector<PayoffVector>& table, std::size_t size,
                std::size_t d, const std::string& what) {
  if (table.size() != size) {
    throw MalformedGame(what + " has " + std::to_string(table.size()) +
                        " entries, expected " + std::to_string(size));
  }
  for (const auto& v : table) {
    if (v.dim() != d) {
      throw MalformedGame(what + " contains a vector of dimension " +
                          std::to_string(v.dim()) + ", expected " +
                          std::to_string(d));
    }
  }
}

void BuildConfigurations(std::size_t remaining, std::size_t pos,
                         Configuration& current, std::vector<Configuration>& out) {
  if (pos + 1 == current.size()) {
    current[pos] = remaining;
    out.push_back(current);
    return;
  }
  for (std::size_t c = 0; c <= remaining; ++c) {
    current[pos] = c;
    BuildConfigurations(remaining - c, pos + 1, current, out);
  }
}

void CheckProfile(std::span<const std::size_t> profile,
                  std::span<const std::size_t> actions) {
  if (profile.size() != actions.size()) {
    throw InvalidArgument("profile has " + std::to_string(profile.size()) +
                          " entries for " + std::to_string(actions.size()) +
                          " agents");
  }
  for (std::size_t i = 0; i < profile.size(); ++i) {
    if (profile[i] >= actions[i]) {
      throw InvalidArgument("action " + std::to_string(profile[i]) +
                            " out of range for agent " + std::to_string(i));
    }
  }
}

}  // namespace

std::size_t num_profiles(std::span<const std::size_t> actions) {
  std::size_t total = 1;
  for (std::size_t a : actions) total = CheckedMul(total, a);
  return total;
}

std::size_t profile_index(std::span<const std::size_t> profile,
                          std::span<const std::size_t> actions) {
  CheckProfile(profile, actions);
  std::size_t index = 0;
  for (std::size_t i = 0; i < profile.size(); ++i) {
    index = index * actions[i] + profile[i];
  }
  return index;
}

Profile profile_from_index(std::size_t index, std::span<const std::size_t> actions) {
  if (index >= num_profiles(actions)) {
    throw InvalidArgument("profile index " + std::to_string(index) + " out of range");
  }
  Profile profile(actions.size());
  for (std::size_t i = actions.size(); i-- > 0;) {
    profile[i] = index % actions[i];
    index /= actions[i];
  }
  return profile;
}

std::vector<Configuration> configurations(std::size_t n, std::size_t alpha) {
  if (n == 0 || alpha == 0) {
    throw InvalidArgument("configurations need n >= 1 and alpha >= 1");
  }
  std::vector<Configuration> out;
  out.reserve(binomial(n + alpha - 1, alpha - 1));
  Configuration current(alpha, 0);
  BuildConfigurations(n, 0, current, out);
  return out;
}

Configuration configuration_of(std::span<const std::size_t> profile,
                               std::size_t alpha) {
  Configuration c(alpha, 0);
  for (std::size_t a : profile) {
    if (a >= alpha) throw InvalidArgument("action out of range in configuration_of");
    ++c[a];
  }
  return c;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  // result * (n - k + i) / i stays integral at every step.
  __extension__ using U128 = unsigned __int128;
  U128 result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    result = result * (n - k + i) / i;
    if (result > std::numeric_limits<std::uint64_t>::max()) {
      throw InvalidArgument("binomial coefficient overflows 64 bits");
    }
  }
  return static_cast<std::uint64_t>(result);
}

// ---------------------------------------------------------------------------

NormalFormGame::NormalFormGame(std::size_t d, std::vector<std::size_t> actions,
                               std::vector<std::vector<PayoffVector>> payoffs)
    : d_(d), actions_(std::move(actions)), payoffs_(std::move(payoffs)) {
  if (d_ == 0) throw MalformedGame("d must be >= 1");
  CheckActions(actions_);
  num_profiles_ = mogkit::num_profiles(actions_);
  if (payoffs_.size() != actions_.size()) {
    throw MalformedGame("payoff tables for " + std::to_string(payoffs_.size()) +
                        " agents, expected " + std::to_string(actions_.size()));
  }
  for (std::size_t i = 0; i < payoffs_.size(); ++i) {
    CheckTable(payoffs_[i], num_profiles_, d_,
               "payoff table of agent " + std::to_string(i));
  }
}

const PayoffVector& NormalFormGame::payoff(std::span<const std::size_t> profile,
                                           std::size_t agent) const {
  if (agent >= num_agents()) throw InvalidArgument("agent out of range");
  return payoffs_[agent][profile_index(profile, actions_)];
}

// ---------------------------------------------------------------------------

SymmetricGame::SymmetricGame(std::size_t n, std::size_t alpha, std::size_t d,
                             std::vector<SymmetricEntry> entries)
    : n_(n), alpha_(alpha), d_(d) {
  if (n_ == 0 || alpha_ == 0 || d_ == 0) {
    throw MalformedGame("symmetric game needs n, alpha, d >= 1");
  }
  configs_ = mogkit::configurations(n_, alpha_);
  for (std::size_t r = 0; r < configs_.size(); ++r) rank_.emplace(configs_[r], r);
  table_.assign(configs_.size() * alpha_, PayoffVector());
  std::vector<bool> seen(table_.size(), false);
  for (auto& e : entries) {
    auto it = rank_.find(e.config);
    if (it == rank_.end()) {
      throw MalformedGame("entry has an invalid configuration");
    }
    if (e.action >= alpha_ || e.config[e.action] == 0) {
      throw MalformedGame("entry action " + std::to_string(e.action) +
                          " is not played in its configuration");
    }
    if (e.payoff.dim() != d_) {
      throw MalformedGame("entry payoff has dimension " +
                          std::to_string(e.payoff.dim()));
    }
    std::size_t slot = it->second * alpha_ + e.action;
    if (seen[slot]) throw MalformedGame("duplicate symmetric table entry");
    seen[slot] = true;
    table_[slot] = std::move(e.payoff);
  }
  for (std::size_t r = 0; r < configs_.size(); ++r) {
    for (std::size_t a = 0; a < alpha_; ++a) {
      if (configs_[r][a] > 0 && !seen[r * alpha_ + a]) {
        throw MalformedGame("missing symmetric table entry for action " +
                            std::to_string(a));
      }
    }
  }
}

std::size_t SymmetricGame::rank_of(const Configuration& config) const {
  auto it = rank_.find(config);
  if (it == rank_.end()) throw MalformedGame("unknown configuration");
  return it->second;
}

const PayoffVector& SymmetricGame::payoff_star(std::size_t action,
                                               const Configuration& config) const {
  if (action >= alpha_) throw InvalidArgument("action out of range");
  const PayoffVector& v = table_[rank_of(config) * alpha_ + action];
  if (v.dim() == 0) {
    throw MalformedGame("no payoff for an action absent from its configuration");
  }
  return v;
}

const PayoffVector& SymmetricGame::payoff(std::span<const std::size_t> profile,
                                          std::size_t agent) const {
  if (agent >= n_) throw InvalidArgument("agent out of range");
  CheckProfile(profile, actions());
  return payoff_star(profile[agent], configuration_of(profile, alpha_));
}

std::vector<SymmetricEntry> SymmetricGame::entries() const {
  std::vector<SymmetricEntry> out;
  for (std::size_t r = 0; r < configs_.size(); ++r) {
    for (std::size_t a = 0; a < alpha_; ++a) {
      if (configs_[r][a] > 0) out.push_back({a, configs_[r], table_[r * alpha_ + a]});
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

GraphicalGame::GraphicalGame(std::size_t d, std::vector<std::size_t> actions,
                             std::vector<std::vector<std::size_t>> scopes,
                             std::vector<std::vector<PayoffVector>> tables)
    : d_(d),
      actions_(std::move(actions)),
      scopes_(std::move(scopes)),
      tables_(std::move(tables)) {
  if (d_ == 0) throw MalformedGame("d must be >= 1");
  CheckActions(actions_);
  const std::size_t n = actions_.size();
  if (scopes_.size() != n || tables_.size() != n) {
    throw MalformedGame("graphical game needs one scope and one table per agent");
  }
  local_actions_.resize(n);
  self_pos_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& s = scopes_[i];
    if (!std::is_sorted(s.begin(), s.end()) ||
        std::adjacent_find(s.begin(), s.end()) != s.end()) {
      throw MalformedGame("scope of agent " + std::to_string(i) +
                          " is not sorted and duplicate-free");
    }
    auto self = std::lower_bound(s.begin(), s.end(), i);
    if (self == s.end() || *self != i) {
      throw MalformedGame("scope of agent " + std::to_string(i) +
                          " does not contain the agent");
    }
    if (s.back() >= n) throw MalformedGame("scope references an unknown agent");
    self_pos_[i] = static_cast<std::size_t>(self - s.begin());
    for (std::size_t j : s) local_actions_[i].push_back(actions_[j]);
    CheckTable(tables_[i], mogkit::num_profiles(local_actions_[i]), d_,
               "local table of agent " + std::to_string(i));
  }
}

std::size_t GraphicalGame::local_index(std::span<const std::size_t> profile,
                                       std::size_t agent) const {
  std::size_t index = 0;
  const auto& s = scopes_[agent];
  for (std::size_t j = 0; j < s.size(); ++j) {
    index = index * local_actions_[agent][j] + profile[s[j]];
  }
  return index;
}

const PayoffVector& GraphicalGame::payoff(std::span<const std::size_t> profile,
                                          std::size_t agent) const {
  if (agent >= num_agents()) throw InvalidArgument("agent out of range");
  CheckProfile(profile, actions_);
  return tables_[agent][local_index(profile, agent)];
}

// ---------------------------------------------------------------------------

PotentialAnnotation::PotentialAnnotation(std::size_t d, std::vector<std::size_t> actions,
                                         std::vector<PayoffVector> phi)
    : d_(d), actions_(std::move(actions)), phi_(std::move(phi)) {
  if (d_ == 0) throw MalformedGame("d must be >= 1");
  CheckActions(actions_);
  CheckTable(phi_, mogkit::num_profiles(actions_), d_, "potential table");
}

// ---------------------------------------------------------------------------

std::string_view kind_name(const Game& game) {
  return std::visit(Overloaded{
                        [](const NormalFormGame&) { return std::string_view("normal"); },
                        [](const SymmetricGame&) { return std::string_view("symmetric"); },
                        [](const GraphicalGame&) { return std::string_view("graphical"); },
                    },
                    game);
}

std::size_t num_agents(const Game& game) {
  return std::visit([](const auto& g) { return g.num_agents(); }, game);
}

std::size_t dim(const Game& game) {
  return std::visit([](const auto& g) { return g.dim(); }, game);
}

std::vector<std::size_t> action_counts(const Game& game) {
  return std::visit(
      [](const auto& g) { return std::vector<std::size_t>(g.actions()); }, game);
}

PayoffVector payoff(const Game& game, std::span<const std::size_t> profile,
                    std::size_t agent) {
  return std::visit([&](const auto& g) { return g.payoff(profile, agent); }, game);
}

PayoffVector utilitarian(const Game& game, std::span<const std::size_t> profile) {
  const std::size_t n = num_agents(game);
  PayoffVector total = payoff(game, profile, 0);
  for (std::size_t i = 1; i < n; ++i) total += payoff(game, profile, i);
  return total;
}

std::uint64_t representation_length(const Game& game) {
  return std::visit(
      Overloaded{
          [](const NormalFormGame& g) -> std::uint64_t {
            return g.num_agents() * g.num_profiles() * g.dim();
          },
          [](const SymmetricGame& g) -> std::uint64_t {
            return g.alpha() * binomial(g.num_agents() + g.alpha() - 1, g.alpha() - 1) *
                   g.dim();
          },
          [](const GraphicalGame& g) -> std::uint64_t {
            std::uint64_t total = 0;
            for (std::size_t i = 0; i < g.num_agents(); ++i) {
              total += g.dim() * g.table(i).size();
            }
            return total;
          },
      },
      game);
}

NormalFormGame to_normal_form(const SymmetricGame& game) {
  const auto actions = game.actions();
  const std::size_t total = num_profiles(actions);
  std::vector<std::vector<PayoffVector>> payoffs(game.num_agents());
  for (auto& t : payoffs) t.reserve(total);
  for (std::size_t p = 0; p < total; ++p) {
    Profile profile = profile_from_index(p, actions);
    Configuration c = configuration_of(profile, game.alpha());
    for (std::size_t i = 0; i < game.num_agents(); ++i) {
      payoffs[i].push_back(game.payoff_star(profile[i], c));
    }
  }
  return NormalFormGame(game.dim(), actions, std::move(payoffs));
}

NormalFormGame to_normal_form(const GraphicalGame& game) {
  const auto& actions = game.actions();
  const std::size_t total = num_profiles(actions);
  std::vector<std::vector<PayoffVector>> payoffs(game.num_agents());
  for (auto& t : payoffs) t.reserve(total);
  for (std::size_t p = 0; p < total; ++p) {
    Profile profile = profile_from_index(p, actions);
    for (std::size_t i = 0; i < game.num_agents(); ++i) {
      payoffs[i].push_back(game.table(i)[game.local_index(profile, i)]);
    }
  }
  return NormalFormGame(game.dim(), actions, std::move(payoffs));
}

NormalFormGame to_normal_form(const Game& game) {
  return std::visit(Overloaded{
                        [](const NormalFormGame& g) { return g; },
                        [](const auto& g) { return to_normal_form(g); },
                    },
                    game);
}

}  // namespace mogkit
