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

#include "mogkit/mixed.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

#include "mogkit/errors.hpp"
#include "mogkit/simplex.hpp"
#include "mogkit/vector_set.hpp"

namespace mogkit {
namespace {

void RequireMatches(const Game& game, const MixedProfile& profile) {
  const auto actions = action_counts(game);
  if (profile.num_agents() != actions.size()) {
    throw InvalidArgument("mixed profile has " + std::to_string(profile.num_agents()) +
                          " agents, game has " + std::to_string(actions.size()));
  }
  for (std::size_t i = 0; i < actions.size(); ++i) {
    if (profile.distribution(i).size() != actions[i]) {
      throw InvalidArgument("distribution of agent " + std::to_string(i) +
                            " does not match its action count");
    }
  }
}

// Calls visit(profile, weight) for every profile in the product of the
// supports, where weight is the product of probabilities of all agents other
// than `skip` (pass num_agents to include everyone).
template <class Visit>
void ForEachSupported(const MixedProfile& mixed, std::size_t skip, Visit&& visit) {
  const std::size_t n = mixed.num_agents();
  std::vector<std::vector<std::size_t>> support(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t a = 0; a < mixed.distribution(i).size(); ++a) {
      if (i == skip || sgn(mixed.distribution(i)[a]) > 0) support[i].push_back(a);
    }
  }
  std::vector<std::size_t> cursor(n, 0);
  Profile profile(n);
  while (true) {
    Rational weight = 1;
    for (std::size_t i = 0; i < n; ++i) {
      profile[i] = support[i][cursor[i]];
      if (i != skip) weight *= mixed.distribution(i)[profile[i]];
    }
    visit(profile, weight);
    std::size_t i = n;
    while (i-- > 0) {
      if (++cursor[i] < support[i].size()) break;
      cursor[i] = 0;
    }
    if (i == static_cast<std::size_t>(-1)) return;
  }
}

}  // namespace

MixedProfile::MixedProfile(std::vector<std::vector<Rational>> distributions)
    : distributions_(std::move(distributions)) {
  if (distributions_.empty()) throw InvalidArgument("mixed profile has no agents");
  for (std::size_t i = 0; i < distributions_.size(); ++i) {
    const auto& dist = distributions_[i];
    if (dist.empty()) {
      throw InvalidArgument("agent " + std::to_string(i) + " has an empty distribution");
    }
    Rational total = 0;
    for (const auto& p : dist) {
      if (sgn(p) < 0) {
        throw InvalidArgument("agent " + std::to_string(i) +
                              " has a negative probability");
      }
      total += p;
    }
    if (total != 1) {
      throw InvalidArgument("distribution of agent " + std::to_string(i) +
                            " sums to " + to_string(total) + ", not 1");
    }
  }
}

MixedProfile MixedProfile::Pure(std::span<const std::size_t> profile,
                                std::span<const std::size_t> actions) {
  if (profile.size() != actions.size()) throw InvalidArgument("profile size mismatch");
  std::vector<std::vector<Rational>> dists(actions.size());
  for (std::size_t i = 0; i < actions.size(); ++i) {
    if (profile[i] >= actions[i]) throw InvalidArgument("action out of range");
    dists[i].assign(actions[i], 0);
    dists[i][profile[i]] = 1;
  }
  return MixedProfile(std::move(dists));
}

PayoffVector expected_payoff(const Game& game, const MixedProfile& profile,
                             std::size_t agent) {
  RequireMatches(game, profile);
  if (agent >= profile.num_agents()) throw InvalidArgument("agent out of range");
  PayoffVector total = PayoffVector::Zeros(dim(game));
  ForEachSupported(profile, profile.num_agents(),
                   [&](const Profile& a, const Rational& weight) {
                     total += weight * payoff(game, a, agent);
                   });
  return total;
}

std::vector<PayoffVector> expected_rows(const Game& game, const MixedProfile& profile,
                                        std::size_t agent) {
  RequireMatches(game, profile);
  if (agent >= profile.num_agents()) throw InvalidArgument("agent out of range");
  std::vector<PayoffVector> rows(profile.distribution(agent).size(),
                                 PayoffVector::Zeros(dim(game)));
  ForEachSupported(profile, agent, [&](const Profile& a, const Rational& weight) {
    rows[a[agent]] += weight * payoff(game, a, agent);
  });
  return rows;
}

MixtureDomination mixture_domination(const std::vector<PayoffVector>& rows,
                                     const PayoffVector& target) {
  if (rows.empty()) throw InvalidArgument("mixture_domination needs rows");
  const std::size_t alpha = rows.size();
  const std::size_t d = target.dim();
  for (const auto& r : rows) {
    if (r.dim() != d) throw InvalidArgument("row dimension mismatch");
  }
  // Variables: q_0..q_{alpha-1}, delta_0..delta_{d-1}.
  LinearProgram lp;
  lp.objective.assign(alpha + d, 0);
  for (std::size_t k = 0; k < d; ++k) lp.objective[alpha + k] = 1;
  for (std::size_t k = 0; k < d; ++k) {
    std::vector<Rational> row(alpha + d, 0);
    for (std::size_t b = 0; b < alpha; ++b) row[b] = rows[b][k];
    row[alpha + k] = -1;
    lp.rows.push_back(std::move(row));
    lp.relations.push_back(Relation::kGreaterEqual);
    lp.rhs.push_back(target[k]);
  }
  std::vector<Rational> simplex_row(alpha + d, 0);
  for (std::size_t b = 0; b < alpha; ++b) simplex_row[b] = 1;
  lp.rows.push_back(std::move(simplex_row));
  lp.relations.push_back(Relation::kEqual);
  lp.rhs.push_back(1);

  const LpSolution sol = solve_lp(lp);
  MixtureDomination out;
  if (sol.status != LpStatus::kOptimal || sgn(sol.value) <= 0) return out;

  // Confirm the witness exactly: its expected vector must dominate the target.
  std::vector<Rational> q(sol.x.begin(), sol.x.begin() + static_cast<std::ptrdiff_t>(alpha));
  PayoffVector mixed = PayoffVector::Zeros(d);
  for (std::size_t b = 0; b < alpha; ++b) mixed += q[b] * rows[b];
  if (!dominates(mixed, target)) {
    throw std::logic_error("simplex witness does not dominate the target");
  }
  out.dominated = true;
  out.witness = std::move(q);
  return out;
}

bool is_def4_equilibrium(const Game& game, const MixedProfile& profile) {
  RequireMatches(game, profile);
  for (std::size_t i = 0; i < profile.num_agents(); ++i) {
    const auto rows = expected_rows(game, profile, i);
    PayoffVector current = PayoffVector::Zeros(dim(game));
    for (std::size_t b = 0; b < rows.size(); ++b) {
      current += profile.distribution(i)[b] * rows[b];
    }
    if (mixture_domination(rows, current).dominated) return false;
  }
  return true;
}

bool is_def5_equilibrium(const Game& game, const MixedProfile& profile) {
  RequireMatches(game, profile);
  for (std::size_t i = 0; i < profile.num_agents(); ++i) {
    const auto rows = expected_rows(game, profile, i);
    const auto efficient = efficient_indices(rows);
    std::vector<bool> is_efficient(rows.size(), false);
    for (std::size_t b : efficient) is_efficient[b] = true;
    for (std::size_t b = 0; b < rows.size(); ++b) {
      if (sgn(profile.distribution(i)[b]) > 0 && !is_efficient[b]) return false;
    }
  }
  return true;
}

}  // namespace mogkit
