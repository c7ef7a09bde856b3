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

// Independent reference implementations and random fixtures for tests.
// Nothing here calls the solvers it is used to check.

#ifndef MOGKIT_TESTS_ORACLES_HPP_
#define MOGKIT_TESTS_ORACLES_HPP_

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "mogkit/game_forms.hpp"
#include "mogkit/payoff_vector.hpp"
#include "mogkit/random.hpp"
#include "mogkit/vector_set.hpp"

namespace mogkit::testing {

inline PayoffVector Vec(std::initializer_list<Rational> xs) { return PayoffVector(xs); }

inline Rational Q(long num, long den = 1) {
  Rational r{mpz_class(num), mpz_class(den)};
  r.canonicalize();
  return r;
}

// Random rational in [lo, hi] with denominator dividing `den`.
inline Rational RandomRational(Rng& rng, long lo, long hi, long den) {
  std::uniform_int_distribution<long> dist(lo * den, hi * den);
  return Q(dist(rng), den);
}

inline PayoffVector RandomVector(Rng& rng, std::size_t d, long lo, long hi, long den = 1) {
  std::vector<Rational> xs;
  for (std::size_t k = 0; k < d; ++k) xs.push_back(RandomRational(rng, lo, hi, den));
  return PayoffVector(std::move(xs));
}

// Strictly positive entries, numerators in [1, hi*den].
inline PayoffVector RandomPositive(Rng& rng, std::size_t d, long hi, long den) {
  std::vector<Rational> xs;
  std::uniform_int_distribution<long> dist(1, hi * den);
  for (std::size_t k = 0; k < d; ++k) xs.push_back(Q(dist(rng), den));
  return PayoffVector(std::move(xs));
}

inline VectorSet RandomSet(Rng& rng, std::size_t size, std::size_t d, long lo, long hi,
                           long den = 1) {
  std::vector<PayoffVector> vs;
  for (std::size_t i = 0; i < size; ++i) vs.push_back(RandomVector(rng, d, lo, hi, den));
  return VectorSet(std::move(vs));
}

inline VectorSet RandomPositiveSet(Rng& rng, std::size_t size, std::size_t d, long hi,
                                   long den) {
  std::vector<PayoffVector> vs;
  for (std::size_t i = 0; i < size; ++i) vs.push_back(RandomPositive(rng, d, hi, den));
  return VectorSet(std::move(vs));
}

inline std::size_t Uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

// Every profile where no agent has a unilateral deviation whose payoff
// dominates its current payoff, by direct comparison.
inline std::vector<Profile> NaivePareto(const Game& game) {
  const auto actions = action_counts(game);
  const std::size_t total = num_profiles(actions);
  std::vector<Profile> out;
  for (std::size_t idx = 0; idx < total; ++idx) {
    Profile a = profile_from_index(idx, actions);
    bool stable = true;
    for (std::size_t i = 0; i < actions.size() && stable; ++i) {
      const PayoffVector current = payoff(game, a, i);
      Profile b = a;
      for (std::size_t alt = 0; alt < actions[i] && stable; ++alt) {
        b[i] = alt;
        if (dominates(payoff(game, b, i), current)) stable = false;
      }
    }
    if (stable) out.push_back(std::move(a));
  }
  return out;
}

// Classical pure Nash equilibria of the weighted-sum scalarization.
inline std::vector<Profile> NaiveScalarNash(const Game& game,
                                            const std::vector<PayoffVector>& weights) {
  const auto actions = action_counts(game);
  auto value = [&](const Profile& a, std::size_t i) {
    const PayoffVector u = payoff(game, a, i);
    Rational s = 0;
    for (std::size_t k = 0; k < u.dim(); ++k) s += weights[i][k] * u[k];
    return s;
  };
  std::vector<Profile> out;
  for (std::size_t idx = 0; idx < num_profiles(actions); ++idx) {
    Profile a = profile_from_index(idx, actions);
    bool stable = true;
    for (std::size_t i = 0; i < actions.size() && stable; ++i) {
      const Rational current = value(a, i);
      Profile b = a;
      for (std::size_t alt = 0; alt < actions[i] && stable; ++alt) {
        b[i] = alt;
        if (value(b, i) > current) stable = false;
      }
    }
    if (stable) out.push_back(std::move(a));
  }
  return out;
}

inline std::vector<PayoffVector> AllWelfare(const Game& game) {
  const auto actions = action_counts(game);
  std::vector<PayoffVector> out;
  for (std::size_t idx = 0; idx < num_profiles(actions); ++idx) {
    const Profile a = profile_from_index(idx, actions);
    PayoffVector sum = payoff(game, a, 0);
    for (std::size_t i = 1; i < actions.size(); ++i) sum += payoff(game, a, i);
    out.push_back(std::move(sum));
  }
  return out;
}

inline std::set<Configuration> ConfigurationsOf(const std::vector<Profile>& profiles,
                                                std::size_t alpha) {
  std::set<Configuration> out;
  for (const auto& p : profiles) out.insert(configuration_of(p, alpha));
  return out;
}

// Quadratic EFF over a raw list, written without VectorSet helpers.
inline std::set<PayoffVector> NaiveEff(const std::vector<PayoffVector>& xs) {
  std::set<PayoffVector> out;
  for (const auto& y : xs) {
    bool dominated = false;
    for (const auto& x : xs) {
      if (dominates(x, y)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) out.insert(y);
  }
  return out;
}

inline std::set<PayoffVector> AsSet(const VectorSet& s) {
  return std::set<PayoffVector>(s.begin(), s.end());
}

// True iff (1+eps)-scaled `a` weakly dominates `b`.
inline bool ScaledCovers(const Rational& factor, const PayoffVector& a,
                         const PayoffVector& b) {
  return weakly_dominates(factor * a, b);
}

}  // namespace mogkit::testing

#endif  // MOGKIT_TESTS_ORACLES_HPP_
