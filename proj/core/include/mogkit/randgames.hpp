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

// Random game ensembles and Monte-Carlo estimators.

#ifndef MOGKIT_RANDGAMES_HPP_
#define MOGKIT_RANDGAMES_HPP_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "mogkit/game_forms.hpp"
#include "mogkit/random.hpp"

namespace mogkit {

// Integer payoff components drawn i.i.d. uniformly from [lo, hi].
NormalFormGame gen_uniform_normal(std::size_t n, std::size_t alpha, std::size_t d,
                                  long lo, long hi, std::uint64_t seed);
SymmetricGame gen_uniform_symmetric(std::size_t n, std::size_t alpha, std::size_t d,
                                    long lo, long hi, std::uint64_t seed);
GraphicalGame gen_uniform_graphical(std::vector<std::vector<std::size_t>> scopes,
                                    std::size_t alpha, std::size_t d, long lo,
                                    long hi, std::uint64_t seed);

// Scopes of an n1 x n2 grid (agent r * n2 + c): the agent and its 4-neighbors.
std::vector<std::vector<std::size_t>> grid_scopes(std::size_t n1, std::size_t n2);

GraphicalGame gen_uniform_grid_graphical(std::size_t n1, std::size_t n2,
                                         std::size_t alpha, std::size_t d, long lo,
                                         long hi, std::uint64_t seed);

// For every agent and adversary profile, the set of actions marked as
// efficient responses. Adversary profiles are indexed like profiles with the
// agent's own digit removed.
class ResponseTables {
 public:
  ResponseTables(std::size_t n, std::size_t alpha, std::size_t beta,
                 std::vector<std::vector<std::uint64_t>> masks);

  std::size_t num_agents() const { return n_; }
  std::size_t alpha() const { return alpha_; }
  std::size_t beta() const { return beta_; }
  std::size_t num_cells() const { return cells_; }
  bool marked(std::size_t agent, std::size_t cell, std::size_t action) const {
    return (masks_[agent][cell] >> action) & 1U;
  }
  std::uint64_t mask(std::size_t agent, std::size_t cell) const {
    return masks_[agent][cell];
  }

 private:
  std::size_t n_;
  std::size_t alpha_;
  std::size_t beta_;
  std::size_t cells_;
  std::vector<std::vector<std::uint64_t>> masks_;
};

// Each cell marks a uniformly random beta-subset, independently across cells.
// Requires 1 <= beta <= alpha <= 64.
ResponseTables gen_response_tables(std::size_t n, std::size_t alpha, std::size_t beta,
                                   Rng& rng);
ResponseTables gen_response_tables(std::size_t n, std::size_t alpha, std::size_t beta,
                                   std::uint64_t seed);

// Profiles where every agent's action is marked in its cell.
std::uint64_t count_pn(const ResponseTables& tables);

struct ZMoments {
  double mean = 0;
  double variance = 0;  // unbiased sample variance; 0 for a single trial
  std::vector<double> gammas;
  std::vector<double> tail_freq;  // share of trials with |Z - beta^n| <= gamma beta^n
  std::vector<std::uint64_t> samples;
};

// Trial t draws its tables from stream_rng(seed, t), so results do not
// depend on `threads`.
ZMoments estimate_z_moments(std::size_t n, std::size_t alpha, std::size_t beta,
                            std::size_t trials, std::uint64_t seed,
                            const std::vector<double>& gammas, unsigned threads = 1);

// 1 - 1 / (gamma^2 beta^n).
double chebyshev_tail_bound(std::size_t n, std::size_t beta, double gamma);

struct FrontSizeEstimate {
  double mean = 0;
  std::vector<std::size_t> samples;
};

// Per trial, draws alpha points uniformly in {u >= 0, sum u <= 1} of R^d and
// counts the Pareto-efficient ones.
FrontSizeEstimate simplex_front_size(std::size_t alpha, std::size_t d,
                                     std::size_t trials, std::uint64_t seed,
                                     unsigned threads = 1);

// d / (d!)^(1/d) * alpha^((d-1)/d).
double simplex_front_asymptote(std::size_t alpha, std::size_t d);

}  // namespace mogkit

#endif  // MOGKIT_RANDGAMES_HPP_
