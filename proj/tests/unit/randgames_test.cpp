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

#include <gtest/gtest.h>

#include <bit>
#include <cmath>

#include "mogkit/errors.hpp"
#include "mogkit/game_io.hpp"
#include "mogkit/randgames.hpp"
#include "oracles.hpp"

namespace mogkit {
namespace {

// Counts equilibria by scanning every profile and looking up each agent's cell.
std::uint64_t NaiveCount(const ResponseTables& t) {
  std::vector<std::size_t> actions(t.num_agents(), t.alpha());
  std::uint64_t count = 0;
  for (std::size_t idx = 0; idx < num_profiles(actions); ++idx) {
    const Profile a = profile_from_index(idx, actions);
    bool all = true;
    for (std::size_t i = 0; i < a.size() && all; ++i) {
      Profile rest;
      std::vector<std::size_t> rest_actions;
      for (std::size_t j = 0; j < a.size(); ++j) {
        if (j != i) {
          rest.push_back(a[j]);
          rest_actions.push_back(t.alpha());
        }
      }
      const std::size_t cell = rest.empty() ? 0 : profile_index(rest, rest_actions);
      all = t.marked(i, cell, a[i]);
    }
    count += all ? 1 : 0;
  }
  return count;
}

TEST(UniformGamesTest, RangeAndDeterminism) {
  const Game g = gen_uniform_normal(2, 2, 2, 1, 16, 9);
  const auto& nf = std::get<NormalFormGame>(g);
  std::size_t seen = 0;
  for (std::size_t i = 0; i < 2; ++i) {
    for (const auto& v : nf.table(i)) {
      for (const auto& c : v.components()) {
        EXPECT_GE(c, 1);
        EXPECT_LE(c, 16);
        ++seen;
      }
    }
  }
  EXPECT_EQ(seen, 16U);
  EXPECT_EQ(game_to_json(g), game_to_json(gen_uniform_normal(2, 2, 2, 1, 16, 9)));
  EXPECT_EQ(game_to_json(gen_uniform_grid_graphical(2, 2, 2, 2, 1, 16, 4)),
            game_to_json(gen_uniform_grid_graphical(2, 2, 2, 2, 1, 16, 4)));
  EXPECT_EQ(game_to_json(gen_uniform_symmetric(3, 2, 2, 1, 16, 4)),
            game_to_json(gen_uniform_symmetric(3, 2, 2, 1, 16, 4)));
  EXPECT_NE(game_to_json(g), game_to_json(gen_uniform_normal(2, 2, 2, 1, 16, 10)));
}

TEST(UniformGamesTest, ConstantRange) {
  const Game g = gen_uniform_normal(3, 2, 2, 5, 5, 1);
  for (std::size_t i = 0; i < 3; ++i) {
    for (const auto& v : std::get<NormalFormGame>(g).table(i)) {
      EXPECT_EQ(v, PayoffVector::Constant(2, 5));
    }
  }
  EXPECT_THROW(gen_uniform_normal(2, 2, 2, 3, 1, 1), InvalidArgument);
}

TEST(UniformGamesTest, EveryValueInRangeAppears) {
  const Game g = gen_uniform_normal(4, 2, 3, 1, 16, 2);
  std::set<long> values;
  for (std::size_t i = 0; i < 4; ++i) {
    for (const auto& v : std::get<NormalFormGame>(g).table(i)) {
      for (const auto& c : v.components()) values.insert(c.get_num().get_si());
    }
  }
  EXPECT_EQ(values.size(), 16U);
}

TEST(ResponseTablesTest, Validation) {
  EXPECT_THROW(gen_response_tables(2, 3, 0, 1), InvalidArgument);
  EXPECT_THROW(gen_response_tables(2, 3, 4, 1), InvalidArgument);
  EXPECT_THROW(ResponseTables(2, 2, 1, {{1, 3}, {1, 1}}), InvalidArgument);
}

TEST(ResponseTablesTest, FullTablesMarkEverything) {
  const ResponseTables t = gen_response_tables(3, 4, 4, 7);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t c = 0; c < t.num_cells(); ++c) EXPECT_EQ(t.mask(i, c), 0xFU);
  }
  EXPECT_EQ(count_pn(t), 64U);
}

TEST(ResponseTablesTest, SingleMarkedActionGivesOneEquilibrium) {
  const std::size_t n = 3;
  const std::size_t alpha = 3;
  std::vector<std::vector<std::uint64_t>> masks(n, std::vector<std::uint64_t>(9, 1));
  EXPECT_EQ(count_pn(ResponseTables(n, alpha, 1, masks)), 1U);
}

TEST(ResponseTablesTest, SingleBestResponsePerCell) {
  const ResponseTables t = gen_response_tables(3, 5, 1, 11);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t c = 0; c < t.num_cells(); ++c) EXPECT_EQ(std::popcount(t.mask(i, c)), 1);
  }
}

TEST(ResponseTablesTest, MarginalFrequencyIsBetaOverAlpha) {
  const std::size_t alpha = 5;
  const std::size_t beta = 2;
  const int draws = 10000;
  std::vector<int> hits(alpha, 0);
  for (int s = 0; s < draws; ++s) {
    const ResponseTables t = gen_response_tables(1, alpha, beta, static_cast<std::uint64_t>(s));
    for (std::size_t a = 0; a < alpha; ++a) hits[a] += t.marked(0, 0, a) ? 1 : 0;
  }
  const double p = static_cast<double>(beta) / alpha;
  const double sigma = std::sqrt(draws * p * (1 - p));
  for (std::size_t a = 0; a < alpha; ++a) {
    EXPECT_NEAR(hits[a], draws * p, 3 * sigma) << "action " << a;
  }
}

TEST(ResponseTablesTest, CountMatchesNaiveScan) {
  Rng rng(61);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = testing::Uniform(rng, 1, 5);
    const std::size_t alpha = testing::Uniform(rng, 1, 5);
    if (std::pow(alpha, n) > 1e4) continue;
    const std::size_t beta = testing::Uniform(rng, 1, alpha);
    const ResponseTables t = gen_response_tables(n, alpha, beta, rng);
    EXPECT_EQ(count_pn(t), NaiveCount(t));
  }
}

TEST(ZMomentsTest, FullTablesHaveNoVariance) {
  const ZMoments z = estimate_z_moments(3, 3, 3, 50, 1, {0.5});
  EXPECT_DOUBLE_EQ(z.mean, 27);
  EXPECT_DOUBLE_EQ(z.variance, 0);
  EXPECT_DOUBLE_EQ(z.tail_freq[0], 1);
}

TEST(ZMomentsTest, MeanAndVarianceAtDeskScale) {
  const ZMoments z = estimate_z_moments(5, 4, 2, 2000, 2024, {0.5, 0.75});
  EXPECT_LT(std::abs(z.mean - 32) / 32, 0.1);
  EXPECT_LE(z.variance, 32 * 1.25);
  for (std::size_t g = 0; g < 2; ++g) {
    const double bound = chebyshev_tail_bound(5, 2, z.gammas[g]);
    const double se = std::sqrt(bound * (1 - bound) / 2000);
    EXPECT_GE(z.tail_freq[g], bound - 2 * se);
  }
}

TEST(ZMomentsTest, ChebyshevBoundValue) {
  EXPECT_DOUBLE_EQ(chebyshev_tail_bound(5, 2, 0.5), 7.0 / 8.0);
}

TEST(ZMomentsTest, ThreadCountDoesNotChangeResults) {
  const ZMoments one = estimate_z_moments(4, 3, 2, 300, 5, {0.5}, 1);
  const ZMoments four = estimate_z_moments(4, 3, 2, 300, 5, {0.5}, 4);
  EXPECT_EQ(one.samples, four.samples);
  EXPECT_EQ(one.mean, four.mean);
  EXPECT_EQ(one.variance, four.variance);
  const auto a = simplex_front_size(50, 3, 40, 9, 1);
  const auto b = simplex_front_size(50, 3, 40, 9, 3);
  EXPECT_EQ(a.samples, b.samples);
}

TEST(SimplexFrontTest, TrivialCases) {
  EXPECT_DOUBLE_EQ(simplex_front_size(1, 3, 20, 1).mean, 1);
  EXPECT_DOUBLE_EQ(simplex_front_size(30, 1, 20, 1).mean, 1);
  EXPECT_DOUBLE_EQ(simplex_front_asymptote(1000, 1), 1);
  EXPECT_NEAR(simplex_front_asymptote(1000, 2), std::sqrt(2.0) * std::sqrt(1000.0), 1e-9);
}

TEST(SimplexFrontTest, SamplesAreBoundedByPointCount) {
  for (std::size_t d : {2, 3, 5, 6}) {
    const auto est = simplex_front_size(40, d, 30, d);
    for (auto s : est.samples) {
      EXPECT_GE(s, 1U);
      EXPECT_LE(s, 40U);
    }
  }
}

}  // namespace
}  // namespace mogkit
