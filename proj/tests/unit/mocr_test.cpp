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

#include "mogkit/errors.hpp"
#include "mogkit/mocr.hpp"
#include "oracles.hpp"

namespace mogkit {
namespace {

using testing::Q;
using testing::Vec;

TEST(RatioMemberTest, Examples) {
  const VectorSet e{Vec({2, 2})};
  const VectorSet f{Vec({4, 1}), Vec({1, 4})};
  EXPECT_TRUE(ratio_member(Vec({Q(1, 2), 2}), e, f));
  EXPECT_TRUE(ratio_member(Vec({2, Q(1, 2)}), e, f));
  EXPECT_FALSE(ratio_member(Vec({1, 1}), e, f));
  EXPECT_TRUE(ratio_member(Vec({0, 0}), e, f));
  EXPECT_TRUE(ratio_member(Vec({0, 0}), VectorSet{Vec({0, 0})}, f));
}

TEST(RatioMemberTest, DomainErrors) {
  const VectorSet e{Vec({2, 2})};
  EXPECT_THROW(ratio_member(Vec({1, 1}), e, VectorSet{Vec({0, 1})}), PositiveDomainError);
  EXPECT_THROW(ratio_member(Vec({1, 1}), VectorSet{Vec({-1, 1})}, VectorSet{Vec({1, 1})}),
               PositiveDomainError);
  EXPECT_THROW(ratio_member(Vec({1, 1}), e, VectorSet{}), InvalidArgument);
  EXPECT_THROW(ratio_member(Vec({1}), e, VectorSet{Vec({1, 1})}), InvalidArgument);
}

TEST(ConeUnionTest, Examples) {
  const ConeUnion a(VectorSet{Vec({1, 2})});
  const ConeUnion b(VectorSet{Vec({2, 1})});
  EXPECT_EQ(cone_intersect(a, b), ConeUnion(VectorSet{Vec({1, 1})}));
  EXPECT_EQ(cone_union(a, a), a);
  const ConeUnion c(VectorSet{Vec({3, 1}), Vec({1, 3})});
  EXPECT_EQ(cone_intersect(c, ConeUnion(VectorSet{Vec({2, 2})})),
            ConeUnion(VectorSet{Vec({2, 1}), Vec({1, 2})}));
  EXPECT_EQ(ConeUnion(VectorSet{Vec({1, 1}), Vec({2, 2})}).apexes(), VectorSet{Vec({2, 2})});
  EXPECT_TRUE(c.contains(Vec({3, 1})));
  EXPECT_TRUE(c.contains(Vec({0, 2})));
  EXPECT_FALSE(c.contains(Vec({2, 2})));
}

TEST(ConeUnionTest, MembershipLaws) {
  Rng rng(41);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t d = testing::Uniform(rng, 1, 3);
    const ConeUnion a(testing::RandomSet(rng, testing::Uniform(rng, 1, 6), d, 0, 6));
    const ConeUnion b(testing::RandomSet(rng, testing::Uniform(rng, 1, 6), d, 0, 6));
    const ConeUnion both = cone_intersect(a, b);
    const ConeUnion either = cone_union(a, b);
    for (int probe = 0; probe < 30; ++probe) {
      const auto y = testing::RandomVector(rng, d, 0, 6);
      EXPECT_EQ(both.contains(y), a.contains(y) && b.contains(y));
      EXPECT_EQ(either.contains(y), a.contains(y) || b.contains(y));
    }
  }
}

TEST(MocrTest, Examples) {
  const VectorSet f{Vec({4, 1}), Vec({1, 4})};
  EXPECT_EQ(mocr(VectorSet{Vec({2, 2})}, f), (VectorSet{Vec({Q(1, 2), 2}), Vec({2, Q(1, 2)})}));
  EXPECT_EQ(mocr(VectorSet{Vec({1, 4})}, f), (VectorSet{Vec({1, 1}), Vec({Q(1, 4), 4})}));
  const VectorSet expected{Vec({Q(1, 2), 1}), Vec({Q(3, 4), Q(1, 2)}), Vec({2, Q(1, 4)})};
  EXPECT_EQ(mocr(VectorSet{Vec({2, 2}), Vec({3, 1})}, f), expected);
  EXPECT_EQ(mocr_oracle(VectorSet{Vec({2, 2}), Vec({3, 1})}, f), expected);
}

TEST(MocrTest, Errors) {
  const VectorSet f{Vec({4, 1})};
  EXPECT_THROW(mocr(VectorSet{}, f), InvalidArgument);
  EXPECT_THROW(mocr(VectorSet{Vec({1, 1})}, VectorSet{}), InvalidArgument);
  EXPECT_THROW(mocr(VectorSet{Vec({1, 1})}, VectorSet{Vec({0, 1})}), PositiveDomainError);
  EXPECT_THROW(mocr(VectorSet{Vec({-1, 1})}, f), PositiveDomainError);
  EXPECT_THROW(mocr(VectorSet{Vec({1, 1, 1})}, f), InvalidArgument);
  std::vector<PayoffVector> es;
  for (long i = 1; i <= 7; ++i) es.push_back(Vec({i, 8 - i}));
  std::vector<PayoffVector> fs;
  for (long i = 1; i <= 8; ++i) fs.push_back(Vec({i, 9 - i}));
  EXPECT_THROW(mocr_oracle(VectorSet(es), VectorSet(fs)), InvalidArgument);
}

TEST(MocrTest, SingleLayerEqualsEfficientRatios) {
  Rng rng(42);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t d = testing::Uniform(rng, 1, 3);
    const auto y = testing::RandomPositive(rng, d, 9, 2);
    const auto f = testing::RandomPositiveSet(rng, testing::Uniform(rng, 1, 6), d, 9, 2);
    std::vector<PayoffVector> ratios;
    for (const auto& z : f) ratios.push_back(divide(y, z));
    EXPECT_EQ(mocr(VectorSet{y}, f), eff_of(ratios));
    EXPECT_EQ(mocr(VectorSet{y}, f), mocr_oracle(VectorSet{y}, f));
  }
}

TEST(MocrTest, MatchesPathOracle) {
  Rng rng(43);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t d = testing::Uniform(rng, 1, 3);
    const auto e = testing::RandomPositiveSet(rng, testing::Uniform(rng, 1, 4), d, 6, 3);
    const auto f = testing::RandomPositiveSet(rng, testing::Uniform(rng, 1, 4), d, 6, 3);
    ASSERT_EQ(mocr(e, f), mocr_oracle(e, f));
  }
}

TEST(MocrTest, AntichainSizeBoundAndSoundness) {
  Rng rng(44);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t d = testing::Uniform(rng, 1, 3);
    const auto e_full = testing::RandomPositiveSet(rng, testing::Uniform(rng, 1, 12), d, 12, 1);
    const auto f = testing::RandomPositiveSet(rng, testing::Uniform(rng, 1, 12), d, 12, 1);
    const VectorSet worst = wst(e_full);
    const VectorSet r = mocr(worst, f);
    EXPECT_EQ(r, eff(r));
    std::size_t bound = 1;
    for (std::size_t k = 1; k < d; ++k) bound *= worst.size() * f.size();
    EXPECT_LE(r.size(), bound);
    EXPECT_EQ(r, mocr(e_full, f));
    for (const auto& rho : r) EXPECT_TRUE(ratio_member(rho, e_full, f));
  }
}

TEST(MocrTest, MembershipMatchesConeOfApexes) {
  Rng rng(45);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t d = testing::Uniform(rng, 1, 3);
    const auto e = testing::RandomPositiveSet(rng, testing::Uniform(rng, 1, 5), d, 6, 1);
    const auto f = testing::RandomPositiveSet(rng, testing::Uniform(rng, 1, 5), d, 6, 1);
    const ConeUnion cone(mocr(e, f));
    for (int probe = 0; probe < 40; ++probe) {
      const auto rho = testing::RandomVector(rng, d, 0, 3, 4);
      EXPECT_EQ(cone.contains(rho), ratio_member(rho, e, f));
    }
  }
}

TEST(RatioScaleTest, ZeroEquilibriumGivesZeroRatio) {
  Rng rng(46);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t d = testing::Uniform(rng, 1, 4);
    const auto f = testing::RandomPositiveSet(rng, testing::Uniform(rng, 1, 8), d, 9, 3);
    EXPECT_EQ(mocr(VectorSet{PayoffVector::Zeros(d)}, f), VectorSet{PayoffVector::Zeros(d)});
  }
}

TEST(RatioScaleTest, ScalingEquilibriaScalesRatios) {
  Rng rng(47);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t d = testing::Uniform(rng, 1, 3);
    const auto e = testing::RandomPositiveSet(rng, testing::Uniform(rng, 1, 5), d, 9, 2);
    const auto f = testing::RandomPositiveSet(rng, testing::Uniform(rng, 1, 5), d, 9, 2);
    const auto r = testing::RandomPositive(rng, d, 5, 3);
    EXPECT_EQ(mocr(e.Scaled(r), f), mocr(e, f).Scaled(r));
    EXPECT_EQ(mocr(e, f.Scaled(r)), mocr(e, f).DividedBy(r));
  }
}

TEST(RatioScaleTest, OnesBelongIffEquilibriaAreEfficient) {
  Rng rng(48);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t d = testing::Uniform(rng, 1, 3);
    const PayoffVector ones = PayoffVector::Ones(d);
    const auto f = eff(testing::RandomPositiveSet(rng, testing::Uniform(rng, 1, 8), d, 9, 1));
    std::vector<PayoffVector> subset;
    for (const auto& z : f) {
      if (testing::Uniform(rng, 0, 1) == 1) subset.push_back(z);
    }
    if (subset.empty()) subset.push_back(f[0]);
    const VectorSet e(subset);
    EXPECT_TRUE(mocr(wst(e), f).contains(ones));

    // Equilibrium outcomes always lie below the frontier; halving one
    // coordinate of a frontier point leaves F but stays under it.
    std::vector<PayoffVector> outside = subset;
    const PayoffVector& z = f[testing::Uniform(rng, 0, f.size() - 1)];
    std::vector<Rational> lowered(z.components().begin(), z.components().end());
    lowered[testing::Uniform(rng, 0, d - 1)] /= 2;
    outside.emplace_back(lowered);
    const VectorSet e2(outside);
    EXPECT_FALSE(e2.IsSubsetOf(f));
    EXPECT_FALSE(mocr(wst(e2), f).contains(ones));
  }
}

}  // namespace
}  // namespace mogkit
