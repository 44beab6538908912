// Copyright 2026 The medsel Authors
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
#include "medsel/mconcavity.h"

#include <gtest/gtest.h>

#include <random>

#include "medsel/errors.h"
#include "oracle.h"

namespace medsel {
namespace {

using testing::ThreeMediaSetting;
using testing::TwoMediaSetting;

IntVector ToInts(const LoadVector& l) { return IntVector(l.values().begin(), l.values().end()); }

TEST(ExtendedPotentialTest, Examples) {
  const GameSetting g = TwoMediaSetting(2);
  const ExtendedValue on_domain = ExtendedPotential(g, {2, 0});
  ASSERT_FALSE(on_domain.is_bottom());
  EXPECT_EQ(on_domain.value().exact(), MakeRational(6));
  EXPECT_TRUE(ExtendedPotential(g, {3, 0}).is_bottom());
  EXPECT_TRUE(ExtendedPotential(g, {-1, 3}).is_bottom());
}

TEST(ExtendedValueTest, BottomAbsorbsAndOrders) {
  const auto bottom = ExtendedValue::Bottom();
  const auto one = ExtendedValue::Finite(Value(Rational(1)));
  EXPECT_TRUE((bottom + one).is_bottom());
  EXPECT_TRUE(bottom < one);
  EXPECT_FALSE(one < bottom);
  EXPECT_TRUE(bottom <= bottom);
  EXPECT_EQ(bottom, ExtendedValue::Bottom());
  EXPECT_EQ(bottom.ToString(), "-inf");
}

TEST(CheckExchangeTest, HandExample) {
  const ExchangeReport report = CheckExchange(TwoMediaSetting(2), {2, 0}, {0, 2});
  EXPECT_TRUE(report.holds);
  EXPECT_EQ(report.pairs_checked, 1u);
  EXPECT_TRUE(report.violations.empty());
}

TEST(CheckExchangeTest, IdenticalPointsAreVacuous) {
  const ExchangeReport report = CheckExchange(ThreeMediaSetting(3), {1, 1, 1}, {1, 1, 1});
  EXPECT_TRUE(report.holds);
  EXPECT_EQ(report.pairs_checked, 0u);
}

TEST(CheckExchangeTest, ThreeMediaRandomPairs) {
  std::mt19937_64 rng(5);
  const GameSetting g = ThreeMediaSetting(5);
  for (int i = 0; i < 100; ++i) {
    const LoadVector x = testing::RandomLoad(rng, 3, 5);
    const LoadVector y = testing::RandomLoad(rng, 3, 5);
    EXPECT_TRUE(CheckExchange(g, x, y).holds) << x.ToString() << " " << y.ToString();
  }
}

TEST(ScaledPotentialTest, Examples) {
  const GameSetting g = TwoMediaSetting(2);
  const LoadVector origin{2, 0};
  EXPECT_EQ(ScaledPotential(g, origin, 1, {0, 0}).value().exact(), MakeRational(6));
  EXPECT_EQ(ScaledPotential(g, origin, 2, {-1, 1}).value().exact(), MakeRational(3));
  EXPECT_TRUE(ScaledPotential(g, origin, 2, {1, -1}).is_bottom());
  EXPECT_THROW(ScaledPotential(g, origin, 0, {0, 0}), DomainError);
}

TEST(MConcavityPropertyTest, ExchangeInequalityOnRandomInstances) {
  std::mt19937_64 rng(77);
  for (int instance = 0; instance < 150; ++instance) {
    const GameSetting g = testing::RandomSetting(rng, 2, 5, 15);
    for (int pair = 0; pair < 20; ++pair) {
      const LoadVector x = testing::RandomLoad(rng, g.num_media(), g.seeds());
      const LoadVector y = testing::RandomLoad(rng, g.num_media(), g.seeds());
      const ExchangeReport report = CheckExchange(g, x, y);
      ASSERT_TRUE(report.holds) << x.ToString() << " vs " << y.ToString() << ": "
                                << report.violations.front().lhs.ToString() << " > "
                                << report.violations.front().rhs.ToString();
    }
  }
}

IntVector RandomScaledPoint(std::mt19937_64& rng, const LoadVector& origin,
                            std::int64_t alpha) {
  const std::size_t n = origin.size();
  IntVector y(n, 0);
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  std::uniform_int_distribution<int> steps(0, 6);
  const int moves = steps(rng);
  for (int m = 0; m < moves; ++m) {
    const std::size_t u = pick(rng);
    const std::size_t v = pick(rng);
    if (origin[u] + alpha * (y[u] - 1) < 0) continue;
    --y[u];
    ++y[v];
  }
  return y;
}

TEST(MConcavityPropertyTest, ScaledExchangeInequality) {
  std::mt19937_64 rng(91);
  for (int instance = 0; instance < 100; ++instance) {
    const GameSetting g = testing::RandomSetting(rng, 2, 5, 15);
    const LoadVector origin = testing::RandomLoad(rng, g.num_media(), g.seeds());
    for (std::int64_t alpha : {1, 2, 4}) {
      for (int pair = 0; pair < 10; ++pair) {
        const IntVector y = RandomScaledPoint(rng, origin, alpha);
        const IntVector z = RandomScaledPoint(rng, origin, alpha);
        ASSERT_TRUE(CheckScaledExchange(g, origin, alpha, y, z).holds);
      }
    }
  }
}

// f(x - e_u + e_v) + f(y - e_v + e_u) - f(x) - f(y)
//   = N_v (1/(x_v+1) - 1/y_v) + N_u (1/(y_u+1) - 1/x_u).
TEST(MConcavityPropertyTest, ExchangeGainDecomposition) {
  std::mt19937_64 rng(13);
  int checked = 0;
  for (int instance = 0; instance < 200; ++instance) {
    const GameSetting g = testing::RandomSetting(rng, 2, 5, 15);
    const LoadVector xl = testing::RandomLoad(rng, g.num_media(), g.seeds());
    const LoadVector yl = testing::RandomLoad(rng, g.num_media(), g.seeds());
    const IntVector x = ToInts(xl);
    const IntVector y = ToInts(yl);
    IntVector diff(x.size());
    for (std::size_t j = 0; j < x.size(); ++j) diff[j] = x[j] - y[j];
    IntVector neg(diff.size());
    for (std::size_t j = 0; j < x.size(); ++j) neg[j] = -diff[j];
    for (MediumIndex u : PositiveSupport(diff)) {
      for (MediumIndex v : PositiveSupport(neg)) {
        IntVector xm = x;
        --xm[u];
        ++xm[v];
        IntVector ym = y;
        --ym[v];
        ++ym[u];
        const Rational lhs = ExtendedPotential(g, xm).value().exact() +
                             ExtendedPotential(g, ym).value().exact() -
                             ExtendedPotential(g, x).value().exact() -
                             ExtendedPotential(g, y).value().exact();
        const Rational nu = MakeRational(g.medium(u).subscribers);
        const Rational nv = MakeRational(g.medium(v).subscribers);
        const Rational rhs = nv * (MakeRational(1, x[v] + 1) - MakeRational(1, y[v])) +
                             nu * (MakeRational(1, y[u] + 1) - MakeRational(1, x[u]));
        EXPECT_EQ(lhs, rhs);
        EXPECT_GE(rhs, 0);
        ++checked;
      }
    }
  }
  EXPECT_GT(checked, 100);
}

}  // namespace
}  // namespace medsel
