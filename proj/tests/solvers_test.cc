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
#include "medsel/solvers.h"

#include <gtest/gtest.h>

#include <cstdlib>
#include <random>
#include <set>

#include "medsel/errors.h"
#include "oracle.h"

namespace medsel {
namespace {

using testing::ThreeMediaSetting;
using testing::ToLoads;
using testing::TwoMediaSetting;

std::set<testing::Loads> AsSet(const std::vector<LoadVector>& members) {
  std::set<testing::Loads> out;
  for (const LoadVector& l : members) out.insert(ToLoads(l));
  return out;
}

TEST(DomainSizeTest, MatchesEnumeration) {
  for (std::size_t j = 1; j <= 4; ++j) {
    for (std::int64_t k = 0; k <= 8; ++k) {
      EXPECT_EQ(DomainSize(j, k), testing::AllLoads(j, k).size()) << j << " " << k;
    }
  }
  EXPECT_EQ(DomainSize(3, 3), 10u);
  EXPECT_EQ(DomainSize(60, 1'000'000), UINT64_MAX);
}

TEST(BestResponseTest, Examples) {
  EXPECT_EQ(BestResponseDynamics(TwoMediaSetting(2), {0, 2}), LoadVector({1, 1}));
  EXPECT_EQ(BestResponseDynamics(TwoMediaSetting(2), {2, 0}), LoadVector({2, 0}));
  EXPECT_EQ(BestResponseDynamics(ThreeMediaSetting(3), {0, 0, 3}), LoadVector({3, 0, 0}));
  EXPECT_THROW(BestResponseDynamics(TwoMediaSetting(2), {0, 1}), DomainError);
}

TEST(SdMaxTest, Examples) {
  const SdMaxResult g2 = SdMaxWithStats(TwoMediaSetting(2));
  EXPECT_EQ(Potential(TwoMediaSetting(2), g2.load).exact(), MakeRational(6));
  const SdMaxResult empty = SdMaxWithStats(TwoMediaSetting(0));
  EXPECT_EQ(empty.load, LoadVector({0, 0}));
  EXPECT_EQ(empty.iterations, 0);
  EXPECT_EQ(SdMax(ThreeMediaSetting(3)), LoadVector({3, 0, 0}));
}

TEST(OrderLearningTest, ThreeMediaHandSimulation) {
  const LearningTrace trace = OrderLearning(ThreeMediaSetting(3));
  EXPECT_EQ(trace.chosen, (std::vector<MediumIndex>{0, 0, 0}));
  ASSERT_EQ(trace.marginals.size(), 3u);
  EXPECT_EQ(trace.marginals[0].exact(), MakeRational(98));
  EXPECT_EQ(trace.marginals[1].exact(), MakeRational(48));
  EXPECT_EQ(trace.marginals[2].exact(), MakeRational(94, 3));
  EXPECT_EQ(trace.final_load, LoadVector({3, 0, 0}));
}

TEST(OrderLearningTest, EmptyGame) {
  const LearningTrace trace = OrderLearning(ThreeMediaSetting(0));
  EXPECT_TRUE(trace.chosen.empty());
  EXPECT_TRUE(trace.marginals.empty());
  EXPECT_EQ(trace.final_load, LoadVector({0, 0, 0}));
}

TEST(OrderLearningTest, TieGoesToLowestIndex) {
  const LearningTrace trace = OrderLearning(TwoMediaSetting(2));
  EXPECT_EQ(trace.chosen, (std::vector<MediumIndex>{0, 0}));
  EXPECT_EQ(trace.final_load, LoadVector({2, 0}));
}

TEST(OrderLearningTest, FloatBackendAgreesAwayFromTies) {
  const GameSetting g = ThreeMediaSetting(500);
  EXPECT_EQ(OrderLearningLoad(g, Backend::kFloat), OrderLearningLoad(g));
  EXPECT_EQ(OrderLearningLoad(g), LoadVector({90, 228, 182}));
}

TEST(AddSeedTest, Examples) {
  EXPECT_EQ(AddSeed(TwoMediaSetting(2), {2, 0}), LoadVector({2, 1}));
  const auto oracle3 = testing::BruteMaxima(TwoMediaSetting(3));
  EXPECT_EQ(oracle3.maximizers, (std::set<testing::Loads>{{2, 1}}));
  EXPECT_EQ(oracle3.value, MakeRational(8));

  const GameSetting single(4, {{3, MakeRational(1)}});
  EXPECT_EQ(AddSeed(single, {4}), LoadVector({5}));

  EXPECT_EQ(AddSeed(ThreeMediaSetting(3), {3, 0, 0}), LoadVector({3, 1, 0}));
  EXPECT_EQ(testing::BruteMaxima(ThreeMediaSetting(4)).maximizers,
            (std::set<testing::Loads>{{3, 1, 0}}));
  EXPECT_THROW(AddSeed(ThreeMediaSetting(3), {1, 0, 0}), DomainError);
}

TEST(ScalingDescentTest, Examples) {
  EXPECT_EQ(Potential(TwoMediaSetting(2), ScalingDescent(TwoMediaSetting(2))).exact(),
            MakeRational(6));
  const GameSetting three = ThreeMediaSetting(500);
  EXPECT_EQ(Potential(three, ScalingDescent(three)).exact(),
            Potential(three, OrderLearningLoad(three)).exact());
  // K <= J: alpha starts at 1, i.e. plain modified steepest ascent.
  const GameSetting small = ThreeMediaSetting(2);
  EXPECT_EQ(Potential(small, ScalingDescent(small)).exact(),
            Potential(small, SdMax(small)).exact());
}

TEST(ScalingDescentTest, LargeKFloatMatchesLearning) {
  const GameSetting g(200'000, {{100, MakeRational(2)}, {25, MakeRational(1)},
                                {20, MakeRational(1)}, {70, MakeRational(3, 2)},
                                {9, MakeRational(1, 2)}});
  const LoadVector scaled = ScalingDescent(g, Backend::kFloat);
  const LoadVector learned = OrderLearningLoad(g, Backend::kFloat);
  EXPECT_LE(scaled.ChebyshevDistance(learned), 1);
  EXPECT_NEAR(Potential(g, scaled, Backend::kFloat).ToDouble(),
              Potential(g, learned, Backend::kFloat).ToDouble(), 1e-6);
}

TEST(FindVectorInBoundsTest, Examples) {
  EXPECT_EQ(FindVectorInBounds({3, 1}, {3, 1}, {3, 1}, 5), (IntVector{0, 0}));
  const IntVector y = FindVectorInBounds({2, 0}, {0, 0}, {2, 2}, 2);
  EXPECT_TRUE(y == (IntVector{0, 0}) || y == (IntVector{-1, 1}));
  EXPECT_EQ(y, (IntVector{0, 0}));
  EXPECT_THROW(FindVectorInBounds({1, 1}, {2, 2}, {5, 5}, 1), InfeasibleError);
  EXPECT_THROW(FindVectorInBounds({1, 1}, {0, 0}, {1, 1}, 0), DomainError);
}

// Compares feasibility and constraint satisfaction against enumeration of
// every small y.
TEST(FindVectorInBoundsTest, AgreesWithEnumeration) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<std::int64_t> coord(0, 6);
  std::uniform_int_distribution<std::int64_t> alpha_dist(1, 3);
  for (int trial = 0; trial < 400; ++trial) {
    const LoadVector x{coord(rng), coord(rng), coord(rng)};
    IntVector lower(3);
    IntVector upper(3);
    for (int j = 0; j < 3; ++j) {
      const std::int64_t a = coord(rng);
      const std::int64_t b = coord(rng) + 2;
      lower[j] = std::min(a, b);
      upper[j] = std::max(a, b);
    }
    const std::int64_t alpha = alpha_dist(rng);
    bool feasible = false;
    for (std::int64_t a = -20; a <= 20 && !feasible; ++a) {
      for (std::int64_t b = -20; b <= 20 && !feasible; ++b) {
        const std::int64_t c = -a - b;
        const IntVector y{a, b, c};
        bool ok = true;
        for (int j = 0; j < 3; ++j) {
          const std::int64_t p = x[j] + alpha * y[j];
          ok = ok && p >= lower[j] && p <= upper[j];
        }
        feasible = ok;
      }
    }
    if (!feasible) {
      EXPECT_THROW(FindVectorInBounds(x, lower, upper, alpha), InfeasibleError);
      continue;
    }
    const IntVector y = FindVectorInBounds(x, lower, upper, alpha);
    EXPECT_EQ(y[0] + y[1] + y[2], 0);
    for (int j = 0; j < 3; ++j) {
      const std::int64_t p = x[j] + alpha * y[j];
      EXPECT_GE(p, lower[j]);
      EXPECT_LE(p, upper[j]);
    }
  }
}

TEST(BruteForceTest, Examples) {
  const EquilibriumSet g2 = BruteForceEquilibria(TwoMediaSetting(2));
  EXPECT_EQ(g2.members, (std::vector<LoadVector>{{1, 1}, {2, 0}}));
  EXPECT_EQ(g2.potential.exact(), MakeRational(6));

  const GameSetting pair(1, {{5, MakeRational(1)}, {5, MakeRational(1)}});
  EXPECT_EQ(BruteForceEquilibria(pair).members,
            (std::vector<LoadVector>{{0, 1}, {1, 0}}));

  EXPECT_EQ(BruteForceEquilibria(ThreeMediaSetting(3)).members,
            (std::vector<LoadVector>{{3, 0, 0}}));
  EXPECT_EQ(BruteForceEquilibria(ThreeMediaSetting(3)).potential.exact(), MakeRational(532, 3));
}

TEST(BruteForceTest, CapacityGuard) {
  EXPECT_THROW(BruteForceEquilibria(ThreeMediaSetting(100), 100), CapacityError);
  EXPECT_NO_THROW(BruteForceEquilibria(ThreeMediaSetting(12), DomainSize(3, 12)));
}

TEST(BudgetTest, ReadsEnvironment) {
  ::unsetenv("MEDIUM_SELECT_BUDGET");
  EXPECT_EQ(EnumerationBudgetFromEnv(), kDefaultEnumerationBudget);
  ::setenv("MEDIUM_SELECT_BUDGET", "42", 1);
  EXPECT_EQ(EnumerationBudgetFromEnv(), 42u);
  ::setenv("MEDIUM_SELECT_BUDGET", "lots", 1);
  EXPECT_THROW(EnumerationBudgetFromEnv(), ParseError);
  ::unsetenv("MEDIUM_SELECT_BUDGET");
}

TEST(EnumerateEquilibriaTest, TightClass) {
  const GameSetting tight(2, std::vector<MediumParams>(4, {5, MakeRational(1)}));
  const EquilibriumSet eq = EnumerateEquilibria(tight);
  EXPECT_EQ(eq.members.size(), 6u);
  for (const LoadVector& l : eq.members) {
    for (std::int64_t v : l.values()) EXPECT_TRUE(v == 0 || v == 1);
  }
}

TEST(EnumerateEquilibriaTest, BoundaryCostCase) {
  // One subscriber on the cheap medium: no exact tie, a single equilibrium.
  const GameSetting one(100, {{250, MakeRational(15)}, {1, MakeRational(10)}});
  EXPECT_EQ(EnumerateEquilibria(one).members, (std::vector<LoadVector>{{49, 51}}));
  EXPECT_EQ(BruteForceEquilibria(one).members, (std::vector<LoadVector>{{49, 51}}));

  const GameSetting none(100, {{250, MakeRational(15)}, {0, MakeRational(10)}},
                         {.allow_zero_subscribers = true});
  EXPECT_EQ(EnumerateEquilibria(none).members,
            (std::vector<LoadVector>{{49, 51}, {50, 50}}));
  EXPECT_EQ(BruteForceEquilibria(none).members,
            (std::vector<LoadVector>{{49, 51}, {50, 50}}));
}

TEST(EnumerateEquilibriaTest, BallRejectsNonEquilibriumCenter) {
  EXPECT_THROW(EquilibriumBall(TwoMediaSetting(2), {0, 2}), DomainError);
}

TEST(EnumerateEquilibriaTest, LargeJStaysCheap) {
  const GameSetting wide(10, std::vector<MediumParams>(20, {7, MakeRational(1)}));
  EXPECT_EQ(EnumerateEquilibria(wide).members.size(), 184756u);  // C(20, 10)
}

class OracleAgreementTest : public ::testing::Test {
 protected:
  std::mt19937_64 rng_{424242};
};

TEST_F(OracleAgreementTest, AllSolversLandInTheOracleSet) {
  for (int instance = 0; instance < 120; ++instance) {
    const GameSetting g = testing::RandomSetting(rng_, 1, 4, 12);
    const auto oracle = testing::BruteMaxima(g);
    const auto in_oracle = [&](const LoadVector& l) {
      return oracle.maximizers.count(ToLoads(l)) == 1;
    };
    const EquilibriumSet brute = BruteForceEquilibria(g);
    EXPECT_EQ(AsSet(brute.members), oracle.maximizers);
    EXPECT_EQ(brute.potential.exact(), oracle.value);
    EXPECT_EQ(AsSet(EnumerateEquilibria(g).members), oracle.maximizers);

    const SdMaxResult sd = SdMaxWithStats(g);
    EXPECT_TRUE(in_oracle(sd.load)) << sd.load.ToString();
    EXPECT_LE(sd.iterations, g.seeds() * static_cast<std::int64_t>(g.num_media()));
    EXPECT_TRUE(in_oracle(OrderLearning(g).final_load));
    EXPECT_TRUE(in_oracle(ScalingDescent(g)));
    for (int start = 0; start < 3; ++start) {
      const LoadVector s = testing::RandomLoad(rng_, g.num_media(), g.seeds());
      EXPECT_TRUE(in_oracle(BestResponseDynamics(g, s))) << s.ToString();
    }
  }
}

TEST_F(OracleAgreementTest, AddSeedClosure) {
  for (int instance = 0; instance < 80; ++instance) {
    const GameSetting g = testing::RandomSetting(rng_, 1, 4, 11);
    const auto next = testing::BruteMaxima(g.WithSeeds(g.seeds() + 1));
    for (const auto& eq : testing::BruteMaxima(g).maximizers) {
      EXPECT_EQ(next.maximizers.count(ToLoads(AddSeed(g, LoadVector(eq)))), 1u);
    }
  }
}

TEST_F(OracleAgreementTest, LearningTraceInvariants) {
  for (int instance = 0; instance < 100; ++instance) {
    const GameSetting g = testing::RandomSetting(rng_, 1, 5, 40);
    const LearningTrace trace = OrderLearning(g);
    ASSERT_EQ(trace.chosen.size(), static_cast<std::size_t>(g.seeds()));
    Rational gamma_min = g.medium(0).cost;
    for (const MediumParams& m : g.media()) gamma_min = std::min(gamma_min, m.cost);

    LoadVector replay = LoadVector::Zero(g.num_media());
    for (std::size_t k = 0; k < trace.chosen.size(); ++k) {
      Rational best = Marginal(g, replay, 0).exact();
      for (MediumIndex t = 1; t < g.num_media(); ++t) {
        best = std::max(best, Marginal(g, replay, t).exact());
      }
      EXPECT_EQ(Marginal(g, replay, trace.chosen[k]).exact(), best);
      EXPECT_EQ(trace.marginals[k].exact(), best);
      EXPECT_GT(trace.marginals[k].exact(), -gamma_min);
      if (k > 0) EXPECT_LE(trace.marginals[k], trace.marginals[k - 1]);
      replay = replay.PlusUnit(trace.chosen[k]);
    }
    EXPECT_EQ(replay, trace.final_load);
  }
}

TEST_F(OracleAgreementTest, SdMaxBoundsInvariant) {
  for (int instance = 0; instance < 100; ++instance) {
    const GameSetting g = testing::RandomSetting(rng_, 1, 6, 30);
    const SdMaxResult r = SdMaxWithStats(g);
    ASSERT_EQ(r.bounds.b.size(), g.num_media());
    for (MediumIndex j = 0; j < g.num_media(); ++j) {
      EXPECT_GE(r.bounds.b[j], 0);
      EXPECT_LE(r.bounds.b[j], r.load[j] + 1);
    }
    EXPECT_LE(r.iterations, g.seeds() * static_cast<std::int64_t>(g.num_media()));
    EXPECT_TRUE(IsNash(g, r.load));
  }
}

}  // namespace
}  // namespace medsel
