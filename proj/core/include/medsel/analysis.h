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
#ifndef MEDSEL_ANALYSIS_H_
#define MEDSEL_ANALYSIS_H_

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "medsel/model.h"
#include "medsel/value.h"

namespace medsel {

// Large-K shape of the equilibrium. Media outside the minimal-cost group G
// stop at a plateau; media inside G split the remaining seeds in proportion
// to their subscribers.
struct AsymptoticPrediction {
  Rational gamma_min;
  std::vector<MediumIndex> min_cost_group;
  std::map<MediumIndex, std::int64_t> plateaus;  // ceil(N_j / (gamma_j - gamma_min)) - 1
  std::map<MediumIndex, Rational> shares;        // N_w / sum_{t in G} N_t
};

AsymptoticPrediction PredictAsymptotics(const GameSetting& setting);

// Sum of utilities: sum over used media of N_j - gamma_j l_j.
Value SocialWelfare(const GameSetting& setting, const LoadVector& load,
                    Backend backend = Backend::kExact);

struct SocialOptimum {
  LoadVector load;
  Value welfare;
};

// Exact welfare maximizer. For each support S (|S| <= K) the best load puts
// one seed on every medium of S and the remaining K - |S| on its cheapest
// medium; the best support wins, ties going to the lexicographically smallest
// load. Throws DomainError for J > 30.
SocialOptimum ComputeSocialOptimum(const GameSetting& setting,
                                   Backend backend = Backend::kExact);

struct WelfareReport {
  LoadVector nash_load;
  Value nash_welfare;
  LoadVector optimum_load;
  Value optimum_welfare;
  // Ratio >= 1 when both welfares share a sign: optimum/nash when positive,
  // nash/optimum when negative. Absent when the signs differ or either is 0.
  std::optional<Value> poa;
};

// Welfare of the worst equilibrium (exact backend: every equilibrium in the
// ball of the learning outcome; float backend: the learning outcome) against
// the social optimum.
WelfareReport PriceOfAnarchy(const GameSetting& setting,
                             Backend backend = Backend::kExact);

// Same report around an equilibrium the caller already has (typically the
// learning outcome). Throws DomainError on the exact backend when learned is
// not an equilibrium.
WelfareReport WelfareFromEquilibrium(const GameSetting& setting,
                                     const LoadVector& learned,
                                     Backend backend = Backend::kExact);

// The ratio rule of WelfareReport::poa, exposed for sweeps.
std::optional<Value> AnarchyRatio(const Value& nash_welfare,
                                  const Value& optimum_welfare);

// C(n, k) for n <= 62 (exact in 64 bits).
std::uint64_t Binomial(std::int64_t n, std::int64_t k);

// Upper bound C(J, floor(J/2)) on the number of equilibrium loads.
std::uint64_t EquilibriumBound(std::int64_t num_media);

// K = floor(J/2) seeds on J identical media (N = subscribers, gamma = cost):
// every 0/1 load with K ones is an equilibrium, so the bound is attained.
GameSetting TightInstance(std::int64_t num_media, std::int64_t subscribers,
                          const Rational& cost);

// sum_{k} C(alpha, k) C(J - alpha, k) == C(J, alpha), by direct summation.
bool BinomialIdentityCheck(std::int64_t num_media, std::int64_t alpha);

}  // namespace medsel

#endif  // MEDSEL_ANALYSIS_H_
