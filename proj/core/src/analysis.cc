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
#include "medsel/analysis.h"

#include <algorithm>
#include <string>
#include <utility>

#include "medsel/errors.h"
#include "medsel/solvers.h"

namespace medsel {
namespace {

__extension__ using Wide = unsigned __int128;

std::int64_t CeilToInt(const Rational& r) {
  mpz_class result;
  mpz_cdiv_q(result.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return result.get_si();
}

}  // namespace

AsymptoticPrediction PredictAsymptotics(const GameSetting& setting) {
  AsymptoticPrediction prediction;
  const auto media = setting.media();
  prediction.gamma_min = media[0].cost;
  for (const MediumParams& m : media) {
    if (m.cost < prediction.gamma_min) prediction.gamma_min = m.cost;
  }
  std::int64_t group_subscribers = 0;
  for (MediumIndex j = 0; j < media.size(); ++j) {
    if (media[j].cost == prediction.gamma_min) {
      prediction.min_cost_group.push_back(j);
      group_subscribers += media[j].subscribers;
    } else {
      const Rational gap = media[j].cost - prediction.gamma_min;
      // A medium without subscribers is never worth a seed outside G.
      prediction.plateaus[j] =
          std::max<std::int64_t>(0, CeilToInt(MakeRational(media[j].subscribers) / gap) - 1);
    }
  }
  const auto group_size = static_cast<std::int64_t>(prediction.min_cost_group.size());
  for (MediumIndex w : prediction.min_cost_group) {
    prediction.shares[w] = group_subscribers > 0
                               ? MakeRational(media[w].subscribers, group_subscribers)
                               : MakeRational(1, group_size);
  }
  return prediction;
}

Value SocialWelfare(const GameSetting& setting, const LoadVector& load,
                    Backend backend) {
  CheckInDomain(setting, load);
  Rational total(0);
  for (MediumIndex j = 0; j < load.size(); ++j) {
    if (load[j] == 0) continue;
    const MediumParams& m = setting.medium(j);
    total += MakeRational(m.subscribers) - m.cost * MakeRational(load[j]);
  }
  return Value::FromRational(total, backend);
}

SocialOptimum ComputeSocialOptimum(const GameSetting& setting, Backend backend) {
  const std::size_t num_media = setting.num_media();
  if (num_media > 30) {
    throw DomainError("support enumeration is limited to J <= 30");
  }
  const std::int64_t seeds = setting.seeds();
  if (seeds == 0) {
    return SocialOptimum{LoadVector::Zero(num_media), Value::Zero(backend)};
  }
  const auto media = setting.media();

  std::optional<Rational> best_welfare;
  LoadVector best_load;
  const std::uint32_t subsets = 1u << num_media;
  for (std::uint32_t mask = 1; mask < subsets; ++mask) {
    const auto size = static_cast<std::int64_t>(__builtin_popcount(mask));
    if (size > seeds) continue;
    // Cheapest member of S; among equal costs the last index keeps the load
    // lexicographically smallest.
    MediumIndex cheapest = num_media;
    Rational welfare(0);
    for (MediumIndex j = 0; j < num_media; ++j) {
      if ((mask >> j & 1u) == 0) continue;
      welfare += MakeRational(media[j].subscribers) - media[j].cost;
      if (cheapest == num_media || media[j].cost <= media[cheapest].cost) cheapest = j;
    }
    welfare -= media[cheapest].cost * MakeRational(seeds - size);

    std::vector<std::int64_t> loads(num_media, 0);
    for (MediumIndex j = 0; j < num_media; ++j) {
      if (mask >> j & 1u) loads[j] = 1;
    }
    loads[cheapest] += seeds - size;
    LoadVector load(std::move(loads));
    if (!best_welfare || welfare > *best_welfare ||
        (welfare == *best_welfare && load < best_load)) {
      best_welfare = std::move(welfare);
      best_load = std::move(load);
    }
  }
  return SocialOptimum{std::move(best_load),
                       Value::FromRational(*best_welfare, backend)};
}

std::optional<Value> AnarchyRatio(const Value& nash_welfare,
                                  const Value& optimum_welfare) {
  const int nash_sign = nash_welfare.Sign();
  const int optimum_sign = optimum_welfare.Sign();
  if (nash_sign == 0 || optimum_sign == 0 || nash_sign != optimum_sign) {
    return std::nullopt;
  }
  if (nash_sign > 0) return optimum_welfare / nash_welfare;
  return nash_welfare / optimum_welfare;
}

WelfareReport WelfareFromEquilibrium(const GameSetting& setting,
                                     const LoadVector& learned, Backend backend) {
  WelfareReport report;
  report.nash_load = learned;
  report.nash_welfare = SocialWelfare(setting, learned, backend);
  if (backend == Backend::kExact) {
    for (const LoadVector& eq : EquilibriumBall(setting, learned)) {
      Value welfare = SocialWelfare(setting, eq, backend);
      if (welfare < report.nash_welfare) {
        report.nash_welfare = std::move(welfare);
        report.nash_load = eq;
      }
    }
  }
  SocialOptimum optimum = ComputeSocialOptimum(setting, backend);
  report.optimum_load = std::move(optimum.load);
  report.optimum_welfare = std::move(optimum.welfare);
  report.poa = AnarchyRatio(report.nash_welfare, report.optimum_welfare);
  return report;
}

WelfareReport PriceOfAnarchy(const GameSetting& setting, Backend backend) {
  return WelfareFromEquilibrium(setting, OrderLearningLoad(setting, backend), backend);
}

std::uint64_t Binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (n > 62) throw DomainError("binomial coefficients are limited to n <= 62");
  k = std::min(k, n - k);
  Wide result = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    result = result * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
  }
  return static_cast<std::uint64_t>(result);
}

std::uint64_t EquilibriumBound(std::int64_t num_media) {
  if (num_media < 1) throw DomainError("J must be >= 1");
  return Binomial(num_media, num_media / 2);
}

GameSetting TightInstance(std::int64_t num_media, std::int64_t subscribers,
                          const Rational& cost) {
  if (num_media < 2) throw DomainError("the tight class needs J >= 2");
  std::vector<MediumParams> media(static_cast<std::size_t>(num_media),
                                  MediumParams{subscribers, cost});
  return GameSetting(num_media / 2, std::move(media));
}

bool BinomialIdentityCheck(std::int64_t num_media, std::int64_t alpha) {
  if (alpha < 1 || alpha > num_media) {
    throw DomainError("alpha must lie in 1..J");
  }
  std::uint64_t sum = 0;
  const std::int64_t top = std::min(alpha, num_media - alpha);
  for (std::int64_t k = 0; k <= top; ++k) {
    sum += Binomial(alpha, k) * Binomial(num_media - alpha, k);
  }
  return sum == Binomial(num_media, alpha);
}

}  // namespace medsel
