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

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <limits>
#include <string>
#include <string_view>
#include <utility>

#include "arith.h"
#include "medsel/errors.h"

namespace medsel {
namespace {

__extension__ using Wide = unsigned __int128;

using internal::ExactArith;
using internal::MediaTable;
using internal::WithArith;

std::int64_t FloorDiv(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

std::int64_t CeilDiv(std::int64_t a, std::int64_t b) { return -FloorDiv(-a, b); }

// Lowest-index argmax of marginal(t, loads[t]) over all media.
template <class A>
MediumIndex ArgMaxMarginal(const MediaTable<A>& table,
                           const std::vector<std::int64_t>& loads,
                           typename A::Num* best_value) {
  MediumIndex best = 0;
  typename A::Num best_num = table.Marginal(0, loads[0]);
  for (MediumIndex t = 1; t < table.size(); ++t) {
    typename A::Num candidate = table.Marginal(t, loads[t]);
    if (A::Less(best_num, candidate)) {
      best = t;
      best_num = std::move(candidate);
    }
  }
  if (best_value != nullptr) *best_value = std::move(best_num);
  return best;
}

template <class A>
SdMaxResult SdMaxImpl(const GameSetting& setting) {
  const MediaTable<A> table(setting);
  const std::size_t num_media = setting.num_media();
  std::vector<std::int64_t> loads(num_media, 0);
  loads[0] = setting.seeds();
  std::vector<std::int64_t> bounds(num_media, 0);
  std::int64_t iterations = 0;

  while (true) {
    MediumIndex u = num_media;
    for (MediumIndex j = 0; j < num_media; ++j) {
      if (loads[j] - 1 >= bounds[j]) {
        u = j;
        break;
      }
    }
    if (u == num_media) break;

    // argmax_t f(l - e_u + e_t): the marginal of every t evaluated at l - e_u.
    --loads[u];
    const MediumIndex v = ArgMaxMarginal(table, loads, nullptr);
    bounds[v] = loads[v] + (v == u ? 2 : 1);
    ++loads[v];
    ++iterations;
  }
  return SdMaxResult{LoadVector(std::move(loads)), ActiveBounds{std::move(bounds)},
                     iterations};
}

template <class A>
LearningTrace OrderLearningImpl(const GameSetting& setting) {
  const MediaTable<A> table(setting);
  const auto seeds = static_cast<std::size_t>(setting.seeds());
  std::vector<std::int64_t> loads(setting.num_media(), 0);
  LearningTrace trace;
  trace.chosen.reserve(seeds);
  trace.marginals.reserve(seeds);
  typename A::Num best{};
  for (std::size_t k = 0; k < seeds; ++k) {
    const MediumIndex w = ArgMaxMarginal(table, loads, &best);
    ++loads[w];
    trace.chosen.push_back(w);
    trace.marginals.push_back(A::Wrap(best));
  }
  trace.final_load = LoadVector(std::move(loads));
  return trace;
}

template <class A>
std::vector<LoadVector> OrderLearningPrefixesImpl(const GameSetting& setting) {
  const MediaTable<A> table(setting);
  std::vector<std::int64_t> loads(setting.num_media(), 0);
  std::vector<LoadVector> prefixes;
  prefixes.reserve(static_cast<std::size_t>(setting.seeds()) + 1);
  prefixes.emplace_back(loads);
  for (std::int64_t k = 0; k < setting.seeds(); ++k) {
    ++loads[ArgMaxMarginal(table, loads, nullptr)];
    prefixes.emplace_back(loads);
  }
  return prefixes;
}

// Maximizes y -> f(origin + alpha y) over the box [lower, upper] by modified
// steepest ascent, starting from a point supplied by FindVectorInBounds.
template <class A>
std::vector<std::int64_t> ScaledPhase(const MediaTable<A>& table,
                                      const std::vector<std::int64_t>& origin,
                                      const IntVector& lower, const IntVector& upper,
                                      std::int64_t alpha) {
  const std::size_t num_media = table.size();
  const IntVector start =
      FindVectorInBounds(LoadVector(origin), lower, upper, alpha);
  IntVector y = start;
  IntVector y_upper(num_media);
  IntVector bounds(num_media);
  std::vector<std::int64_t> point(num_media);
  for (MediumIndex j = 0; j < num_media; ++j) {
    bounds[j] = CeilDiv(lower[j] - origin[j], alpha);
    y_upper[j] = FloorDiv(upper[j] - origin[j], alpha);
    point[j] = origin[j] + alpha * y[j];
  }

  while (true) {
    MediumIndex u = num_media;
    for (MediumIndex j = 0; j < num_media; ++j) {
      if (y[j] - 1 >= bounds[j]) {
        u = j;
        break;
      }
    }
    if (u == num_media) break;

    point[u] -= alpha;
    MediumIndex v = u;
    typename A::Num best = table.BlockGain(u, point[u], alpha);
    for (MediumIndex t = 0; t < num_media; ++t) {
      if (t == u) continue;
      if (y[t] + 1 > y_upper[t]) continue;
      typename A::Num gain = table.BlockGain(t, point[t], alpha);
      // Lowest index among ties: a later t replaces only on strict increase,
      // an earlier t also on equality with the incumbent u.
      if (A::Less(best, gain) || (t < v && A::Equal(best, gain))) {
        v = t;
        best = std::move(gain);
      }
    }
    bounds[v] = y[v] + 1;
    --y[u];
    ++y[v];
    point[v] += alpha;
  }
  return point;
}

template <class A>
LoadVector ScalingDescentImpl(const GameSetting& setting) {
  const MediaTable<A> table(setting);
  const std::size_t num_media = setting.num_media();
  const std::int64_t seeds = setting.seeds();
  std::vector<std::int64_t> x(num_media, 0);
  x[0] = seeds;
  if (seeds == 0) return LoadVector(std::move(x));

  IntVector lower(num_media, 0);
  IntVector upper(num_media, seeds);
  const std::int64_t ratio =
      std::max<std::int64_t>(1, seeds / static_cast<std::int64_t>(num_media));
  std::int64_t alpha = 1;
  while (alpha <= ratio / 2) alpha *= 2;

  const auto radius_factor = static_cast<std::int64_t>(num_media) - 1;
  while (true) {
    x = ScaledPhase(table, x, lower, upper, alpha);
    if (alpha == 1) break;
    const std::int64_t radius = radius_factor * (alpha - 1);
    for (MediumIndex j = 0; j < num_media; ++j) {
      lower[j] = std::max(lower[j], x[j] - radius);
      upper[j] = std::min(upper[j], x[j] + radius);
    }
    alpha /= 2;
  }
  return LoadVector(std::move(x));
}

// Potential of one medium as a function of its load: N_j H_l - gamma_j l.
std::vector<std::vector<Rational>> PotentialTerms(const GameSetting& setting) {
  std::vector<std::vector<Rational>> terms(setting.num_media());
  const std::int64_t seeds = setting.seeds();
  for (MediumIndex j = 0; j < setting.num_media(); ++j) {
    const MediumParams& m = setting.medium(j);
    terms[j].reserve(static_cast<std::size_t>(seeds) + 1);
    for (std::int64_t l = 0; l <= seeds; ++l) {
      terms[j].push_back(MakeRational(m.subscribers) * HarmonicExact(l) -
                         m.cost * MakeRational(l));
    }
  }
  return terms;
}

bool NextComposition(std::vector<std::int64_t>& loads) {
  const std::size_t n = loads.size();
  if (n < 2) return false;
  std::int64_t tail = loads[n - 1];
  for (std::size_t i = n - 1; i-- > 0;) {
    if (tail > 0) {
      ++loads[i];
      for (std::size_t k = i + 1; k + 1 < n; ++k) loads[k] = 0;
      loads[n - 1] = tail - 1;
      return true;
    }
    tail += loads[i];
  }
  return false;
}

class BallScanner {
 public:
  BallScanner(const GameSetting& setting, const LoadVector& center)
      : center_(center), num_media_(setting.num_media()) {
    gains_.reserve(num_media_);
    losses_.reserve(num_media_);
    for (MediumIndex j = 0; j < num_media_; ++j) {
      const MediumParams& m = setting.medium(j);
      gains_.push_back(MakeRational(m.subscribers, center[j] + 1) - m.cost);
      losses_.push_back(center[j] > 0
                            ? MakeRational(m.subscribers, center[j]) - m.cost
                            : Rational(0));
    }
    // Suffix extremes bound what the undecided coordinates can still add.
    suffix_max_gain_.assign(num_media_ + 1, Rational(0));
    suffix_min_loss_.assign(num_media_ + 1, Rational(0));
    has_loss_.assign(num_media_ + 1, false);
    for (std::size_t j = num_media_; j-- > 0;) {
      suffix_max_gain_[j] = (j + 1 == num_media_)
                                ? gains_[j]
                                : std::max(gains_[j], suffix_max_gain_[j + 1]);
      has_loss_[j] = has_loss_[j + 1] || center[j] > 0;
      if (center[j] > 0) {
        suffix_min_loss_[j] = has_loss_[j + 1]
                                  ? std::min(losses_[j], suffix_min_loss_[j + 1])
                                  : losses_[j];
      } else {
        suffix_min_loss_[j] = suffix_min_loss_[j + 1];
      }
    }
  }

  std::vector<LoadVector> Scan() {
    offsets_.assign(num_media_, 0);
    Visit(0, Rational(0), 0);
    std::sort(members_.begin(), members_.end());
    return std::move(members_);
  }

 private:
  void Visit(std::size_t j, const Rational& delta, std::int64_t sum) {
    const auto remaining = static_cast<std::int64_t>(num_media_ - j);
    if (sum > remaining || -sum > remaining) return;
    if (j == num_media_) {
      if (sgn(delta) == 0) {
        std::vector<std::int64_t> loads(center_.values().begin(),
                                        center_.values().end());
        for (std::size_t k = 0; k < num_media_; ++k) loads[k] += offsets_[k];
        members_.emplace_back(std::move(loads));
      }
      return;
    }
    // Every further +1/-1 pair contributes at most gain - loss <= 0 at an
    // equilibrium, so only the seeds still needed to rebalance sum can help.
    Rational bound = delta;
    if (sum < 0) bound += suffix_max_gain_[j] * MakeRational(-sum);
    if (sum > 0) {
      if (!has_loss_[j]) return;
      bound -= suffix_min_loss_[j] * MakeRational(sum);
    }
    if (sgn(bound) < 0) return;

    if (center_[j] > 0) {
      offsets_[j] = -1;
      Visit(j + 1, delta - losses_[j], sum - 1);
    }
    offsets_[j] = 0;
    Visit(j + 1, delta, sum);
    offsets_[j] = 1;
    Visit(j + 1, delta + gains_[j], sum + 1);
    offsets_[j] = 0;
  }

  const LoadVector& center_;
  std::size_t num_media_;
  std::vector<Rational> gains_;
  std::vector<Rational> losses_;
  std::vector<Rational> suffix_max_gain_;
  std::vector<Rational> suffix_min_loss_;
  std::vector<bool> has_loss_;
  std::vector<std::int64_t> offsets_;
  std::vector<LoadVector> members_;
};

}  // namespace

std::uint64_t EnumerationBudgetFromEnv() {
  const char* raw = std::getenv("MEDIUM_SELECT_BUDGET");
  if (raw == nullptr || *raw == '\0') return kDefaultEnumerationBudget;
  const std::string_view text(raw);
  std::uint64_t budget = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), budget);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw ParseError("MEDIUM_SELECT_BUDGET must be a nonnegative integer, got '" +
                     std::string(text) + "'");
  }
  return budget;
}

std::uint64_t DomainSize(std::size_t num_media, std::int64_t seeds) {
  if (num_media == 0) return seeds == 0 ? 1 : 0;
  if (seeds < 0) return 0;
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  // C(K + J - 1, k) built up for k = 1..J-1; each step stays integral.
  Wide result = 1;
  for (std::uint64_t k = 1; k < num_media; ++k) {
    result = result * (static_cast<std::uint64_t>(seeds) + k) / k;
    if (result > kMax) return kMax;
  }
  return static_cast<std::uint64_t>(result);
}

LoadVector BestResponseDynamics(const GameSetting& setting, const LoadVector& start) {
  CheckInDomain(setting, start);
  const MediaTable<ExactArith> table(setting);
  std::vector<std::int64_t> loads(start.values().begin(), start.values().end());
  const std::size_t num_media = loads.size();
  while (true) {
    // Pot(l - e_u + e_v) - Pot(l) = marginal_v(l) - (N_u/l_u - gamma_u).
    Rational best_delta(0);
    MediumIndex best_from = num_media;
    MediumIndex best_to = num_media;
    for (MediumIndex u = 0; u < num_media; ++u) {
      if (loads[u] == 0) continue;
      const Rational loss = table.Marginal(u, loads[u] - 1);
      for (MediumIndex v = 0; v < num_media; ++v) {
        if (v == u) continue;
        Rational delta = table.Marginal(v, loads[v]) - loss;
        if (delta > best_delta) {
          best_delta = std::move(delta);
          best_from = u;
          best_to = v;
        }
      }
    }
    if (best_from == num_media) break;
    --loads[best_from];
    ++loads[best_to];
  }
  return LoadVector(std::move(loads));
}

SdMaxResult SdMaxWithStats(const GameSetting& setting, Backend backend) {
  return WithArith(backend, [&](auto arith) {
    return SdMaxImpl<decltype(arith)>(setting);
  });
}

LoadVector SdMax(const GameSetting& setting, Backend backend) {
  return SdMaxWithStats(setting, backend).load;
}

LearningTrace OrderLearning(const GameSetting& setting, Backend backend) {
  return WithArith(backend, [&](auto arith) {
    return OrderLearningImpl<decltype(arith)>(setting);
  });
}

LoadVector OrderLearningLoad(const GameSetting& setting, Backend backend) {
  return WithArith(backend, [&](auto arith) {
    using A = decltype(arith);
    const MediaTable<A> table(setting);
    std::vector<std::int64_t> loads(setting.num_media(), 0);
    for (std::int64_t k = 0; k < setting.seeds(); ++k) {
      ++loads[ArgMaxMarginal(table, loads, nullptr)];
    }
    return LoadVector(std::move(loads));
  });
}

std::vector<LoadVector> OrderLearningPrefixes(const GameSetting& setting,
                                              Backend backend) {
  return WithArith(backend, [&](auto arith) {
    return OrderLearningPrefixesImpl<decltype(arith)>(setting);
  });
}

LoadVector AddSeed(const GameSetting& setting, const LoadVector& eq, Backend backend) {
  CheckInDomain(setting, eq);
  return WithArith(backend, [&](auto arith) {
    using A = decltype(arith);
    const MediaTable<A> table(setting);
    const std::vector<std::int64_t> loads(eq.values().begin(), eq.values().end());
    return eq.PlusUnit(ArgMaxMarginal(table, loads, nullptr));
  });
}

LoadVector ScalingDescent(const GameSetting& setting, Backend backend) {
  return WithArith(backend, [&](auto arith) {
    return ScalingDescentImpl<decltype(arith)>(setting);
  });
}

IntVector FindVectorInBounds(const LoadVector& x, const IntVector& lower,
                             const IntVector& upper, std::int64_t alpha) {
  if (alpha < 1) throw DomainError("scaling factor must be >= 1");
  if (lower.size() != x.size() || upper.size() != x.size()) {
    throw DomainError("bound vectors must match the load vector length");
  }
  IntVector y(x.size());
  IntVector headroom(x.size());
  std::int64_t sum = 0;
  for (std::size_t j = 0; j < x.size(); ++j) {
    const std::int64_t lo = CeilDiv(lower[j] - x[j], alpha);
    const std::int64_t hi = FloorDiv(upper[j] - x[j], alpha);
    if (lo > hi) {
      throw InfeasibleError("no multiple of alpha fits coordinate " +
                            std::to_string(j) + " within its bounds");
    }
    y[j] = lo;
    headroom[j] = hi - lo;
    sum += lo;
  }
  if (sum > 0) throw InfeasibleError("lower bounds exceed the number of seeds");
  std::int64_t deficit = -sum;
  for (std::size_t j = 0; j < x.size() && deficit > 0; ++j) {
    const std::int64_t step = std::min(headroom[j], deficit);
    y[j] += step;
    deficit -= step;
  }
  if (deficit > 0) throw InfeasibleError("upper bounds cannot absorb the seeds");
  return y;
}

EquilibriumSet BruteForceEquilibria(const GameSetting& setting, std::uint64_t budget) {
  const std::uint64_t size = DomainSize(setting.num_media(), setting.seeds());
  if (size > budget) {
    throw CapacityError("domain has " + std::to_string(size) +
                        " load vectors, above the enumeration budget of " +
                        std::to_string(budget));
  }
  const auto terms = PotentialTerms(setting);
  const std::size_t num_media = setting.num_media();
  std::vector<std::int64_t> loads(num_media, 0);
  loads[num_media - 1] = setting.seeds();

  EquilibriumSet result;
  bool first = true;
  Rational potential;
  do {
    potential = 0;
    for (MediumIndex j = 0; j < num_media; ++j) {
      potential += terms[j][static_cast<std::size_t>(loads[j])];
    }
    if (first || potential > result.potential.exact()) {
      result.potential = Value(potential);
      result.members.clear();
      result.members.emplace_back(loads);
      first = false;
    } else if (potential == result.potential.exact()) {
      result.members.emplace_back(loads);
    }
  } while (NextComposition(loads));
  return result;
}

std::vector<LoadVector> EquilibriumBall(const GameSetting& setting,
                                        const LoadVector& center) {
  if (!IsNash(setting, center)) {
    throw DomainError("ball scan needs an equilibrium center, got " + center.ToString());
  }
  return BallScanner(setting, center).Scan();
}

EquilibriumSet EnumerateEquilibria(const GameSetting& setting) {
  const LoadVector center = OrderLearningLoad(setting, Backend::kExact);
  EquilibriumSet result;
  result.members = EquilibriumBall(setting, center);
  result.potential = Potential(setting, center, Backend::kExact);
  return result;
}

}  // namespace medsel
