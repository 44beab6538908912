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
#ifndef MEDSEL_MODEL_H_
#define MEDSEL_MODEL_H_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "medsel/value.h"

namespace medsel {

// Media are indexed 0..J-1 in the C++ API. Serialized forms (JSON, CSV, CLI
// output) use 1-based indices.
using MediumIndex = std::size_t;

struct MediumParams {
  std::int64_t subscribers = 1;  // N_j
  Rational cost;                 // gamma_j

  friend bool operator==(const MediumParams&, const MediumParams&) = default;
};

struct SettingOptions {
  // Admit N_j = 0. The model proper requires N_j >= 1; media without
  // subscribers only show up in boundary experiments.
  bool allow_zero_subscribers = false;
};

// A game setting (K, (N_j, gamma_j)_j). Immutable once constructed.
class GameSetting {
 public:
  // Throws InvalidSettingError when J = 0, K < 0, N_j < 1 (or < 0 with
  // allow_zero_subscribers) or gamma_j < 0.
  GameSetting(std::int64_t seeds, std::vector<MediumParams> media,
              SettingOptions options = {});

  std::int64_t seeds() const { return seeds_; }
  std::size_t num_media() const { return media_.size(); }
  const MediumParams& medium(MediumIndex j) const { return media_.at(j); }
  std::span<const MediumParams> media() const { return media_; }
  const SettingOptions& options() const { return options_; }

  // Same media, different number of seeds.
  GameSetting WithSeeds(std::int64_t seeds) const;

  friend bool operator==(const GameSetting& a, const GameSetting& b) {
    return a.seeds_ == b.seeds_ && a.media_ == b.media_;
  }

 private:
  std::int64_t seeds_;
  std::vector<MediumParams> media_;
  SettingOptions options_;
};

// Per-medium seed counts. Entries are nonnegative; membership in the domain
// (sum equal to K) is checked by the operations that need it.
class LoadVector {
 public:
  LoadVector() = default;
  // Throws DomainError on a negative entry.
  explicit LoadVector(std::vector<std::int64_t> loads);
  LoadVector(std::initializer_list<std::int64_t> loads)
      : LoadVector(std::vector<std::int64_t>(loads)) {}

  static LoadVector Zero(std::size_t num_media);
  // All K seeds on one medium.
  static LoadVector Concentrated(std::size_t num_media, MediumIndex j,
                                 std::int64_t seeds);

  std::size_t size() const { return loads_.size(); }
  std::int64_t operator[](MediumIndex j) const { return loads_[j]; }
  std::int64_t Total() const;
  std::span<const std::int64_t> values() const { return loads_; }

  LoadVector PlusUnit(MediumIndex j) const;
  // Throws DomainError when entry j is zero.
  LoadVector MinusUnit(MediumIndex j) const;
  // this - e_from + e_to.
  LoadVector Moved(MediumIndex from, MediumIndex to) const;

  // Chebyshev distance; sizes must match.
  std::int64_t ChebyshevDistance(const LoadVector& other) const;

  std::string ToString() const;

  friend bool operator==(const LoadVector&, const LoadVector&) = default;
  friend auto operator<=>(const LoadVector&, const LoadVector&) = default;

 private:
  std::vector<std::int64_t> loads_;
};

// One medium choice per seed.
struct StrategyProfile {
  std::vector<MediumIndex> choices;

  friend bool operator==(const StrategyProfile&, const StrategyProfile&) = default;
};

// True when load has J entries summing to K.
bool InDomain(const GameSetting& setting, const LoadVector& load);

// Throws DomainError unless InDomain(setting, load).
void CheckInDomain(const GameSetting& setting, const LoadVector& load);

// Throws InvalidProfileError on a wrong length or an out-of-range choice.
LoadVector LoadsOf(const GameSetting& setting, const StrategyProfile& profile);

// N_{s_k} / l_{s_k} - gamma_{s_k}. Throws DomainError for an invalid seed.
Value Utility(const GameSetting& setting, const StrategyProfile& profile,
              std::size_t seed, Backend backend = Backend::kExact);

// sum_j N_j H_{l_j} - gamma_j l_j. Throws DomainError outside the domain.
Value Potential(const GameSetting& setting, const LoadVector& load,
                Backend backend = Backend::kExact);

// Pot(l + e_j) - Pot(l) = N_j / (l_j + 1) - gamma_j. The total of load is not
// checked, so this is usable on partial loads during learning.
Value Marginal(const GameSetting& setting, const LoadVector& load,
               MediumIndex j, Backend backend = Backend::kExact);

// Loads reachable by one seed switching media, including load itself.
// Sorted lexicographically, without duplicates.
std::vector<LoadVector> Neighbors(const LoadVector& load);

// Whether no unilateral deviation strictly increases the potential. Requires
// the exact backend (BackendError otherwise).
bool IsNash(const GameSetting& setting, const LoadVector& load,
            Backend backend = Backend::kExact);

// Block-ordered canonical profile: the first l_1 seeds pick medium 1, the
// next l_2 medium 2, and so on.
StrategyProfile RealizeProfile(const GameSetting& setting,
                               const LoadVector& load);

}  // namespace medsel

#endif  // MEDSEL_MODEL_H_
