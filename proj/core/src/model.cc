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
#include "medsel/model.h"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <string>

#include "medsel/errors.h"

namespace medsel {

GameSetting::GameSetting(std::int64_t seeds, std::vector<MediumParams> media,
                         SettingOptions options)
    : seeds_(seeds), media_(std::move(media)), options_(options) {
  if (seeds_ < 0) throw InvalidSettingError("K must be nonnegative");
  if (media_.empty()) throw InvalidSettingError("at least one medium is required");
  const std::int64_t min_subscribers = options_.allow_zero_subscribers ? 0 : 1;
  for (std::size_t j = 0; j < media_.size(); ++j) {
    if (media_[j].subscribers < min_subscribers) {
      throw InvalidSettingError("media[" + std::to_string(j) + "].N must be >= " +
                                std::to_string(min_subscribers));
    }
    if (sgn(media_[j].cost) < 0) {
      throw InvalidSettingError("media[" + std::to_string(j) +
                                "].gamma must be nonnegative");
    }
  }
}

GameSetting GameSetting::WithSeeds(std::int64_t seeds) const {
  return GameSetting(seeds, media_, options_);
}

LoadVector::LoadVector(std::vector<std::int64_t> loads) : loads_(std::move(loads)) {
  for (std::int64_t l : loads_) {
    if (l < 0) throw DomainError("load entries must be nonnegative");
  }
}

LoadVector LoadVector::Zero(std::size_t num_media) {
  return LoadVector(std::vector<std::int64_t>(num_media, 0));
}

LoadVector LoadVector::Concentrated(std::size_t num_media, MediumIndex j,
                                    std::int64_t seeds) {
  std::vector<std::int64_t> loads(num_media, 0);
  loads.at(j) = seeds;
  return LoadVector(std::move(loads));
}

std::int64_t LoadVector::Total() const {
  return std::accumulate(loads_.begin(), loads_.end(), std::int64_t{0});
}

LoadVector LoadVector::PlusUnit(MediumIndex j) const {
  LoadVector out = *this;
  ++out.loads_.at(j);
  return out;
}

LoadVector LoadVector::MinusUnit(MediumIndex j) const {
  if (loads_.at(j) == 0) throw DomainError("cannot remove a seed from an empty medium");
  LoadVector out = *this;
  --out.loads_[j];
  return out;
}

LoadVector LoadVector::Moved(MediumIndex from, MediumIndex to) const {
  return MinusUnit(from).PlusUnit(to);
}

std::int64_t LoadVector::ChebyshevDistance(const LoadVector& other) const {
  if (other.size() != size()) throw DomainError("load vectors differ in length");
  std::int64_t d = 0;
  for (std::size_t j = 0; j < loads_.size(); ++j) {
    d = std::max(d, loads_[j] > other.loads_[j] ? loads_[j] - other.loads_[j]
                                                : other.loads_[j] - loads_[j]);
  }
  return d;
}

std::string LoadVector::ToString() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t j = 0; j < loads_.size(); ++j) {
    if (j > 0) os << ',';
    os << loads_[j];
  }
  os << ')';
  return os.str();
}

bool InDomain(const GameSetting& setting, const LoadVector& load) {
  return load.size() == setting.num_media() && load.Total() == setting.seeds();
}

void CheckInDomain(const GameSetting& setting, const LoadVector& load) {
  if (load.size() != setting.num_media()) {
    throw DomainError("load vector has " + std::to_string(load.size()) +
                      " entries, expected " + std::to_string(setting.num_media()));
  }
  if (load.Total() != setting.seeds()) {
    throw DomainError("load vector " + load.ToString() + " sums to " +
                      std::to_string(load.Total()) + ", expected K = " +
                      std::to_string(setting.seeds()));
  }
}

LoadVector LoadsOf(const GameSetting& setting, const StrategyProfile& profile) {
  if (static_cast<std::int64_t>(profile.choices.size()) != setting.seeds()) {
    throw InvalidProfileError("profile has " + std::to_string(profile.choices.size()) +
                              " choices, expected K = " +
                              std::to_string(setting.seeds()));
  }
  std::vector<std::int64_t> loads(setting.num_media(), 0);
  for (MediumIndex choice : profile.choices) {
    if (choice >= setting.num_media()) {
      throw InvalidProfileError("medium index " + std::to_string(choice) +
                                " out of range");
    }
    ++loads[choice];
  }
  return LoadVector(std::move(loads));
}

Value Utility(const GameSetting& setting, const StrategyProfile& profile,
              std::size_t seed, Backend backend) {
  const LoadVector loads = LoadsOf(setting, profile);
  if (seed >= profile.choices.size()) {
    throw DomainError("seed index " + std::to_string(seed) + " out of range");
  }
  const MediumIndex j = profile.choices[seed];
  const MediumParams& m = setting.medium(j);
  return Value::FromRational(MakeRational(m.subscribers, loads[j]) - m.cost, backend);
}

Value Potential(const GameSetting& setting, const LoadVector& load,
                Backend backend) {
  CheckInDomain(setting, load);
  Value total = Value::Zero(backend);
  for (MediumIndex j = 0; j < load.size(); ++j) {
    const MediumParams& m = setting.medium(j);
    total += Value::FromInt(m.subscribers, backend) * Harmonic(load[j], backend);
    total -= Value::FromRational(m.cost, backend) * Value::FromInt(load[j], backend);
  }
  return total;
}

Value Marginal(const GameSetting& setting, const LoadVector& load,
               MediumIndex j, Backend backend) {
  if (load.size() != setting.num_media()) {
    throw DomainError("load vector length does not match the number of media");
  }
  const MediumParams& m = setting.medium(j);
  return Value::FromRational(MakeRational(m.subscribers, load[j] + 1) - m.cost,
                             backend);
}

std::vector<LoadVector> Neighbors(const LoadVector& load) {
  std::vector<LoadVector> out;
  out.push_back(load);
  for (MediumIndex from = 0; from < load.size(); ++from) {
    if (load[from] == 0) continue;
    for (MediumIndex to = 0; to < load.size(); ++to) {
      if (to != from) out.push_back(load.Moved(from, to));
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool IsNash(const GameSetting& setting, const LoadVector& load, Backend backend) {
  if (backend != Backend::kExact) {
    throw BackendError("Nash testing requires the exact backend");
  }
  CheckInDomain(setting, load);
  // Pot(l - e_u + e_v) - Pot(l) = N_v/(l_v+1) - gamma_v - (N_u/l_u - gamma_u).
  Rational best_gain;
  bool any_gain = false;
  Rational worst_loss;
  bool any_loss = false;
  for (MediumIndex j = 0; j < load.size(); ++j) {
    const MediumParams& m = setting.medium(j);
    const Rational gain = MakeRational(m.subscribers, load[j] + 1) - m.cost;
    if (!any_gain || gain > best_gain) best_gain = gain;
    any_gain = true;
    if (load[j] > 0) {
      const Rational loss = MakeRational(m.subscribers, load[j]) - m.cost;
      if (!any_loss || loss < worst_loss) worst_loss = loss;
      any_loss = true;
    }
  }
  if (!any_loss) return true;
  // A move u -> u is the identity, and the own-medium gain never exceeds the
  // own-medium loss, so comparing the global extremes is exact.
  return best_gain <= worst_loss;
}

StrategyProfile RealizeProfile(const GameSetting& setting, const LoadVector& load) {
  CheckInDomain(setting, load);
  StrategyProfile profile;
  profile.choices.reserve(static_cast<std::size_t>(setting.seeds()));
  for (MediumIndex j = 0; j < load.size(); ++j) {
    profile.choices.insert(profile.choices.end(), static_cast<std::size_t>(load[j]), j);
  }
  return profile;
}

}  // namespace medsel
