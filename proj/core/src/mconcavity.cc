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

#include <utility>

#include "medsel/errors.h"

namespace medsel {
namespace {

// Runs the all-(u, v) exchange check for an arbitrary function g on Z^J.
template <class Fn>
ExchangeReport CheckExchangeWith(const IntVector& x, const IntVector& y, Fn&& g) {
  ExchangeReport report;
  if (x.size() != y.size()) throw DomainError("vectors differ in length");
  IntVector x_minus_y(x.size());
  IntVector y_minus_x(x.size());
  for (std::size_t j = 0; j < x.size(); ++j) {
    x_minus_y[j] = x[j] - y[j];
    y_minus_x[j] = -x_minus_y[j];
  }
  const ExtendedValue lhs = g(x) + g(y);
  for (MediumIndex u : PositiveSupport(x_minus_y)) {
    for (MediumIndex v : PositiveSupport(y_minus_x)) {
      IntVector x_moved = x;
      --x_moved[u];
      ++x_moved[v];
      IntVector y_moved = y;
      --y_moved[v];
      ++y_moved[u];
      const ExtendedValue rhs = g(x_moved) + g(y_moved);
      ++report.pairs_checked;
      if (!(lhs <= rhs)) {
        report.holds = false;
        report.violations.push_back(ExchangeWitness{x, y, u, v, lhs, rhs});
      }
    }
  }
  return report;
}

IntVector ToIntVector(const LoadVector& load) {
  return IntVector(load.values().begin(), load.values().end());
}

}  // namespace

ExtendedValue operator+(const ExtendedValue& a, const ExtendedValue& b) {
  if (a.is_bottom() || b.is_bottom()) return ExtendedValue::Bottom();
  return ExtendedValue::Finite(a.value() + b.value());
}

bool operator==(const ExtendedValue& a, const ExtendedValue& b) {
  if (a.is_bottom() || b.is_bottom()) return a.is_bottom() == b.is_bottom();
  return a.value() == b.value();
}

bool operator<(const ExtendedValue& a, const ExtendedValue& b) {
  if (b.is_bottom()) return false;
  if (a.is_bottom()) return true;
  return a.value() < b.value();
}

std::vector<MediumIndex> PositiveSupport(const IntVector& x) {
  std::vector<MediumIndex> support;
  for (MediumIndex j = 0; j < x.size(); ++j) {
    if (x[j] > 0) support.push_back(j);
  }
  return support;
}

ExtendedValue ExtendedPotential(const GameSetting& setting, const IntVector& x,
                                Backend backend) {
  if (x.size() != setting.num_media()) {
    throw DomainError("vector length does not match the number of media");
  }
  std::int64_t total = 0;
  for (std::int64_t xj : x) {
    if (xj < 0) return ExtendedValue::Bottom();
    total += xj;
  }
  if (total != setting.seeds()) return ExtendedValue::Bottom();
  return ExtendedValue::Finite(Potential(setting, LoadVector(x), backend));
}

ExchangeReport CheckExchange(const GameSetting& setting, const LoadVector& x,
                             const LoadVector& y) {
  CheckInDomain(setting, x);
  CheckInDomain(setting, y);
  return CheckExchangeWith(ToIntVector(x), ToIntVector(y), [&](const IntVector& p) {
    return ExtendedPotential(setting, p);
  });
}

ExtendedValue ScaledPotential(const GameSetting& setting, const LoadVector& origin,
                              std::int64_t alpha, const IntVector& y,
                              Backend backend) {
  CheckInDomain(setting, origin);
  if (alpha < 1) throw DomainError("scaling factor must be >= 1");
  if (y.size() != origin.size()) throw DomainError("vector length mismatch");
  IntVector point(y.size());
  for (std::size_t j = 0; j < y.size(); ++j) point[j] = origin[j] + alpha * y[j];
  return ExtendedPotential(setting, point, backend);
}

ExchangeReport CheckScaledExchange(const GameSetting& setting,
                                   const LoadVector& origin, std::int64_t alpha,
                                   const IntVector& y, const IntVector& z) {
  if (ScaledPotential(setting, origin, alpha, y).is_bottom() ||
      ScaledPotential(setting, origin, alpha, z).is_bottom()) {
    throw DomainError("scaled points must lie in the domain");
  }
  return CheckExchangeWith(y, z, [&](const IntVector& p) {
    return ScaledPotential(setting, origin, alpha, p);
  });
}

}  // namespace medsel
