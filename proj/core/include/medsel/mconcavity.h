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
#ifndef MEDSEL_MCONCAVITY_H_
#define MEDSEL_MCONCAVITY_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "medsel/model.h"
#include "medsel/value.h"

namespace medsel {

using IntVector = std::vector<std::int64_t>;

// A Value or the bottom element (minus infinity). Bottom absorbs addition and
// compares below every finite value.
class ExtendedValue {
 public:
  static ExtendedValue Bottom() { return ExtendedValue(); }
  static ExtendedValue Finite(Value v) { return ExtendedValue(std::move(v)); }

  bool is_bottom() const { return !value_.has_value(); }
  // Precondition: !is_bottom().
  const Value& value() const { return *value_; }

  std::string ToString() const { return is_bottom() ? "-inf" : value_->ToString(); }

  friend ExtendedValue operator+(const ExtendedValue& a, const ExtendedValue& b);
  friend bool operator==(const ExtendedValue& a, const ExtendedValue& b);
  friend bool operator<(const ExtendedValue& a, const ExtendedValue& b);
  friend bool operator<=(const ExtendedValue& a, const ExtendedValue& b) {
    return !(b < a);
  }

 private:
  ExtendedValue() = default;
  explicit ExtendedValue(Value v) : value_(std::move(v)) {}

  std::optional<Value> value_;
};

// One (u, v) exchange of the M-concavity inequality, with both sides.
struct ExchangeWitness {
  IntVector x;
  IntVector y;
  MediumIndex u = 0;  // in supp+(x - y)
  MediumIndex v = 0;  // in supp+(y - x)
  ExtendedValue lhs = ExtendedValue::Bottom();  // f(x) + f(y)
  ExtendedValue rhs = ExtendedValue::Bottom();  // f(x - e_u + e_v) + f(y - e_v + e_u)
};

struct ExchangeReport {
  bool holds = true;
  std::vector<ExchangeWitness> violations;
  std::size_t pairs_checked = 0;
};

// {j : x_j > 0}.
std::vector<MediumIndex> PositiveSupport(const IntVector& x);

// Pot(x) on the domain, bottom elsewhere (negative entry or sum != K).
ExtendedValue ExtendedPotential(const GameSetting& setting, const IntVector& x,
                                Backend backend = Backend::kExact);

// Checks f(x) + f(y) <= f(x - e_u + e_v) + f(y - e_v + e_u) for every
// u in supp+(x - y) and every v in supp+(y - x). Vacuous when x == y.
ExchangeReport CheckExchange(const GameSetting& setting, const LoadVector& x,
                             const LoadVector& y);

// f(origin + alpha * y) when that point is in the domain, bottom otherwise.
// Throws DomainError unless origin is in the domain and alpha >= 1.
ExtendedValue ScaledPotential(const GameSetting& setting, const LoadVector& origin,
                              std::int64_t alpha, const IntVector& y,
                              Backend backend = Backend::kExact);

// The same exchange check on the scaled function y -> f(origin + alpha y).
// y and z must map into the domain.
ExchangeReport CheckScaledExchange(const GameSetting& setting,
                                   const LoadVector& origin, std::int64_t alpha,
                                   const IntVector& y, const IntVector& z);

}  // namespace medsel

#endif  // MEDSEL_MCONCAVITY_H_
