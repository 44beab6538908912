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
// Backend-specialized arithmetic used inside the hot loops of the solvers.
// Public entry points take a Backend and dispatch through WithArith.

#ifndef MEDSEL_SRC_ARITH_H_
#define MEDSEL_SRC_ARITH_H_

#include <cstdint>
#include <utility>
#include <vector>

#include "medsel/model.h"
#include "medsel/value.h"

namespace medsel::internal {

struct ExactArith {
  using Num = Rational;
  static constexpr Backend kBackend = Backend::kExact;

  static Num FromInt(std::int64_t n) { return MakeRational(n); }
  static Num FromRational(const Rational& r) { return r; }
  static Num Ratio(std::int64_t num, std::int64_t den) {
    return MakeRational(num, den);
  }
  static Num Harmonic(std::int64_t n) { return HarmonicExact(n); }
  static bool Less(const Num& a, const Num& b) { return a < b; }
  static bool Equal(const Num& a, const Num& b) { return a == b; }
  static Value Wrap(Num n) { return Value(std::move(n)); }
};

struct FloatArith {
  using Num = double;
  static constexpr Backend kBackend = Backend::kFloat;

  static Num FromInt(std::int64_t n) { return static_cast<double>(n); }
  static Num FromRational(const Rational& r) { return r.get_d(); }
  static Num Ratio(std::int64_t num, std::int64_t den) {
    return static_cast<double>(num) / static_cast<double>(den);
  }
  static Num Harmonic(std::int64_t n) { return HarmonicFloat(n); }
  static bool Less(Num a, Num b) { return a < b - kFloatTolerance; }
  static bool Equal(Num a, Num b) {
    return a - b <= kFloatTolerance && b - a <= kFloatTolerance;
  }
  static Value Wrap(Num n) { return Value(n); }
};

// Per-medium parameters converted once to the backend's number type.
template <class A>
class MediaTable {
 public:
  using Num = typename A::Num;

  explicit MediaTable(const GameSetting& setting) {
    subscribers_.reserve(setting.num_media());
    costs_.reserve(setting.num_media());
    for (const MediumParams& m : setting.media()) {
      subscribers_.push_back(m.subscribers);
      costs_.push_back(A::FromRational(m.cost));
    }
  }

  std::size_t size() const { return costs_.size(); }
  std::int64_t subscribers(MediumIndex j) const { return subscribers_[j]; }
  const Num& cost(MediumIndex j) const { return costs_[j]; }

  // N_j / (load_j + 1) - gamma_j.
  Num Marginal(MediumIndex j, std::int64_t load_j) const {
    return A::Ratio(subscribers_[j], load_j + 1) - costs_[j];
  }

  // N_j (H_{base + count} - H_{base}) - count * gamma_j: the potential gained
  // by adding count seeds to a medium already holding base.
  Num BlockGain(MediumIndex j, std::int64_t base, std::int64_t count) const {
    if (count == 1) return Marginal(j, base);
    return A::FromInt(subscribers_[j]) *
               (A::Harmonic(base + count) - A::Harmonic(base)) -
           A::FromInt(count) * costs_[j];
  }

 private:
  std::vector<std::int64_t> subscribers_;
  std::vector<Num> costs_;
};

template <class F>
decltype(auto) WithArith(Backend backend, F&& f) {
  if (backend == Backend::kExact) return std::forward<F>(f)(ExactArith{});
  return std::forward<F>(f)(FloatArith{});
}

}  // namespace medsel::internal

#endif  // MEDSEL_SRC_ARITH_H_
