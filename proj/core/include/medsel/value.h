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

#ifndef MEDSEL_VALUE_H_
#define MEDSEL_VALUE_H_

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

namespace medsel {

using Rational = mpq_class;

// Numeric backend used to evaluate utilities, potentials and marginals.
// Equilibrium decisions require kExact: equal-potential ties decide how many
// equilibria exist, and only exact arithmetic sees them.
enum class Backend { kExact, kFloat };

// Absolute tolerance of every comparison involving a float Value.
inline constexpr double kFloatTolerance = 1e-9;

// A number carried either as an exact rational or as a binary64 value.
//
// Arithmetic between two exact values stays exact; as soon as one operand is
// a float the result is a float. Comparisons are exact when both sides are
// exact and tolerance-based (kFloatTolerance) otherwise.
class Value {
 public:
  Value() : repr_(Rational(0)) {}
  explicit Value(Rational r) : repr_(std::move(r)) {}
  explicit Value(double d) : repr_(d) {}

  static Value Zero(Backend backend);
  static Value FromRational(const Rational& r, Backend backend);
  static Value FromInt(std::int64_t n, Backend backend);

  Backend backend() const {
    return std::holds_alternative<Rational>(repr_) ? Backend::kExact
                                                   : Backend::kFloat;
  }
  bool is_exact() const { return backend() == Backend::kExact; }

  // Throws BackendError on a float value.
  const Rational& exact() const;
  double ToDouble() const;

  // "p/q" (or "p" for integers) for exact values, shortest round-trip
  // decimal for floats.
  std::string ToString() const;

  Value& operator+=(const Value& other);
  Value& operator-=(const Value& other);
  Value& operator*=(const Value& other);
  Value& operator/=(const Value& other);
  Value operator-() const;

  friend Value operator+(Value a, const Value& b) { return a += b; }
  friend Value operator-(Value a, const Value& b) { return a -= b; }
  friend Value operator*(Value a, const Value& b) { return a *= b; }
  friend Value operator/(Value a, const Value& b) { return a /= b; }

  friend bool operator==(const Value& a, const Value& b);
  friend bool operator<(const Value& a, const Value& b);
  friend bool operator>(const Value& a, const Value& b) { return b < a; }
  friend bool operator<=(const Value& a, const Value& b) { return !(b < a); }
  friend bool operator>=(const Value& a, const Value& b) { return !(a < b); }

  int Sign() const;

 private:
  std::variant<Rational, double> repr_;
};

// H_n = 1 + 1/2 + ... + 1/n, and 0 for n <= 0. Values come from a process-wide
// prefix table grown on demand; concurrent callers observe the same values.
Value Harmonic(std::int64_t n, Backend backend = Backend::kExact);
Rational HarmonicExact(std::int64_t n);
double HarmonicFloat(std::int64_t n);

inline Rational MakeRational(std::int64_t num, std::int64_t den = 1) {
  Rational r{mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den))};
  r.canonicalize();
  return r;
}

// Parses "p/q", an integer, or a plain decimal ("0.25", "-3", "1e-2") into an
// exact rational. Throws ParseError.
Rational ParseRational(std::string_view text);

// Exact rational value of a finite double's shortest decimal representation,
// so 0.1 becomes 1/10 rather than its binary expansion.
Rational RationalFromDecimalDouble(double d);

// Renders a rational with the given number of significant digits ("%.*g").
std::string FormatDecimal(const Rational& r, int significant_digits);
std::string FormatDecimal(double d, int significant_digits);

}  // namespace medsel

#endif  // MEDSEL_VALUE_H_
