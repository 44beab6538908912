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
#include "medsel/value.h"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <mutex>
#include <string>
#include <vector>

#include "medsel/errors.h"

namespace medsel {
namespace {

bool BothExact(const Value& a, const Value& b) {
  return a.is_exact() && b.is_exact();
}

class HarmonicTable {
 public:
  Rational Exact(std::int64_t n) {
    if (n <= 0) return Rational(0);
    std::lock_guard<std::mutex> lock(mu_);
    const auto index = static_cast<std::size_t>(n);
    while (exact_.size() <= index) {
      const auto k = static_cast<std::int64_t>(exact_.size());
      exact_.push_back(exact_.back() + MakeRational(1, k));
    }
    return exact_[index];
  }

  double Float(std::int64_t n) {
    if (n <= 0) return 0.0;
    std::lock_guard<std::mutex> lock(mu_);
    const auto index = static_cast<std::size_t>(n);
    if (float_.size() <= index) {
      float_.reserve(index + 1);
      while (float_.size() <= index) {
        const auto k = static_cast<double>(float_.size());
        float_.push_back(float_.back() + 1.0 / k);
      }
    }
    return float_[index];
  }

 private:
  std::mutex mu_;
  std::vector<Rational> exact_{Rational(0)};
  std::vector<double> float_{0.0};
};

HarmonicTable& Table() {
  static HarmonicTable* table = new HarmonicTable();
  return *table;
}

mpz_class PowerOfTen(unsigned long exponent) {
  mpz_class result;
  mpz_ui_pow_ui(result.get_mpz_t(), 10, exponent);
  return result;
}

Rational ParseDecimal(std::string_view text, std::string_view original) {
  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    negative = text[pos] == '-';
    ++pos;
  }
  std::string digits;
  long fraction_digits = 0;
  bool seen_point = false;
  bool any_digit = false;
  for (; pos < text.size(); ++pos) {
    const char c = text[pos];
    if (c >= '0' && c <= '9') {
      digits.push_back(c);
      any_digit = true;
      if (seen_point) ++fraction_digits;
    } else if (c == '.' && !seen_point) {
      seen_point = true;
    } else {
      break;
    }
  }
  if (!any_digit) {
    throw ParseError("invalid number '" + std::string(original) + "'");
  }
  long exponent = 0;
  if (pos < text.size() && (text[pos] == 'e' || text[pos] == 'E')) {
    ++pos;
    const char* begin = text.data() + pos;
    const char* end = text.data() + text.size();
    if (begin != end && *begin == '+') ++begin;
    auto [ptr, ec] = std::from_chars(begin, end, exponent);
    if (ec != std::errc() || ptr == begin) {
      throw ParseError("invalid exponent in '" + std::string(original) + "'");
    }
    pos = static_cast<std::size_t>(ptr - text.data());
  }
  if (pos != text.size()) {
    throw ParseError("invalid number '" + std::string(original) + "'");
  }
  mpz_class mantissa(digits, 10);
  if (negative) mantissa = -mantissa;
  const long scale = exponent - fraction_digits;
  Rational result(mantissa);
  if (scale > 0) {
    result *= Rational(PowerOfTen(static_cast<unsigned long>(scale)));
  } else if (scale < 0) {
    result /= Rational(PowerOfTen(static_cast<unsigned long>(-scale)));
  }
  result.canonicalize();
  return result;
}

std::string_view Trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

}  // namespace

Value Value::Zero(Backend backend) {
  return backend == Backend::kExact ? Value(Rational(0)) : Value(0.0);
}

Value Value::FromRational(const Rational& r, Backend backend) {
  return backend == Backend::kExact ? Value(r) : Value(r.get_d());
}

Value Value::FromInt(std::int64_t n, Backend backend) {
  return backend == Backend::kExact ? Value(MakeRational(n))
                                    : Value(static_cast<double>(n));
}

const Rational& Value::exact() const {
  if (const auto* r = std::get_if<Rational>(&repr_)) return *r;
  throw BackendError("exact value requested from a float Value");
}

double Value::ToDouble() const {
  if (const auto* r = std::get_if<Rational>(&repr_)) return r->get_d();
  return std::get<double>(repr_);
}

std::string Value::ToString() const {
  if (const auto* r = std::get_if<Rational>(&repr_)) return r->get_str();
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), std::get<double>(repr_));
  return std::string(buf, ptr);
}

Value& Value::operator+=(const Value& other) {
  if (BothExact(*this, other)) {
    std::get<Rational>(repr_) += other.exact();
  } else {
    repr_ = ToDouble() + other.ToDouble();
  }
  return *this;
}

Value& Value::operator-=(const Value& other) {
  if (BothExact(*this, other)) {
    std::get<Rational>(repr_) -= other.exact();
  } else {
    repr_ = ToDouble() - other.ToDouble();
  }
  return *this;
}

Value& Value::operator*=(const Value& other) {
  if (BothExact(*this, other)) {
    std::get<Rational>(repr_) *= other.exact();
  } else {
    repr_ = ToDouble() * other.ToDouble();
  }
  return *this;
}

Value& Value::operator/=(const Value& other) {
  if (BothExact(*this, other)) {
    if (sgn(other.exact()) == 0) throw DomainError("division by zero");
    std::get<Rational>(repr_) /= other.exact();
  } else {
    repr_ = ToDouble() / other.ToDouble();
  }
  return *this;
}

Value Value::operator-() const {
  if (const auto* r = std::get_if<Rational>(&repr_)) return Value(Rational(-*r));
  return Value(-std::get<double>(repr_));
}

bool operator==(const Value& a, const Value& b) {
  if (BothExact(a, b)) return a.exact() == b.exact();
  return std::fabs(a.ToDouble() - b.ToDouble()) <= kFloatTolerance;
}

bool operator<(const Value& a, const Value& b) {
  if (BothExact(a, b)) return a.exact() < b.exact();
  return a.ToDouble() < b.ToDouble() - kFloatTolerance;
}

int Value::Sign() const {
  if (const auto* r = std::get_if<Rational>(&repr_)) return sgn(*r);
  const double d = std::get<double>(repr_);
  if (d > kFloatTolerance) return 1;
  if (d < -kFloatTolerance) return -1;
  return 0;
}

Rational HarmonicExact(std::int64_t n) { return Table().Exact(n); }

double HarmonicFloat(std::int64_t n) { return Table().Float(n); }

Value Harmonic(std::int64_t n, Backend backend) {
  return backend == Backend::kExact ? Value(HarmonicExact(n))
                                    : Value(HarmonicFloat(n));
}

Rational ParseRational(std::string_view text) {
  const std::string_view trimmed = Trim(text);
  if (trimmed.empty()) throw ParseError("empty number");
  const auto slash = trimmed.find('/');
  if (slash == std::string_view::npos) return ParseDecimal(trimmed, text);

  const std::string_view num = Trim(trimmed.substr(0, slash));
  const std::string_view den = Trim(trimmed.substr(slash + 1));
  auto is_integer = [](std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s) {
      if (c < '0' || c > '9') return false;
    }
    return true;
  };
  if (!is_integer(num) || !is_integer(den)) {
    throw ParseError("invalid rational '" + std::string(text) + "'");
  }
  auto to_mpz = [](std::string_view s) {
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    return mpz_class(std::string(s), 10);
  };
  const mpz_class denominator = to_mpz(den);
  if (denominator == 0) {
    throw ParseError("zero denominator in '" + std::string(text) + "'");
  }
  Rational result(to_mpz(num), denominator);
  result.canonicalize();
  return result;
}

Rational RationalFromDecimalDouble(double d) {
  if (!std::isfinite(d)) throw ParseError("non-finite number");
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), d);
  return ParseDecimal(std::string_view(buf, static_cast<std::size_t>(ptr - buf)),
                      std::string_view(buf, static_cast<std::size_t>(ptr - buf)));
}

std::string FormatDecimal(const Rational& r, int significant_digits) {
  mpf_class f(r, 512);
  char* out = nullptr;
  gmp_asprintf(&out, "%.*Fg", significant_digits, f.get_mpf_t());
  std::string result(out);
  void (*free_fn)(void*, std::size_t);
  mp_get_memory_functions(nullptr, nullptr, &free_fn);
  free_fn(out, result.size() + 1);
  return result;
}

std::string FormatDecimal(double d, int significant_digits) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*g", significant_digits, d);
  return buf;
}

}  // namespace medsel
