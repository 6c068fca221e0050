// Copyright 2026 The nashfpt Authors.
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
#ifndef NASHFPT_RATIONAL_H_
#define NASHFPT_RATIONAL_H_

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>

namespace nashfpt {

// Exact rational number, always kept in lowest terms with a positive
// denominator. Backed by GMP's mpq_class.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : value_(value) {}  // NOLINT: implicit by intent.
  Rational(int value) : value_(value) {}   // NOLINT
  Rational(const mpz_class& num, const mpz_class& den);
  Rational(long num, long den);
  explicit Rational(const mpq_class& value);

  // Parses "p" or "p/q" with optional leading '-'. Decimal points,
  // whitespace, exponents and zero denominators are rejected.
  static Rational Parse(std::string_view text);

  mpz_class Numerator() const { return value_.get_num(); }
  mpz_class Denominator() const { return value_.get_den(); }
  const mpq_class& Raw() const { return value_; }

  int Sign() const { return sgn(value_); }
  bool IsZero() const { return Sign() == 0; }
  bool IsInteger() const { return value_.get_den() == 1; }
  double ToDouble() const { return value_.get_d(); }

  // "p" for integers, "p/q" otherwise.
  std::string ToString() const;

  Rational operator-() const { return Rational(mpq_class(-value_)); }
  Rational& operator+=(const Rational& other);
  Rational& operator-=(const Rational& other);
  Rational& operator*=(const Rational& other);
  Rational& operator/=(const Rational& other);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.value_ == b.value_;
  }
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b) {
    int c = cmp(a.value_, b.value_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  std::size_t Hash() const;

 private:
  mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace nashfpt

template <>
struct std::hash<nashfpt::Rational> {
  std::size_t operator()(const nashfpt::Rational& r) const { return r.Hash(); }
};

#endif  // NASHFPT_RATIONAL_H_
