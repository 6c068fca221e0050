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
#include "nashfpt/rational.h"

#include <stdexcept>

namespace nashfpt {
namespace {

bool IsDigitRun(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

}  // namespace

Rational::Rational(const mpz_class& num, const mpz_class& den)
    : value_(num, den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  value_.canonicalize();
}

Rational::Rational(long num, long den) : Rational(mpz_class(num), mpz_class(den)) {}

Rational::Rational(const mpq_class& value) : value_(value) {
  if (value_.get_den() == 0) {
    throw std::domain_error("rational with zero denominator");
  }
  value_.canonicalize();
}

Rational Rational::Parse(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && body.front() == '-') {
    negative = true;
    body.remove_prefix(1);
  }
  std::string_view num = body;
  std::string_view den = "1";
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    num = body.substr(0, slash);
    den = body.substr(slash + 1);
  }
  if (!IsDigitRun(num) || !IsDigitRun(den)) {
    throw std::invalid_argument("malformed rational '" + std::string(text) +
                                "' (expected p or p/q)");
  }
  mpz_class p(std::string(num), 10);
  mpz_class q(std::string(den), 10);
  if (q == 0) {
    throw std::invalid_argument("zero denominator in '" + std::string(text) +
                                "'");
  }
  if (negative) p = -p;
  return Rational(p, q);
}

std::string Rational::ToString() const {
  if (IsInteger()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational& Rational::operator+=(const Rational& other) {
  value_ += other.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& other) {
  value_ -= other.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& other) {
  value_ *= other.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& other) {
  if (other.IsZero()) throw std::domain_error("rational division by zero");
  value_ /= other.value_;
  return *this;
}

std::size_t Rational::Hash() const {
  // Low limbs of numerator and denominator are enough to spread small values.
  std::size_t h = static_cast<std::size_t>(
      mpz_getlimbn(value_.get_num_mpz_t(), 0));
  h = h * 1000003u ^ static_cast<std::size_t>(mpz_getlimbn(
                         value_.get_den_mpz_t(), 0));
  return h * 31u + static_cast<std::size_t>(Sign() + 1);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.ToString();
}

}  // namespace nashfpt
