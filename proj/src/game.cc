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
#include "nashfpt/game.h"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace nashfpt {
namespace {

void CheckDistribution(const Vector& v, const char* name) {
  if (v.empty()) throw std::invalid_argument(std::string(name) + " is empty");
  Rational sum;
  for (const Rational& p : v) {
    if (p.Sign() < 0) {
      throw std::invalid_argument(std::string(name) + " has a negative entry");
    }
    sum += p;
  }
  if (sum != Rational(1)) {
    throw std::invalid_argument(std::string(name) + " sums to " +
                                sum.ToString() + ", not 1");
  }
}

std::string Join(const IndexSet& s) {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << s[i];
  os << "}";
  return os.str();
}

}  // namespace

BimatrixGame::BimatrixGame(Matrix a, Matrix b)
    : a_(std::move(a)), b_(std::move(b)) {
  if (a_.rows() == 0 || a_.cols() == 0) {
    throw std::invalid_argument("game needs at least one row and one column");
  }
  if (a_.rows() != b_.rows() || a_.cols() != b_.cols()) {
    throw std::invalid_argument("payoff matrices A and B differ in shape");
  }
}

bool BimatrixGame::NonNegative() const {
  auto nonneg = [](const Rational& v) { return v.Sign() >= 0; };
  return std::all_of(a_.data().begin(), a_.data().end(), nonneg) &&
         std::all_of(b_.data().begin(), b_.data().end(), nonneg);
}

std::string ToString(const Support& s) {
  return Join(s.rows) + "x" + Join(s.cols);
}

MixedProfile::MixedProfile(Vector x, Vector y)
    : x_(std::move(x)), y_(std::move(y)) {
  CheckDistribution(x_, "x");
  CheckDistribution(y_, "y");
}

MixedProfile MixedProfile::Pure(int rows, int cols, int row, int col) {
  Vector x(rows), y(cols);
  x.at(row) = 1;
  y.at(col) = 1;
  return MixedProfile(std::move(x), std::move(y));
}

Support MixedProfile::support() const {
  return {SupportOf(x_), SupportOf(y_)};
}

IndexSet SupportOf(const Vector& v) {
  IndexSet s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].Sign() > 0) s.push_back(static_cast<int>(i));
  }
  return s;
}

void CheckDimensions(const BimatrixGame& game, const MixedProfile& p) {
  if (static_cast<int>(p.x().size()) != game.rows() ||
      static_cast<int>(p.y().size()) != game.cols()) {
    throw std::invalid_argument("profile dimensions do not match the game");
  }
}

std::pair<Rational, Rational> Payoffs(const BimatrixGame& game,
                                      const MixedProfile& p) {
  CheckDimensions(game, p);
  return {Dot(p.x(), game.A() * p.y()), Dot(p.x(), game.B() * p.y())};
}

Verdict VerifyEquilibrium(const BimatrixGame& game, const MixedProfile& p) {
  CheckDimensions(game, p);
  const Vector ay = game.A() * p.y();
  const Vector xb = LeftMultiply(p.x(), game.B());
  auto scan = [](const Vector& probs, const Vector& payoff,
                 Player who) -> std::optional<Violation> {
    for (std::size_t s = 0; s < probs.size(); ++s) {
      if (probs[s].Sign() <= 0) continue;
      for (std::size_t j = 0; j < payoff.size(); ++j) {
        if (payoff[j] > payoff[s]) {
          return Violation{who, static_cast<int>(s), static_cast<int>(j),
                           payoff[s], payoff[j]};
        }
      }
    }
    return std::nullopt;
  };
  Verdict v;
  v.violation = scan(p.x(), ay, Player::kRow);
  if (!v.violation) v.violation = scan(p.y(), xb, Player::kColumn);
  return v;
}

std::pair<Rational, Rational> BestResponseGap(const BimatrixGame& game,
                                              const MixedProfile& p) {
  CheckDimensions(game, p);
  const Vector ay = game.A() * p.y();
  const Vector xb = LeftMultiply(p.x(), game.B());
  const Rational row_best = *std::max_element(ay.begin(), ay.end());
  const Rational col_best = *std::max_element(xb.begin(), xb.end());
  return {row_best - Dot(p.x(), ay), col_best - Dot(xb, p.y())};
}

}  // namespace nashfpt
