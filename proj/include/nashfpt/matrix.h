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
#ifndef NASHFPT_MATRIX_H_
#define NASHFPT_MATRIX_H_

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "nashfpt/rational.h"

namespace nashfpt {

using Vector = std::vector<Rational>;

// Dense row-major rational matrix.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<Rational> data);
  // Nested-list constructor; every row must have the same width.
  Matrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static Matrix Identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) {
    return data_[r * cols_ + c];
  }
  const Rational& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  std::span<const Rational> Row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }
  Vector Column(std::size_t c) const;
  const std::vector<Rational>& data() const { return data_; }

  Matrix Transpose() const;
  // Submatrix on the given row and column indices, in the given order.
  Matrix Sub(std::span<const int> rows, std::span<const int> cols) const;

  bool IsZero() const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

Vector operator*(const Matrix& m, std::span<const Rational> v);
// Row vector times matrix: (v^T M).
Vector LeftMultiply(std::span<const Rational> v, const Matrix& m);
Rational Dot(std::span<const Rational> a, std::span<const Rational> b);

std::string ToString(const Matrix& m);

// Result of exact Gaussian elimination on M x = b.
struct LinearSystemSolution {
  std::size_t rank = 0;
  bool consistent = false;
  // Present iff consistent; free variables are set to zero.
  std::optional<Vector> particular;
  // Basis of the null space of M (empty when M has full column rank).
  std::vector<Vector> null_basis;

  bool Unique() const { return consistent && null_basis.empty(); }
};

// Reduced row echelon elimination with the first non-zero pivot in each
// column. Throws std::invalid_argument on dimension mismatch.
LinearSystemSolution SolveLinearSystem(const Matrix& m,
                                       std::span<const Rational> b);

}  // namespace nashfpt

#endif  // NASHFPT_MATRIX_H_
