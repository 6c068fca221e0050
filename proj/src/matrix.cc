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
#include "nashfpt/matrix.h"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace nashfpt {

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<Rational> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
  if (data_.size() != rows_ * cols_) {
    throw std::invalid_argument("matrix data size does not match shape");
  }
}

Matrix::Matrix(std::initializer_list<std::initializer_list<Rational>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw std::invalid_argument("ragged matrix rows");
    data_.insert(data_.end(), row.begin(), row.end());
  }
}

Matrix Matrix::Identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Vector Matrix::Column(std::size_t c) const {
  Vector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

Matrix Matrix::Transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

Matrix Matrix::Sub(std::span<const int> rows, std::span<const int> cols) const {
  Matrix s(rows.size(), cols.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < cols.size(); ++c) {
      s(r, c) = (*this)(rows[r], cols[c]);
    }
  }
  return s;
}

bool Matrix::IsZero() const {
  for (const Rational& v : data_) {
    if (!v.IsZero()) return false;
  }
  return true;
}

Vector operator*(const Matrix& m, std::span<const Rational> v) {
  if (v.size() != m.cols()) throw std::invalid_argument("M*v: size mismatch");
  Vector out(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (!m(r, c).IsZero() && !v[c].IsZero()) out[r] += m(r, c) * v[c];
    }
  }
  return out;
}

Vector LeftMultiply(std::span<const Rational> v, const Matrix& m) {
  if (v.size() != m.rows()) throw std::invalid_argument("v^T*M: size mismatch");
  Vector out(m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (v[r].IsZero()) continue;
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (!m(r, c).IsZero()) out[c] += v[r] * m(r, c);
    }
  }
  return out;
}

Rational Dot(std::span<const Rational> a, std::span<const Rational> b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: size mismatch");
  Rational sum;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i].IsZero() && !b[i].IsZero()) sum += a[i] * b[i];
  }
  return sum;
}

std::string ToString(const Matrix& m) {
  std::ostringstream os;
  os << "[";
  for (std::size_t r = 0; r < m.rows(); ++r) {
    os << (r ? ", [" : "[");
    for (std::size_t c = 0; c < m.cols(); ++c) {
      os << (c ? ", " : "") << m(r, c);
    }
    os << "]";
  }
  os << "]";
  return os.str();
}

LinearSystemSolution SolveLinearSystem(const Matrix& m,
                                       std::span<const Rational> b) {
  if (b.size() != m.rows()) {
    throw std::invalid_argument("linear system: rhs length != row count");
  }
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  // Augmented matrix [M | b].
  Matrix aug(rows, cols + 1);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) aug(r, c) = m(r, c);
    aug(r, cols) = b[r];
  }

  std::vector<int> pivot_col_of_row;
  std::size_t pivot_row = 0;
  for (std::size_t c = 0; c < cols && pivot_row < rows; ++c) {
    std::size_t sel = pivot_row;
    while (sel < rows && aug(sel, c).IsZero()) ++sel;
    if (sel == rows) continue;
    if (sel != pivot_row) {
      for (std::size_t k = 0; k <= cols; ++k) {
        std::swap(aug(sel, k), aug(pivot_row, k));
      }
    }
    const Rational inv = Rational(1) / aug(pivot_row, c);
    for (std::size_t k = c; k <= cols; ++k) aug(pivot_row, k) *= inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == pivot_row || aug(r, c).IsZero()) continue;
      const Rational f = aug(r, c);
      for (std::size_t k = c; k <= cols; ++k) {
        if (!aug(pivot_row, k).IsZero()) aug(r, k) -= f * aug(pivot_row, k);
      }
    }
    pivot_col_of_row.push_back(static_cast<int>(c));
    ++pivot_row;
  }

  LinearSystemSolution out;
  out.rank = pivot_row;
  out.consistent = true;
  for (std::size_t r = pivot_row; r < rows; ++r) {
    if (!aug(r, cols).IsZero()) out.consistent = false;
  }

  std::vector<bool> is_pivot(cols, false);
  for (int c : pivot_col_of_row) is_pivot[c] = true;

  if (out.consistent) {
    Vector x(cols);
    for (std::size_t r = 0; r < pivot_row; ++r) {
      x[pivot_col_of_row[r]] = aug(r, cols);
    }
    out.particular = std::move(x);
  }
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    Vector v(cols);
    v[f] = 1;
    for (std::size_t r = 0; r < pivot_row; ++r) {
      v[pivot_col_of_row[r]] = -aug(r, f);
    }
    out.null_basis.push_back(std::move(v));
  }
  return out;
}

}  // namespace nashfpt
