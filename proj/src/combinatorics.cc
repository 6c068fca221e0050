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
#include "nashfpt/combinatorics.h"

#include <limits>
#include <utility>

namespace nashfpt {

std::int64_t SaturatingAdd(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) {
    return std::numeric_limits<std::int64_t>::max();
  }
  return r;
}

std::int64_t SaturatingMul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) {
    return std::numeric_limits<std::int64_t>::max();
  }
  return r;
}

std::int64_t Binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  // Exact in 128 bits for every intermediate we care about.
  __int128 r = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > std::numeric_limits<std::int64_t>::max()) {
      return std::numeric_limits<std::int64_t>::max();
    }
  }
  return static_cast<std::int64_t>(r);
}

std::vector<std::pair<int, int>> SupportSizeOrder(int max_rows, int max_cols) {
  std::vector<std::pair<int, int>> order;
  for (int total = 2; total <= max_rows + max_cols; ++total) {
    for (int k1 = 1; k1 <= max_rows; ++k1) {
      const int k2 = total - k1;
      if (k2 >= 1 && k2 <= max_cols) order.emplace_back(k1, k2);
    }
  }
  return order;
}

}  // namespace nashfpt
