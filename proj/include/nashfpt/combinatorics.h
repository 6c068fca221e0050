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
#ifndef NASHFPT_COMBINATORICS_H_
#define NASHFPT_COMBINATORICS_H_

#include <cstdint>
#include <span>
#include <vector>

namespace nashfpt {

// Calls fn(subset) for every k-subset of items in lexicographic order of
// positions. fn returns false to stop; the return value reports whether the
// sweep ran to completion.
template <typename Fn>
bool ForEachCombination(std::span<const int> items, int k, Fn&& fn) {
  const int n = static_cast<int>(items.size());
  if (k < 0 || k > n) return true;
  std::vector<int> pos(k);
  for (int i = 0; i < k; ++i) pos[i] = i;
  std::vector<int> subset(k);
  while (true) {
    for (int i = 0; i < k; ++i) subset[i] = items[pos[i]];
    if (!fn(static_cast<const std::vector<int>&>(subset))) return false;
    int i = k - 1;
    while (i >= 0 && pos[i] == n - k + i) --i;
    if (i < 0) return true;
    ++pos[i];
    for (int j = i + 1; j < k; ++j) pos[j] = pos[j - 1] + 1;
  }
}

template <typename Fn>
bool ForEachCombination(int n, int k, Fn&& fn) {
  std::vector<int> items(n > 0 ? n : 0);
  for (int i = 0; i < n; ++i) items[i] = i;
  return ForEachCombination(std::span<const int>(items), k,
                            static_cast<Fn&&>(fn));
}

// Binomial coefficient; saturates at INT64_MAX.
std::int64_t Binomial(std::int64_t n, std::int64_t k);

// Saturating helpers for projected counts.
std::int64_t SaturatingAdd(std::int64_t a, std::int64_t b);
std::int64_t SaturatingMul(std::int64_t a, std::int64_t b);

// Support-size pairs (k1, k2) with 1 <= k1, k2 <= k ordered by k1 + k2, ties
// broken by k1.
std::vector<std::pair<int, int>> SupportSizeOrder(int max_rows, int max_cols);

}  // namespace nashfpt

#endif  // NASHFPT_COMBINATORICS_H_
