/*
 * Copyright 2026 The aitk Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <cstddef>
#include <vector>

namespace ait {

/// Calls f on every integer vector of length dim whose largest absolute entry
/// is exactly h (h >= 1), in a fixed order: grouped by the first position
/// carrying +-h, then with the first coordinate varying fastest, each
/// coordinate running through 0, 1, -1, 2, -2, .... Stops early and returns
/// true as soon as f returns true.
template <class F>
bool for_each_of_height(std::size_t dim, long h, F&& f) {
  auto value = [](std::size_t k) { return k == 0 ? 0L : (k % 2 == 1 ? static_cast<long>((k + 1) / 2) : -static_cast<long>(k / 2)); };
  std::vector<long> v(dim);
  for (std::size_t j = 0; j < dim; ++j) {
    std::vector<std::size_t> radix(dim), idx(dim, 0);
    for (std::size_t i = 0; i < dim; ++i) {
      radix[i] = i < j ? static_cast<std::size_t>(2 * h - 1) : (i == j ? 2 : static_cast<std::size_t>(2 * h + 1));
    }
    for (;;) {
      for (std::size_t i = 0; i < dim; ++i) v[i] = i == j ? (idx[i] == 0 ? h : -h) : value(idx[i]);
      if (f(v)) return true;
      std::size_t k = 0;
      while (k < dim && ++idx[k] == radix[k]) idx[k++] = 0;
      if (k == dim) break;
    }
  }
  return false;
}

}  // namespace ait
