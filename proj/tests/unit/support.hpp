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

#include <initializer_list>
#include <vector>

#include "ait/poly.hpp"

namespace ait::testing {

/// Integer polynomial from low-first coefficients.
inline RatPoly P(std::initializer_list<long> low_first) {
  std::vector<Rational> v;
  for (long c : low_first) v.emplace_back(c);
  return RatPoly(std::move(v));
}

inline std::vector<Rational> Q(std::initializer_list<long> xs) {
  std::vector<Rational> v;
  for (long c : xs) v.emplace_back(c);
  return v;
}

}  // namespace ait::testing
