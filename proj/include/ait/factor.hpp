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

#include <cstdint>
#include <utility>
#include <vector>

#include "ait/poly.hpp"

namespace ait {

struct Factorization {
  Rational unit;
  /// Monic irreducible factors with multiplicity, ordered by degree and then
  /// lexicographically on coefficients (constant term first).
  std::vector<std::pair<RatPoly, int>> factors;

  RatPoly expand() const;
};

/// Complete factorization over Q: squarefree decomposition, then for each
/// squarefree part a modular factorization, Hensel lifting past the
/// Mignotte bound and subset recombination.
Factorization factor_rational_poly(const RatPoly& p);

/// Irreducible factors only, monic, in the canonical order. Input squarefree.
std::vector<RatPoly> irreducible_factors(const RatPoly& squarefree);

/// Degrees of the irreducible factors of p modulo a prime (p reduced mod
/// prime must keep its degree and stay squarefree, otherwise empty).
std::vector<int> degree_pattern_mod_p(const RatPoly& p, std::uint32_t prime);

}  // namespace ait
