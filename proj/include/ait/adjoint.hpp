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

#include <vector>

#include "ait/matrix.hpp"

namespace ait {

/// Invariants of T under conjugation by GL_{n-1}, embedded in the upper-left
/// block so that it fixes e = e_n and the n-th coordinate functional.
struct AdjointInvariants {
  std::vector<Rational> c;        // det(xI - T) = sum_i (-1)^i c_i x^{n-i}, c_1..c_n
  std::vector<Rational> moments;  // a_j = (T^j)_{nn}, j = 1..n-1

  std::size_t n() const { return c.size(); }
  friend bool operator==(const AdjointInvariants&, const AdjointInvariants&) = default;
};

AdjointInvariants adjoint_invariants(const RatMatrix& T);

/// a_m = (T^m)_{nn} for 0 <= m <= count-1, continued past n-1 through the
/// characteristic polynomial.
std::vector<Rational> extended_moments(const AdjointInvariants& inv, std::size_t count);

/// det[(T^{i+j})_{nn}], 0 <= i, j <= n-1.
Rational regularity_D(const AdjointInvariants& inv);
Rational regularity_D(const RatMatrix& T);

/// Matrix of T in the basis (T^j e - a_j e)_{j=1..n-1}, e, computed from the
/// invariants alone. Throws when D = 0.
RatMatrix adjoint_canonical_rep(const AdjointInvariants& inv);

struct Conjugator {
  RatMatrix g;  // block diag(g0, 1) with g T g^{-1} = T'
  bool unique = false;
};

/// Throws when D(T) = 0 or when no block conjugator exists.
Conjugator adjoint_conjugator(const RatMatrix& T, const RatMatrix& Tprime);

/// diag(g0, 1).
RatMatrix block_embed(const RatMatrix& g0);

}  // namespace ait
