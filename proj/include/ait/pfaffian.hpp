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

#include <array>
#include <vector>

#include "ait/matrix.hpp"

namespace ait {

/// Pfaffian of an even-dimensional skew-symmetric matrix, by expansion along
/// the first row.
Rational pfaffian(const RatMatrix& m);

/// Triple (A, B, C) of 5x5 skew-symmetric matrices.
struct SkewTriple {
  RatMatrix A, B, C;

  SkewTriple(RatMatrix a, RatMatrix b, RatMatrix c);
  /// (g A g^T, g B g^T, g C g^T).
  SkewTriple acted(const RatMatrix& g) const;
  friend bool operator==(const SkewTriple&, const SkewTriple&) = default;
};

/// Coefficients of x^2, y^2, z^2, xy, xz, yz.
using TernaryQuadratic = std::array<Rational, 6>;

/// Q_i = (-1)^{i+1} Pf of Ax + By + Cz with row and column i removed (i = 1..5).
std::array<TernaryQuadratic, 5> sub_pfaffian_forms(const SkewTriple& v);

/// Signed maximal minors pi_j = (-1)^j det(M without column j) of the 5x6
/// coefficient matrix of Q_1..Q_5, as a symmetric matrix with halves off the
/// diagonal.
RatMatrix pi_invariant(const SkewTriple& v);

/// det(pi(v)) != 0.
bool sl5_stable(const SkewTriple& v);

}  // namespace ait
