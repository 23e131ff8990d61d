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

#include <optional>
#include <vector>

#include "ait/binary_form.hpp"
#include "ait/etale.hpp"
#include "ait/matrix.hpp"

namespace ait {

/// Pair (A, B) of symmetric n x n matrices.
struct SymPair {
  RatMatrix A;
  RatMatrix B;

  SymPair() = default;
  /// Throws DomainError unless both are square, symmetric and of equal size.
  SymPair(RatMatrix a, RatMatrix b);

  std::size_t n() const { return A.rows(); }
  /// (M^T A M, M^T B M).
  SymPair transformed(const RatMatrix& m) const;
  friend bool operator==(const SymPair&, const SymPair&) = default;
};

/// (alpha, t) with alpha a unit of L = Q[x]/(g) and t^2 = f_0 N(alpha).
struct OrbitParam {
  AlgElement alpha;
  Rational t;

  const AlgebraPtr& algebra() const { return alpha.algebra(); }
};

/// Throws DomainError when p is not a valid parameter for f.
void check_orbit_param(const BinaryForm& f, const OrbitParam& p);

/// f(x, y) = (-1)^{n(n-1)/2} det(xA - yB).
BinaryForm invariant_binary_form(const SymPair& v);

/// Delta(f) != 0 and f_0 != 0.
bool is_stable(const BinaryForm& f);

/// Algebra Q[x]/(g) with g the monic dehomogenization of f. Throws for
/// unstable forms.
AlgebraPtr algebra_of(const BinaryForm& f);

OrbitParam pencil_to_param(const SymPair& v);
SymPair param_to_pencil(const BinaryForm& f, const OrbitParam& p);

/// c with c^2 alpha2 = alpha1 and N(c) t2 = t1.
std::optional<AlgElement> g_equivalent(const OrbitParam& p1, const OrbitParam& p2);

struct HWitness {
  AlgElement c;
  Rational d;
};

/// Search for (c, d) with c^2 d alpha2 = alpha1 and N(c) d^{n/2} t2 = t1, d
/// squarefree and supported on {-1} together with the primes in `primes` and
/// those dividing f_0 Delta(f). An empty result only means none was found.
std::optional<HWitness> h_equivalent(const BinaryForm& f, const OrbitParam& p1,
                                     const OrbitParam& p2, const std::vector<Integer>& primes);

struct StabilizerGroup {
  std::vector<RatMatrix> elements;
  std::vector<RatMatrix> generators;
  Integer order;
};

/// Rational points of the stabilizer of a stable pair.
StabilizerGroup stabilizer_rational(const SymPair& v);

/// Order of the stabilizer over an algebraic closure.
Integer geometric_stabilizer_order(int n);

/// True when no orbit with invariant f exists over the reals.
bool real_orbit_obstruction(const BinaryForm& f);

struct ObstructionReport {
  Integer f0_class;  // squarefree representative of f_0 modulo squares
  std::optional<OrbitParam> witness;
  bool real_obstruction = false;
};

/// Bounded search for a rational orbit with invariant f. Candidates alpha have
/// integer coordinates of height <= bound, optionally divided by a positive
/// divisor of the numerator of f_0.
ObstructionReport orbit_witness_search(const BinaryForm& f, long bound);

}  // namespace ait
