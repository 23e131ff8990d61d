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
#include <string>
#include <vector>

#include "ait/matrix.hpp"

namespace ait {

/// A place of Q: a prime, or the real place (stored as 0).
struct Place {
  Integer p;  // 0 for the real place

  static Place infinity() { return Place{Integer(0)}; }
  static Place prime(long q) { return Place{Integer(q)}; }
  bool is_infinite() const { return p == 0; }
  std::string str() const;
  friend bool operator==(const Place& a, const Place& b) { return a.p == b.p; }
  /// Finite primes ascending, the real place last.
  friend bool operator<(const Place& a, const Place& b);
};

/// q(x) = x^T G x for a symmetric rational Gram matrix G.
class QuadForm {
 public:
  QuadForm() = default;
  explicit QuadForm(RatMatrix gram);
  static QuadForm diagonal(const std::vector<Rational>& entries);

  std::size_t dim() const { return gram_.rows(); }
  const RatMatrix& gram() const { return gram_; }
  Rational det() const { return determinant(gram_); }
  bool is_nondegenerate() const { return det() != 0; }
  Rational operator()(const std::vector<Rational>& x) const;

  friend bool operator==(const QuadForm&, const QuadForm&) = default;

 private:
  RatMatrix gram_;
};

/// Orthogonal sum.
QuadForm orthogonal_sum(const QuadForm& a, const QuadForm& b);

struct Diagonalization {
  std::vector<Integer> entries;  // squarefree integers
  RatMatrix transform;           // P with P^T G P = diag(entries)
};

Diagonalization diagonalize(const QuadForm& q);

/// (a, b)_v for nonzero rationals.
int hilbert_symbol(const Rational& a, const Rational& b, const Place& v);

/// Whether a nonzero rational is a square in Q_v.
bool is_local_square(const Rational& a, const Place& v);

/// 2 and the primes dividing the diagonal entries, then the real place. Every
/// local invariant of q is trivial outside this set.
std::vector<Place> relevant_places(const QuadForm& q);

/// prod_{i<j} (a_i, a_j)_v over a diagonalization.
int hasse_invariant(const QuadForm& q, const Place& v);

int signature_positive(const QuadForm& q);
int signature_negative(const QuadForm& q);
/// Squarefree representative of det modulo squares.
Integer discriminant_class(const QuadForm& q);

bool is_locally_isotropic(const QuadForm& q, const Place& v);
/// Hasse-Minkowski over the relevant places.
bool is_isotropic(const QuadForm& q);
/// Nonzero x with q(x) = 0, searched with coordinates of height <= bound in a
/// diagonal basis.
std::optional<std::vector<Rational>> isotropic_vector(const QuadForm& q, long bound);

/// Equivalence over Q: dimension, discriminant class, signature and all
/// local Hasse invariants.
bool forms_equivalent(const QuadForm& a, const QuadForm& b);

/// W^T G W for vectors given as the columns of W.
QuadForm gram_invariant(const QuadForm& space, const RatMatrix& vectors);

struct OrbitTarget {
  QuadForm target;  // f + <det W / det f>
  bool lifts = false;
};

OrbitTarget so_orbit_target(const QuadForm& f, const QuadForm& space);

/// 2-torsion Brauer class given by its ramified places.
struct BrauerClass2 {
  std::vector<Place> ramified;

  bool is_split() const { return ramified.empty(); }
  friend bool operator==(const BrauerClass2&, const BrauerClass2&) = default;
};

/// Brauer class of the quaternion algebra (a, b).
BrauerClass2 quaternion_class(const Rational& a, const Rational& b);

/// Brauer class of the even Clifford algebra of an odd-dimensional space.
BrauerClass2 spin_obstruction(const QuadForm& q);

}  // namespace ait
