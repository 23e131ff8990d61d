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

#include <memory>
#include <optional>
#include <vector>

#include "ait/matrix.hpp"
#include "ait/poly.hpp"

namespace ait {

class AlgElement;

/// L = Q[x]/(g) for a monic separable g. beta denotes the class of x.
/// Immutable after construction; the factorization of g and the matching
/// idempotents are computed eagerly.
class EtaleAlgebra : public std::enable_shared_from_this<EtaleAlgebra> {
 public:
  static std::shared_ptr<const EtaleAlgebra> make(const RatPoly& g);

  int degree() const { return modulus_.degree(); }
  const RatPoly& modulus() const { return modulus_; }
  /// Monic irreducible factors g_1..g_r in canonical order.
  const std::vector<RatPoly>& factors() const { return factors_; }

  AlgElement zero() const;
  AlgElement one() const;
  AlgElement beta() const;
  AlgElement scalar(const Rational& c) const;
  AlgElement from_coords(std::vector<Rational> coords) const;
  AlgElement from_poly(const RatPoly& p) const;

  /// Idempotent E_i: 1 modulo g_i, 0 modulo every other factor.
  const std::vector<RatPoly>& idempotent_polys() const { return idempotents_; }
  std::vector<AlgElement> idempotents() const;

  /// Tr(beta^m / g'(beta)) for m >= 0: zero below n-1, one at n-1, and
  /// continued by the linear recurrence of g.
  Rational euler_trace(int m) const;

  bool same_as(const EtaleAlgebra& other) const { return modulus_ == other.modulus_; }

 private:
  explicit EtaleAlgebra(RatPoly g);
  RatPoly modulus_;
  std::vector<RatPoly> factors_;
  std::vector<RatPoly> idempotents_;
};

using AlgebraPtr = std::shared_ptr<const EtaleAlgebra>;

AlgebraPtr make_algebra(const RatPoly& g);

/// Element of L in the power basis 1, beta, ..., beta^{n-1}.
class AlgElement {
 public:
  AlgElement(AlgebraPtr algebra, std::vector<Rational> coords);

  const AlgebraPtr& algebra() const { return algebra_; }
  const std::vector<Rational>& coords() const { return coords_; }
  RatPoly as_poly() const { return RatPoly(coords_); }
  int degree() const { return static_cast<int>(coords_.size()); }
  bool is_zero() const;

  AlgElement& operator+=(const AlgElement& o);
  AlgElement& operator-=(const AlgElement& o);
  AlgElement& operator*=(const AlgElement& o);
  AlgElement operator-() const;
  AlgElement scaled(const Rational& c) const;

  friend AlgElement operator+(AlgElement a, const AlgElement& b) { return a += b; }
  friend AlgElement operator-(AlgElement a, const AlgElement& b) { return a -= b; }
  friend AlgElement operator*(AlgElement a, const AlgElement& b) { return a *= b; }
  friend bool operator==(const AlgElement& a, const AlgElement& b);

  bool is_invertible() const;
  /// Throws DomainError for zero divisors.
  AlgElement inverse() const;
  AlgElement pow(long e) const;

  /// Matrix of multiplication by this element on the power basis (columns are
  /// images of basis vectors).
  RatMatrix multiplication_matrix() const;
  RatPoly charpoly() const;
  Rational norm() const;
  Rational trace() const;

 private:
  AlgebraPtr algebra_;
  std::vector<Rational> coords_;
};

AlgElement operator/(const AlgElement& a, const AlgElement& b);

/// The unique kappa with Tr(kappa beta^i / g'(beta)) = a_i, i = 0..n-1.
AlgElement euler_trace_solve(const AlgebraPtr& algebra, const std::vector<Rational>& values);

/// g'(beta)
AlgElement derivative_at_beta(const AlgebraPtr& algebra);

/// A square root of a, when one exists in L. Decided per irreducible
/// component by factoring the norm of (y - s beta)^2 - a over Q. On each
/// component the root with positive first nonzero coordinate is returned.
std::optional<AlgElement> sqrt_in_algebra(const AlgElement& a);

}  // namespace ait
