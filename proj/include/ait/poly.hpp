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
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "ait/rational.hpp"

namespace ait {

/// Dense univariate polynomial over Q, coefficients stored low degree first.
/// The zero polynomial has no coefficients and degree -1.
class RatPoly {
 public:
  RatPoly() = default;
  explicit RatPoly(std::vector<Rational> coeffs);
  RatPoly(std::initializer_list<Rational> coeffs);
  static RatPoly constant(const Rational& c);
  static RatPoly monomial(const Rational& c, int degree);
  /// x - r
  static RatPoly linear_root(const Rational& r);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  /// Coefficient of x^i, zero beyond the degree.
  Rational operator[](int i) const;
  Rational leading() const;

  Rational operator()(const Rational& x) const;
  RatPoly derivative() const;
  RatPoly monic() const;
  RatPoly operator-() const;
  RatPoly scaled(const Rational& c) const;
  /// Evaluation at another polynomial, p(q(x)).
  RatPoly compose(const RatPoly& q) const;

  RatPoly& operator+=(const RatPoly& o);
  RatPoly& operator-=(const RatPoly& o);
  RatPoly& operator*=(const RatPoly& o);

  friend RatPoly operator+(RatPoly a, const RatPoly& b) { return a += b; }
  friend RatPoly operator-(RatPoly a, const RatPoly& b) { return a -= b; }
  friend RatPoly operator*(RatPoly a, const RatPoly& b) { return a *= b; }
  friend bool operator==(const RatPoly& a, const RatPoly& b) = default;

  std::string str(char var = 'x') const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const RatPoly& p);

/// Quotient and remainder; divisor must be nonzero.
std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b);
RatPoly operator/(const RatPoly& a, const RatPoly& b);
RatPoly operator%(const RatPoly& a, const RatPoly& b);

/// Monic gcd (zero when both inputs are zero).
RatPoly gcd(const RatPoly& a, const RatPoly& b);

struct ExtendedGcd {
  RatPoly gcd;  // monic
  RatPoly s;
  RatPoly t;  // s*a + t*b = gcd
};
ExtendedGcd extended_gcd(const RatPoly& a, const RatPoly& b);

/// Resultant by the subresultant pseudo-remainder sequence.
Rational resultant(const RatPoly& p, const RatPoly& q);

/// (-1)^{n(n-1)/2} Res(p, p') / lc(p)
Rational discriminant(const RatPoly& p);

bool is_squarefree(const RatPoly& p);

/// Yun's algorithm: monic squarefree parts with multiplicities, p = lc * prod s_i^{m_i}.
std::vector<std::pair<RatPoly, int>> squarefree_decomposition(const RatPoly& p);

/// Number of distinct real roots, by Sturm sequences. Requires p squarefree.
int real_root_count(const RatPoly& p);

/// Multiply through by a positive integer to clear denominators, then divide
/// by the content; the result has integer coefficients with gcd 1 and the
/// same sign of leading coefficient.
RatPoly primitive_integer_part(const RatPoly& p);

}  // namespace ait
