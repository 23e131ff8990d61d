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

#include <string>
#include <vector>

#include "ait/poly.hpp"

namespace ait {

/// f(x, y) = f_0 x^n + f_1 x^{n-1} y + ... + f_n y^n.
class BinaryForm {
 public:
  BinaryForm() = default;
  /// Coefficients in the order f_0, ..., f_n; at least two entries.
  explicit BinaryForm(std::vector<Rational> coeffs);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  const Rational& operator[](int i) const { return coeffs_[static_cast<std::size_t>(i)]; }
  const Rational& leading() const { return coeffs_.front(); }
  bool is_integral() const;

  /// f(x, 1) as a polynomial in x.
  RatPoly dehomogenized() const;
  /// g(x) = f(x, 1) / f_0, monic; requires f_0 != 0.
  RatPoly monic_part() const;

  Rational operator()(const Rational& x, const Rational& y) const;

  /// Delta(f) = (-1)^{n(n-1)/2} Res(p, p') / f_0 with p = f(x, 1).
  /// Requires f_0 != 0.
  Rational discriminant() const;

  /// Delta(f) != 0 and f_0 != 0.
  bool is_nondegenerate() const;

  std::string str() const;
  friend bool operator==(const BinaryForm& a, const BinaryForm& b) = default;

 private:
  std::vector<Rational> coeffs_;
};

}  // namespace ait
