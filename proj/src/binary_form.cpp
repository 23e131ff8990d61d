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

#include "ait/binary_form.hpp"

#include <algorithm>
#include <sstream>

namespace ait {

BinaryForm::BinaryForm(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.size() < 2) throw DomainError("binary form needs degree at least 1");
}

bool BinaryForm::is_integral() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](const Rational& q) { return q.get_den() == 1; });
}

RatPoly BinaryForm::dehomogenized() const {
  std::vector<Rational> low_first(coeffs_.rbegin(), coeffs_.rend());
  return RatPoly(std::move(low_first));
}

RatPoly BinaryForm::monic_part() const {
  if (leading() == 0) throw DomainError("leading coefficient f0 is zero (root at infinity)");
  return dehomogenized().monic();
}

Rational BinaryForm::operator()(const Rational& x, const Rational& y) const {
  Rational acc = 0;
  Rational ypow = 1;
  // Horner in x with y powers accumulated from the tail.
  const int n = degree();
  std::vector<Rational> ypows(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) {
    ypows[static_cast<std::size_t>(i)] = ypow;
    ypow *= y;
  }
  for (int i = 0; i <= n; ++i) acc = acc * x + coeffs_[static_cast<std::size_t>(i)] * ypows[static_cast<std::size_t>(i)];
  return acc;
}

Rational BinaryForm::discriminant() const {
  if (leading() == 0) {
    throw DomainError("discriminant with f0 = 0 is unsupported (root at infinity)");
  }
  return ait::discriminant(dehomogenized());
}

bool BinaryForm::is_nondegenerate() const { return leading() != 0 && discriminant() != 0; }

std::string BinaryForm::str() const {
  std::ostringstream os;
  const int n = degree();
  bool first = true;
  for (int i = 0; i <= n; ++i) {
    const Rational& c = coeffs_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    os << (first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + "));
    first = false;
    const Rational mag = abs(c);
    const int ex = n - i, ey = i;
    if (mag != 1 || (ex == 0 && ey == 0)) os << to_string(mag);
    if (ex > 0) os << (mag != 1 ? "*" : "") << "x" << (ex > 1 ? "^" + std::to_string(ex) : "");
    if (ey > 0) os << ((mag != 1 || ex > 0) ? "*" : "") << "y" << (ey > 1 ? "^" + std::to_string(ey) : "");
  }
  return first ? "0" : os.str();
}

}  // namespace ait
