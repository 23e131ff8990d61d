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

#include "ait/hyperelliptic.hpp"

namespace ait {

bool curve_check(const BinaryForm& f) { return f.degree() >= 1 && f.is_nondegenerate(); }

bool on_curve(const BinaryForm& f, const CurvePoint& p) { return p.v * p.v == f(p.u, 1); }

OrbitParam point_to_orbit(const BinaryForm& f, const CurvePoint& p) {
  if (!curve_check(f)) throw DomainError("curve is singular: Delta(f) = 0 or f_0 = 0");
  if (!on_curve(f, p)) throw DomainError("point is not on the curve: v^2 != f(u, 1)");
  if (p.v == 0) throw DomainError("Weierstrass point (v = 0) has no orbit");
  const AlgebraPtr L = algebra_of(f);
  OrbitParam out{L->scalar(p.u) - L->beta(), p.v};
  check_orbit_param(f, out);
  return out;
}

}  // namespace ait
