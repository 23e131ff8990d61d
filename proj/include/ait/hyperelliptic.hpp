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

#include "ait/binary_form.hpp"
#include "ait/pencil.hpp"

namespace ait {

/// Affine point (u, 1, v) on z^2 = f(x, y).
struct CurvePoint {
  Rational u;
  Rational v;

  CurvePoint negated() const { return {u, -v}; }
  friend bool operator==(const CurvePoint&, const CurvePoint&) = default;
};

/// Delta(f) != 0 and f_0 != 0.
bool curve_check(const BinaryForm& f);

bool on_curve(const BinaryForm& f, const CurvePoint& p);

/// (alpha, t) = (u - theta, v). Throws for Weierstrass points (v = 0) and for
/// points off the curve.
OrbitParam point_to_orbit(const BinaryForm& f, const CurvePoint& p);

}  // namespace ait
