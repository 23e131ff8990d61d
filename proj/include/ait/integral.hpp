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
#include <vector>

#include "ait/binary_form.hpp"
#include "ait/etale.hpp"
#include "ait/matrix.hpp"
#include "ait/pencil.hpp"

namespace ait {

/// The order R_f = Z<1, zeta_1, ..., zeta_{n-1}> inside L = Q[theta], theta a
/// root of f(x, 1), with zeta_k = f_0 theta^k + f_1 theta^{k-1} + ... + f_{k-1} theta.
class Order {
 public:
  /// f integral with f_0 != 0 and Delta(f) != 0.
  static std::shared_ptr<const Order> make(const BinaryForm& f);

  const BinaryForm& form() const { return f_; }
  const AlgebraPtr& algebra() const { return algebra_; }
  int degree() const { return algebra_->degree(); }

  /// zeta_k as an element of L; zeta_0 = 1.
  const AlgElement& zeta(int k) const { return zetas_[static_cast<std::size_t>(k)]; }
  /// Coordinates of x in the zeta basis.
  std::vector<Rational> coordinates(const AlgElement& x) const;
  AlgElement element(const std::vector<Rational>& coords) const;
  bool contains(const AlgElement& x) const;

  /// c[i][j][k] with zeta_i zeta_j = sum_k c[i][j][k] zeta_k.
  const std::vector<std::vector<std::vector<Integer>>>& structure_constants() const { return table_; }

 private:
  explicit Order(const BinaryForm& f);
  BinaryForm f_;
  AlgebraPtr algebra_;
  std::vector<AlgElement> zetas_;
  RatMatrix to_zeta_;  // power coordinates -> zeta coordinates
  std::vector<std::vector<std::vector<Integer>>> table_;
};

using OrderPtr = std::shared_ptr<const Order>;

OrderPtr rf_structure(const BinaryForm& f);

/// det(Tr(zeta_i zeta_j)).
Integer order_disc(const Order& R);

/// Fractional ideal (1/denominator) * lattice in zeta coordinates, with an
/// orientation sign. The basis returned by basis() has determinant of sign
/// orientation relative to the zeta basis.
class OrientedIdeal {
 public:
  /// Lattice spanned by the given elements of L; throws unless they span L.
  OrientedIdeal(OrderPtr order, const std::vector<AlgElement>& generators, int orientation);

  const OrderPtr& order() const { return order_; }
  const Integer& denominator() const { return denominator_; }
  const IntLattice& lattice() const { return lattice_; }
  int orientation() const { return orientation_; }

  /// Z-basis rows in zeta coordinates (HNF divided by the denominator).
  std::vector<std::vector<Rational>> basis_coordinates() const;
  std::vector<AlgElement> basis() const;
  /// Oriented norm: orientation * [R_f : I] (a rational number).
  Rational norm() const;
  bool contains(const AlgElement& x) const;
  /// R_f I is contained in I.
  bool is_module() const;

  friend bool operator==(const OrientedIdeal& a, const OrientedIdeal& b) {
    return a.denominator_ == b.denominator_ && a.lattice_ == b.lattice_ &&
           a.orientation_ == b.orientation_;
  }

 private:
  OrderPtr order_;
  Integer denominator_;
  IntLattice lattice_;
  int orientation_;
};

/// I_f(k) with basis 1, theta, ..., theta^k, zeta_{k+1}, ..., zeta_{n-1}.
OrientedIdeal if_ideal(const OrderPtr& R, int k);
OrientedIdeal ideal_mul(const OrientedIdeal& I, const OrientedIdeal& J);
OrientedIdeal ideal_power(const OrientedIdeal& I, int k);
/// x I with orientation multiplied by the sign of N(x).
OrientedIdeal ideal_scale(const OrientedIdeal& I, const AlgElement& x);

struct WoodCheck {
  bool containment = false;
  bool norm_condition = false;
  bool valid() const { return containment && norm_condition; }
};

/// I^2 within alpha I_f(n-3), and N(I)^2 = N(alpha) / f_0^{n-3}.
WoodCheck wood_validity(const OrientedIdeal& I, const AlgElement& alpha);

/// Coefficients of zeta_{n-1} and zeta_{n-2} of b_i b_j / alpha in the
/// basis of I_f(n-3), over the basis b of I. Requires n >= 3.
SymPair wood_pair_to_matrices(const OrientedIdeal& I, const AlgElement& alpha);
/// Same, for an explicit Z-basis of I.
SymPair wood_pair_to_matrices(const OrientedIdeal& I, const AlgElement& alpha,
                              const std::vector<AlgElement>& basis);

/// (gamma, t) = (f_0 alpha, f_0^{n-1} N(I)).
OrbitParam integral_to_rational_params(const OrientedIdeal& I, const AlgElement& alpha);

/// Wood matrices of (I_f(1)^{(n-3)/2}, 1); n odd and >= 3.
SymPair canonical_odd_orbit(const BinaryForm& f);

struct DifferentReport {
  bool containment = false;  // R_f inside (1/f'(theta)) I_f(n-2)
  Integer index;             // [(1/f'(theta)) I_f(n-2) : R_f]
  Rational norm;             // oriented norm of the inverse different
  bool pairing_matches = false;
};

DifferentReport inverse_different_check(const BinaryForm& f);

}  // namespace ait
