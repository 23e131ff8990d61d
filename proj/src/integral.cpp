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

#include "ait/integral.hpp"

#include <algorithm>

namespace ait {

namespace {

int sign_of(const Rational& q) { return q < 0 ? -1 : 1; }

}  // namespace

Order::Order(const BinaryForm& f) : f_(f), algebra_(make_algebra(f.monic_part())) {
  const int n = algebra_->degree();
  RatMatrix z(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    RatPoly p;
    if (k == 0) {
      p = RatPoly::constant(1);
    } else {
      for (int j = 0; j < k; ++j) p += RatPoly::monomial(f[j], k - j);
    }
    zetas_.push_back(algebra_->from_poly(p));
    for (int i = 0; i < n; ++i) {
      z(static_cast<std::size_t>(i), static_cast<std::size_t>(k)) = zetas_.back().coords()[static_cast<std::size_t>(i)];
    }
  }
  to_zeta_ = inverse(z);

  table_.assign(static_cast<std::size_t>(n), std::vector<std::vector<Integer>>(static_cast<std::size_t>(n)));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (const auto& c : coordinates(zeta(i) * zeta(j))) {
        if (c.get_den() != 1) throw DomainError("internal: non-integral structure constant in R_f");
        table_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)].push_back(c.get_num());
      }
    }
  }
}

std::shared_ptr<const Order> Order::make(const BinaryForm& f) {
  if (!f.is_integral()) throw DomainError("R_f needs an integral form");
  if (!f.is_nondegenerate()) throw DomainError("R_f needs f_0 != 0 and Delta(f) != 0");
  return std::shared_ptr<const Order>(new Order(f));
}

OrderPtr rf_structure(const BinaryForm& f) { return Order::make(f); }

std::vector<Rational> Order::coordinates(const AlgElement& x) const { return to_zeta_ * x.coords(); }

AlgElement Order::element(const std::vector<Rational>& coords) const {
  if (static_cast<int>(coords.size()) != degree()) throw DomainError("wrong number of coordinates");
  AlgElement x = algebra_->zero();
  for (int k = 0; k < degree(); ++k) x += zeta(k).scaled(coords[static_cast<std::size_t>(k)]);
  return x;
}

bool Order::contains(const AlgElement& x) const {
  for (const auto& c : coordinates(x)) {
    if (c.get_den() != 1) return false;
  }
  return true;
}

Integer order_disc(const Order& R) {
  const auto n = static_cast<std::size_t>(R.degree());
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      m(i, j) = (R.zeta(static_cast<int>(i)) * R.zeta(static_cast<int>(j))).trace();
    }
  }
  const Rational d = determinant(m);
  if (d.get_den() != 1) throw DomainError("internal: non-integral discriminant");
  return d.get_num();
}

// ---------------------------------------------------------------------------

OrientedIdeal::OrientedIdeal(OrderPtr order, const std::vector<AlgElement>& generators, int orientation)
    : order_(std::move(order)), orientation_(orientation < 0 ? -1 : 1) {
  const auto n = static_cast<std::size_t>(order_->degree());
  std::vector<std::vector<Rational>> rows;
  std::vector<Rational> all;
  for (const auto& g : generators) {
    rows.push_back(order_->coordinates(g));
    all.insert(all.end(), rows.back().begin(), rows.back().end());
  }
  denominator_ = lcm_of_denominators(all);
  std::vector<std::vector<Integer>> ints;
  for (const auto& r : rows) {
    std::vector<Integer> v;
    for (const auto& c : r) v.push_back(Rational(c * denominator_).get_num());
    ints.push_back(std::move(v));
  }
  lattice_ = hnf(ints, n);
  if (lattice_.rank() != n) throw DomainError("ideal generators do not span L");
  // remove a common factor shared by the denominator and the lattice
  Integer content = denominator_;
  for (const auto& r : lattice_.basis()) {
    for (const auto& c : r) content = gcd(content, c);
  }
  if (content != 1) {
    auto basis = lattice_.basis();
    for (auto& r : basis) {
      for (auto& c : r) c /= content;
    }
    lattice_ = hnf(basis, n);
    denominator_ /= content;
  }
}

std::vector<std::vector<Rational>> OrientedIdeal::basis_coordinates() const {
  std::vector<std::vector<Rational>> out;
  for (const auto& r : lattice_.basis()) {
    std::vector<Rational> v;
    for (const auto& c : r) v.push_back(make_rational(c, denominator_));
    out.push_back(std::move(v));
  }
  if (orientation_ < 0) {
    for (auto& c : out.front()) c = -c;
  }
  return out;
}

std::vector<AlgElement> OrientedIdeal::basis() const {
  std::vector<AlgElement> out;
  for (const auto& r : basis_coordinates()) out.push_back(order_->element(r));
  return out;
}

Rational OrientedIdeal::norm() const {
  const auto n = static_cast<unsigned long>(order_->degree());
  return make_rational(lattice_.index() * orientation_, pow(denominator_, n));
}

bool OrientedIdeal::contains(const AlgElement& x) const {
  std::vector<Integer> v;
  for (const auto& c : order_->coordinates(x)) {
    const Rational s = c * denominator_;
    if (s.get_den() != 1) return false;
    v.push_back(s.get_num());
  }
  return lattice_.contains(v);
}

bool OrientedIdeal::is_module() const {
  for (int k = 0; k < order_->degree(); ++k) {
    for (const auto& b : basis()) {
      if (!contains(order_->zeta(k) * b)) return false;
    }
  }
  return true;
}

namespace {

std::vector<AlgElement> if_generators(const Order& R, int k) {
  std::vector<AlgElement> gens;
  const AlgebraPtr& L = R.algebra();
  for (int j = 0; j <= k; ++j) gens.push_back(L->beta().pow(j));
  for (int j = k + 1; j < R.degree(); ++j) gens.push_back(R.zeta(j));
  return gens;
}

int generator_orientation(const Order& R, const std::vector<AlgElement>& gens) {
  const auto n = static_cast<std::size_t>(R.degree());
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto c = R.coordinates(gens[i]);
    for (std::size_t j = 0; j < n; ++j) m(i, j) = c[j];
  }
  const Rational d = determinant(m);
  if (d == 0) throw DomainError("basis is degenerate");
  return sign_of(d);
}

void require_same_order(const OrientedIdeal& I, const OrientedIdeal& J) {
  if (I.order() != J.order() && !(I.order()->form() == J.order()->form())) {
    throw DomainError("ideals of different orders");
  }
}

}  // namespace

OrientedIdeal if_ideal(const OrderPtr& R, int k) {
  if (k < 0 || k >= R->degree()) throw DomainError("I_f(k) needs 0 <= k <= n-1");
  const auto gens = if_generators(*R, k);
  return OrientedIdeal(R, gens, generator_orientation(*R, gens));
}

OrientedIdeal ideal_mul(const OrientedIdeal& I, const OrientedIdeal& J) {
  require_same_order(I, J);
  std::vector<AlgElement> products;
  for (const auto& a : I.basis()) {
    for (const auto& b : J.basis()) products.push_back(a * b);
  }
  return OrientedIdeal(I.order(), products, I.orientation() * J.orientation());
}

OrientedIdeal ideal_power(const OrientedIdeal& I, int k) {
  if (k < 0) throw DomainError("negative ideal powers are not supported");
  OrientedIdeal r = if_ideal(I.order(), 0);
  for (int i = 0; i < k; ++i) r = ideal_mul(r, I);
  return r;
}

OrientedIdeal ideal_scale(const OrientedIdeal& I, const AlgElement& x) {
  const Rational nx = x.norm();
  if (nx == 0) throw DomainError("cannot scale an ideal by a zero divisor");
  std::vector<AlgElement> gens;
  for (const auto& b : I.basis()) gens.push_back(x * b);
  return OrientedIdeal(I.order(), gens, I.orientation() * sign_of(nx));
}

// ---------------------------------------------------------------------------

namespace {

struct IfBasis {
  RatMatrix inverse;  // power coordinates -> coordinates in the I_f(n-3) basis
};

IfBasis if_basis(const Order& R, int k) {
  const auto gens = if_generators(R, k);
  const auto n = static_cast<std::size_t>(R.degree());
  RatMatrix m(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) m(i, j) = gens[j].coords()[i];
  }
  return {inverse(m)};
}

void require_wood_degree(const Order& R) {
  if (R.degree() < 3) throw DomainError("Wood parametrization needs n >= 3");
}

bool all_integral(const std::vector<Rational>& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& q) { return q.get_den() == 1; });
}

}  // namespace

WoodCheck wood_validity(const OrientedIdeal& I, const AlgElement& alpha) {
  const Order& R = *I.order();
  require_wood_degree(R);
  WoodCheck w;
  if (!alpha.is_invertible()) return w;
  const int n = R.degree();
  const IfBasis J = if_basis(R, n - 3);
  const AlgElement inv = alpha.inverse();
  const auto b = I.basis();
  w.containment = true;
  for (std::size_t i = 0; i < b.size() && w.containment; ++i) {
    for (std::size_t j = i; j < b.size(); ++j) {
      if (!all_integral(J.inverse * (b[i] * b[j] * inv).coords())) {
        w.containment = false;
        break;
      }
    }
  }
  const Rational nI = I.norm();
  w.norm_condition = nI * nI == alpha.norm() / pow(R.form().leading(), n - 3);
  return w;
}

SymPair wood_pair_to_matrices(const OrientedIdeal& I, const AlgElement& alpha) {
  return wood_pair_to_matrices(I, alpha, I.basis());
}

SymPair wood_pair_to_matrices(const OrientedIdeal& I, const AlgElement& alpha,
                              const std::vector<AlgElement>& basis) {
  const Order& R = *I.order();
  require_wood_degree(R);
  const auto n = static_cast<std::size_t>(R.degree());
  if (basis.size() != n || !(OrientedIdeal(I.order(), basis, I.orientation()).lattice() == I.lattice()) ||
      OrientedIdeal(I.order(), basis, I.orientation()).denominator() != I.denominator()) {
    throw DomainError("supplied elements are not a Z-basis of the ideal");
  }
  if (!alpha.is_invertible()) throw DomainError("alpha must be a unit");
  const IfBasis J = if_basis(R, static_cast<int>(n) - 3);
  const AlgElement inv = alpha.inverse();
  RatMatrix A(n, n), B(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      const auto c = J.inverse * (basis[i] * basis[j] * inv).coords();
      if (!all_integral(c)) {
        throw DomainError("containment I^2 in alpha I_f(n-3) fails at b_" + std::to_string(i) + " b_" +
                          std::to_string(j));
      }
      A(i, j) = A(j, i) = c[n - 1];
      B(i, j) = B(j, i) = c[n - 2];
    }
  }
  const Rational nI = I.norm();
  if (nI * nI != alpha.norm() / pow(R.form().leading(), static_cast<long>(n) - 3)) {
    throw DomainError("norm condition N(I)^2 = N(alpha) / f_0^{n-3} fails");
  }
  SymPair v(A, B);
  if (!(invariant_binary_form(v) == R.form())) {
    throw DomainError("internal: Wood matrices have the wrong invariant form");
  }
  return v;
}

OrbitParam integral_to_rational_params(const OrientedIdeal& I, const AlgElement& alpha) {
  const BinaryForm& f = I.order()->form();
  const Rational f0 = f.leading();
  return OrbitParam{alpha.scaled(f0), pow(f0, f.degree() - 1) * I.norm()};
}

SymPair canonical_odd_orbit(const BinaryForm& f) {
  const int n = f.degree();
  if (n % 2 == 0 || n < 3) throw DomainError("no canonical orbit: n must be odd and >= 3");
  const OrderPtr R = rf_structure(f);
  const OrientedIdeal I = ideal_power(if_ideal(R, 1), (n - 3) / 2);
  return wood_pair_to_matrices(I, R->algebra()->one());
}

DifferentReport inverse_different_check(const BinaryForm& f) {
  const OrderPtr R = rf_structure(f);
  const int n = R->degree();
  if (n < 2) throw DomainError("inverse different needs n >= 2");
  const AlgElement fprime = R->algebra()->from_poly(f.dehomogenized().derivative());
  const AlgElement inv = fprime.inverse();
  const OrientedIdeal D = ideal_scale(if_ideal(R, n - 2), inv);

  DifferentReport rep;
  rep.containment = true;
  for (int k = 0; k < n; ++k) rep.containment = rep.containment && D.contains(R->zeta(k));
  rep.norm = D.norm();
  const Rational index = 1 / abs(rep.norm);
  if (index.get_den() != 1) throw DomainError("internal: R_f index in the inverse different is not integral");
  rep.index = index.get_num();

  rep.pairing_matches = true;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const AlgElement x = R->zeta(i) * R->zeta(j);
      if ((x * inv).trace() != R->coordinates(x)[static_cast<std::size_t>(n - 1)]) rep.pairing_matches = false;
    }
  }
  return rep;
}

}  // namespace ait
