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

#include "doctest.h"

#include "ait/integral.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace ait;
using ait::testing::P;

namespace {

BinaryForm form(std::initializer_list<long> f0_first) {
  std::vector<Rational> v;
  for (long c : f0_first) v.emplace_back(c);
  return BinaryForm(std::move(v));
}

BinaryForm random_integral_form(oracle::Rng& rng, int n, bool monic = false) {
  for (;;) {
    std::vector<Rational> c;
    c.emplace_back(monic ? 1 : rng.nonzero(-4, 4));
    for (int i = 1; i <= n; ++i) c.emplace_back(rng.integer(-5, 5));
    BinaryForm f(std::move(c));
    if (f.is_nondegenerate()) return f;
  }
}

// zeta_k as a polynomial in theta, expanded from the defining formula.
RatPoly zeta_poly(const BinaryForm& f, int k) {
  if (k == 0) return P({1});
  RatPoly p;
  for (int j = 0; j < k; ++j) p += RatPoly::monomial(f[j], k - j);
  return p;
}

}  // namespace

TEST_CASE("R_f basis and structure constants") {
  const BinaryForm f = form({2, 3, 5, 7});
  const OrderPtr R = rf_structure(f);
  CHECK(R->zeta(1).as_poly() == P({0, 2}));
  CHECK(R->zeta(2).as_poly() == P({0, 3, 2}));
  // zeta_1^2 = 4 theta^2 = 2 zeta_2 - 3 zeta_1
  const auto& c = R->structure_constants();
  CHECK(c[1][1] == std::vector<Integer>{0, -3, 2});

  const OrderPtr monic = rf_structure(form({1, 0, 0, 1}));
  CHECK(monic->zeta(1) == monic->algebra()->beta());
  CHECK(monic->zeta(2) == monic->algebra()->beta().pow(2));
  CHECK(monic->algebra()->beta().pow(3) == monic->algebra()->scalar(-1));

  CHECK_THROWS_AS(rf_structure(BinaryForm({Rational(1, 2), 0, 1})), DomainError);
  CHECK_THROWS_AS(rf_structure(form({1, -2, 1})), DomainError);

  oracle::Rng rng(31);
  for (int iter = 0; iter < 20; ++iter) {
    const BinaryForm h = random_integral_form(rng, static_cast<int>(rng.integer(2, 5)));
    const OrderPtr S = rf_structure(h);
    const RatPoly fx = h.dehomogenized();
    const int n = h.degree();
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        RatPoly rhs;
        for (int k = 0; k < n; ++k) {
          rhs += zeta_poly(h, k).scaled(Rational(S->structure_constants()[i][j][k]));
        }
        CHECK(((zeta_poly(h, i) * zeta_poly(h, j) - rhs) % fx).is_zero());
      }
    }
  }
}

TEST_CASE("discriminant of R_f") {
  CHECK(order_disc(*rf_structure(form({1, 0, 0, 1}))) == -27);
  CHECK(order_disc(*rf_structure(form({3, 5, -7}))) == 25 + 84);
  oracle::Rng rng(2);
  for (int iter = 0; iter < 30; ++iter) {
    const BinaryForm f = random_integral_form(rng, static_cast<int>(rng.integer(2, 5)));
    CHECK(Rational(order_disc(*rf_structure(f))) == f.discriminant());
  }
}

TEST_CASE("ideals I_f(k)") {
  oracle::Rng rng(17);
  for (int iter = 0; iter < 12; ++iter) {
    const int n = static_cast<int>(rng.integer(2, 6));
    const BinaryForm f = random_integral_form(rng, n);
    const OrderPtr R = rf_structure(f);
    const OrientedIdeal I0 = if_ideal(R, 0);
    CHECK(I0.norm() == 1);
    CHECK(I0.lattice().index() == 1);
    const OrientedIdeal I1 = if_ideal(R, 1);
    for (int k = 0; k < n; ++k) {
      const OrientedIdeal Ik = if_ideal(R, k);
      CHECK(Ik.norm() == 1 / pow(f.leading(), k));
      CHECK(Ik.is_module());
      CHECK(ideal_power(I1, k) == Ik);
    }
    CHECK_THROWS_AS(if_ideal(R, n), DomainError);
  }
}

TEST_CASE("Wood matrices for x^3 + y^3") {
  const BinaryForm f = form({1, 0, 0, 1});
  const OrderPtr R = rf_structure(f);
  const OrientedIdeal I = if_ideal(R, 0);
  const SymPair v = wood_pair_to_matrices(I, R->algebra()->one());
  CHECK(v.A == RatMatrix::antidiagonal(3));
  CHECK(v.B == RatMatrix{{0, 1, 0}, {1, 0, 0}, {0, 0, -1}});
  CHECK(canonical_odd_orbit(f) == v);
  CHECK(wood_validity(I, R->algebra()->one()).valid());

  const OrbitParam p = integral_to_rational_params(I, R->algebra()->one());
  CHECK(p.alpha == R->algebra()->one());
  CHECK(p.t == 1);

  CHECK_FALSE(wood_validity(I, R->algebra()->scalar(2)).containment);
  CHECK_THROWS_AS(wood_pair_to_matrices(I, R->algebra()->scalar(2)), DomainError);
  CHECK_THROWS_AS(canonical_odd_orbit(form({1, 0, 0, 0, 1})), DomainError);
}

TEST_CASE("canonical odd orbits and the rational dictionary") {
  oracle::Rng rng(12);
  for (int iter = 0; iter < 12; ++iter) {
    const int n = iter % 3 == 0 ? 5 : 3;
    const BinaryForm f = random_integral_form(rng, n, iter % 2 == 0);
    const SymPair v = canonical_odd_orbit(f);
    CHECK(v.A.is_integral());
    CHECK(v.B.is_integral());
    CHECK(invariant_binary_form(v) == f);

    const OrderPtr R = rf_structure(f);
    const OrientedIdeal I = ideal_power(if_ideal(R, 1), (n - 3) / 2);
    const OrbitParam gt = integral_to_rational_params(I, R->algebra()->one());
    const Rational f0 = f.leading();
    CHECK(gt.alpha == R->algebra()->scalar(f0));
    CHECK(gt.t == pow(f0, (n + 1) / 2));
    const OrbitParam q = pencil_to_param(v);
    auto c = g_equivalent(q, gt);
    REQUIRE(c);
    CHECK(*c * *c * gt.alpha == q.alpha);
    CHECK(c->norm() * gt.t == q.t);
  }
}

TEST_CASE("rebasing the ideal acts by congruence") {
  oracle::Rng rng(4);
  for (int iter = 0; iter < 8; ++iter) {
    const BinaryForm f = random_integral_form(rng, 3);
    const OrderPtr R = rf_structure(f);
    const OrientedIdeal I = if_ideal(R, 0);
    const AlgElement one = R->algebra()->one();
    const auto b = I.basis();
    const RatMatrix U = rng.unimodular(3, 5);
    std::vector<AlgElement> b2;
    for (std::size_t i = 0; i < 3; ++i) {
      AlgElement x = R->algebra()->zero();
      for (std::size_t k = 0; k < 3; ++k) x += b[k].scaled(U(i, k));
      b2.push_back(x);
    }
    const SymPair v = wood_pair_to_matrices(I, one);
    const SymPair w = wood_pair_to_matrices(I, one, b2);
    CHECK(w == v.transformed(U.transpose()));
  }
}

TEST_CASE("inverse different") {
  DifferentReport r = inverse_different_check(form({1, 0, 0, 1}));
  CHECK(r.containment);
  CHECK(r.index == 27);
  CHECK(r.pairing_matches);

  for (long d : {2L, 3L, -5L, 7L}) {
    r = inverse_different_check(form({1, 0, -d}));
    CHECK(r.index == abs(Integer(4 * d)));
  }

  oracle::Rng rng(6);
  for (int iter = 0; iter < 15; ++iter) {
    const int n = static_cast<int>(rng.integer(2, 5));
    const BinaryForm f = random_integral_form(rng, n);
    r = inverse_different_check(f);
    CHECK(r.containment);
    CHECK(r.pairing_matches);
    CHECK(Rational(r.index) == abs(f.discriminant()));
    const int sgn = (n * (n - 1) / 2) % 2 == 0 ? 1 : -1;
    CHECK(r.norm == sgn / f.discriminant());
  }
}
