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

#include "ait/quadspace.hpp"
#include "oracles.hpp"

using namespace ait;

namespace {

QuadForm diag(std::initializer_list<long> entries) {
  std::vector<Rational> v;
  for (long c : entries) v.emplace_back(c);
  return QuadForm::diagonal(v);
}

long random_squarefree(oracle::Rng& rng, long lo, long hi) {
  for (;;) {
    const long a = rng.nonzero(lo, hi);
    if (squarefree_part(Rational(a)) == a) return a;
  }
}

const std::vector<long> kSmallPrimes{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47};

}  // namespace

TEST_CASE("diagonalization") {
  const Diagonalization I = diagonalize(diag({1, 1, 1}));
  CHECK(I.entries == std::vector<Integer>{1, 1, 1});
  CHECK(I.transform == RatMatrix::identity(3));

  const QuadForm hyp(RatMatrix{{0, 1}, {1, 0}});
  const Diagonalization H = diagonalize(hyp);
  CHECK(squarefree_part(Rational(H.entries[0] * H.entries[1])) == -1);
  CHECK(forms_equivalent(hyp, diag({1, -1})));

  CHECK_THROWS_AS(diagonalize(QuadForm(RatMatrix{{1, 1}, {1, 1}})), DomainError);

  oracle::Rng rng(14);
  for (int iter = 0; iter < 30; ++iter) {
    const auto n = static_cast<std::size_t>(rng.integer(1, 5));
    RatMatrix g(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i; j < n; ++j) g(i, j) = g(j, i) = rng.rational(-5, 5, 3);
    }
    if (determinant(g) == 0) continue;
    const Diagonalization D = diagonalize(QuadForm(g));
    std::vector<Rational> d(D.entries.begin(), D.entries.end());
    CHECK(congruence(g, D.transform) == RatMatrix::diagonal(d));
    for (const auto& e : D.entries) CHECK(squarefree_part(Rational(e)) == e);
  }
}

TEST_CASE("Hilbert symbol examples") {
  CHECK(hilbert_symbol(-1, -1, Place::infinity()) == -1);
  CHECK(hilbert_symbol(-1, -1, Place::prime(2)) == -1);
  CHECK(hilbert_symbol(2, 3, Place::prime(3)) == -1);
  CHECK(hilbert_symbol(Rational(2, 9), Rational(12), Place::prime(3)) == -1);
  CHECK(hilbert_symbol(1, -7, Place::prime(7)) == 1);
}

TEST_CASE("Hilbert symbols agree with local solvability search") {
  oracle::Rng rng(29);
  for (int iter = 0; iter < 40; ++iter) {
    const long a = random_squarefree(rng, -60, 60), b = random_squarefree(rng, -60, 60);
    for (long p : kSmallPrimes) {
      if (p > 23 && (a % p != 0 && b % p != 0)) continue;
      CHECK_MESSAGE(hilbert_symbol(a, b, Place::prime(p)) == (oracle::local_solvable(a, b, p) ? 1 : -1),
                    "a=" << a << " b=" << b << " p=" << p);
    }
  }
}

TEST_CASE("Hilbert reciprocity") {
  oracle::Rng rng(30);
  for (int iter = 0; iter < 100; ++iter) {
    const Rational a = rng.rational(-200, 200, 30), b = rng.rational(-200, 200, 30);
    if (a == 0 || b == 0) continue;
    int prod = 1;
    for (const auto& v : relevant_places(QuadForm::diagonal({a, b}))) prod *= hilbert_symbol(a, b, v);
    CHECK(prod == 1);
  }
}

TEST_CASE("isotropy decisions and witnesses") {
  CHECK(is_isotropic(diag({1, 1, -1})));
  CHECK_FALSE(is_isotropic(diag({1, 1, 1})));
  CHECK_FALSE(is_isotropic(diag({1, 1, -7})));
  CHECK_FALSE(isotropic_vector(diag({1, 1, -7}), 60).has_value());
  CHECK_FALSE(is_locally_isotropic(diag({1, 1, -7}), Place::prime(7)));
  CHECK(is_locally_isotropic(diag({1, 1, -7}), Place::prime(3)));
  CHECK(is_locally_isotropic(diag({1, 1, -7}), Place::infinity()));

  const std::vector<QuadForm> suite{
      diag({1, 1, -1}),  diag({1, 1, 1}),     diag({1, 1, -7}),   diag({1, -2}),        diag({1, -4}),
      diag({2, 3, -5}),  diag({1, 1, -3}),    diag({3, 5, -7}),   diag({1, 1, 1, -1}),  diag({1, 1, 1, -7}),
      diag({1, 1, 1, 1}), diag({2, 3, 5, -30}), diag({1, 1, 1, 1, -1}), diag({1, 2, -3}), diag({5, -7, 11}),
      diag({1, -1}),     diag({-1, -1, -1}),  diag({3, -11, 13}), diag({1, 3, -5, -15}), diag({7, 11, -13})};
  int isotropic = 0;
  for (const auto& q : suite) {
    const bool iso = is_isotropic(q);
    const auto x = isotropic_vector(q, 40);
    if (x) CHECK(q(*x) == 0);
    CHECK_MESSAGE(iso == x.has_value(), q.gram());
    isotropic += iso ? 1 : 0;
  }
  CHECK(isotropic > 5);
  CHECK(isotropic < 18);
}

TEST_CASE("equivalence of forms") {
  CHECK(forms_equivalent(diag({1, 1}), diag({2, 2})));
  CHECK_FALSE(forms_equivalent(diag({1, 1}), diag({1, 2})));
  CHECK_FALSE(forms_equivalent(diag({1, 1}), diag({-1, -1})));
  CHECK_FALSE(forms_equivalent(diag({1, 1, 1}), diag({1, 3, 3})));  // Hasse invariant differs at 3
  CHECK(forms_equivalent(diag({1, 1, 1}), diag({2, 3, 6})));

  oracle::Rng rng(40);
  std::vector<QuadForm> forms;
  for (int iter = 0; iter < 12; ++iter) {
    const auto n = static_cast<std::size_t>(rng.integer(1, 4));
    std::vector<Rational> d;
    for (std::size_t i = 0; i < n; ++i) d.emplace_back(rng.nonzero(-6, 6));
    const QuadForm q = QuadForm::diagonal(d);
    const QuadForm moved(congruence(q.gram(), rng.unimodular(n, 6)));
    CHECK(forms_equivalent(q, moved));
    CHECK(forms_equivalent(moved, q));
    forms.push_back(q);
  }
  for (const auto& a : forms) {
    for (const auto& b : forms) {
      for (const auto& c : forms) {
        if (forms_equivalent(a, b) && forms_equivalent(b, c)) CHECK(forms_equivalent(a, c));
      }
    }
  }
}

TEST_CASE("Gram invariant") {
  const QuadForm W = diag({1, 1, 1, 1});
  CHECK(gram_invariant(W, RatMatrix(4, 3)).gram() == RatMatrix(3, 3));
  RatMatrix e(4, 3);
  for (std::size_t i = 0; i < 3; ++i) e(i, i) = 1;
  CHECK(gram_invariant(W, e) == diag({1, 1, 1}));

  oracle::Rng rng(50);
  for (int iter = 0; iter < 15; ++iter) {
    RatMatrix G(4, 4), vec(4, 3);
    for (std::size_t i = 0; i < 4; ++i) {
      for (std::size_t j = i; j < 4; ++j) G(i, j) = G(j, i) = rng.integer(-3, 3);
      for (std::size_t j = 0; j < 3; ++j) vec(i, j) = rng.integer(-3, 3);
    }
    const QuadForm space(G);
    const QuadForm f = gram_invariant(space, vec);
    for (int k = 0; k < 4; ++k) {
      const std::vector<Rational> x{rng.integer(-4, 4), rng.integer(-4, 4), rng.integer(-4, 4)};
      CHECK(f(x) == space(vec * x));
    }
  }
}

TEST_CASE("SO orbit target") {
  const QuadForm split = diag({1, -1, 1, -1});
  const OrbitTarget t1 = so_orbit_target(diag({1, 1, -1}), split);
  CHECK(t1.lifts);
  CHECK(t1.target.det() == split.det());
  const OrbitTarget t2 = so_orbit_target(diag({1, 1, 1}), split);
  CHECK_FALSE(t2.lifts);
  CHECK(t2.target.det() == split.det());
  CHECK_THROWS_AS(so_orbit_target(diag({1, 1}), split), DomainError);
}

TEST_CASE("spin obstruction") {
  BrauerClass2 b = spin_obstruction(diag({1, 1, 1}));
  REQUIRE(b.ramified.size() == 2);
  CHECK(b.ramified[0] == Place::prime(2));
  CHECK(b.ramified[1] == Place::infinity());
  CHECK(spin_obstruction(diag({1, 1, -1})).is_split());
  CHECK(spin_obstruction(diag({7})).is_split());
  CHECK_THROWS_AS(spin_obstruction(diag({1, 1})), DomainError);

  oracle::Rng rng(60);
  for (int iter = 0; iter < 30; ++iter) {
    const long a = random_squarefree(rng, -30, 30), c1 = random_squarefree(rng, -30, 30),
               c2 = random_squarefree(rng, -30, 30);
    const QuadForm q = diag({a, c1, c2});
    b = spin_obstruction(q);
    CHECK(b.ramified.size() % 2 == 0);
    // ternary: C+ is the quaternion algebra (-a c1, -a c2); split at p iff its norm form has a zero
    const long x = squarefree_part(Rational(-a * c1)).get_si(), y = squarefree_part(Rational(-a * c2)).get_si();
    for (const auto& v : relevant_places(q)) {
      const bool ramified = std::find(b.ramified.begin(), b.ramified.end(), v) != b.ramified.end();
      if (v.is_infinite()) {
        CHECK(ramified == (x < 0 && y < 0));
      } else {
        CHECK(ramified == !oracle::local_solvable(x, y, v.p.get_si()));
      }
    }
  }

  // higher odd dimension against the recursive Clifford decomposition
  for (int iter = 0; iter < 30; ++iter) {
    const int n = iter % 2 == 0 ? 5 : 7;
    std::vector<Rational> d;
    for (int i = 0; i < n; ++i) d.emplace_back(rng.nonzero(-12, 12));
    const QuadForm q = QuadForm::diagonal(d);
    b = spin_obstruction(q);
    CHECK(b.ramified.size() % 2 == 0);
    // C+(<a> + q0) = C(-a q0)
    std::vector<Rational> rest;
    for (int i = 1; i < n; ++i) rest.push_back(-d[0] * d[static_cast<std::size_t>(i)]);
    for (const auto& v : relevant_places(q)) {
      const int expected =
          oracle::clifford_symbol(rest, [&](const Rational& s, const Rational& t) { return hilbert_symbol(s, t, v); });
      const bool ramified = std::find(b.ramified.begin(), b.ramified.end(), v) != b.ramified.end();
      CHECK(ramified == (expected == -1));
    }
  }
}
