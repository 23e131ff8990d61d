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

#include <cmath>
#include <set>

#include "ait/binary_form.hpp"
#include "ait/enumerate.hpp"
#include "ait/factor.hpp"
#include "ait/matrix.hpp"
#include "ait/poly.hpp"
#include "oracles.hpp"

using namespace ait;

namespace {

RatPoly P(std::initializer_list<long> low_first) {
  std::vector<Rational> v;
  for (long c : low_first) v.emplace_back(c);
  return RatPoly(std::move(v));
}

BinaryForm F(std::initializer_list<long> coeffs) {
  std::vector<Rational> v;
  for (long c : coeffs) v.emplace_back(c);
  return BinaryForm(std::move(v));
}

}  // namespace

TEST_CASE("rational parsing and printing") {
  CHECK(parse_rational("6/4") == Rational(3, 2));
  CHECK(parse_rational("-7") == -7);
  CHECK(parse_rational(" 3/-6 ") == Rational(-1, 2));
  CHECK(to_string(Rational(-3, 2)) == "-3/2");
  CHECK(to_string(Rational(5)) == "5");
  CHECK_THROWS_AS(parse_rational("1/0"), DomainError);
  CHECK_THROWS_AS(parse_rational("abc"), DomainError);
  CHECK(squarefree_part(Rational(-18, 5)) == -10);
  CHECK(is_square(Rational(9, 4)));
  CHECK_FALSE(is_square(Rational(-1)));
}

TEST_CASE("resultant examples") {
  CHECK(resultant(P({-1, 1}), P({1, 1})) == 2);
  CHECK(resultant(P({1, 0, 1}), P({0, 1})) == 1);
  CHECK(resultant(P({-2, 0, 1}), P({-3, 0, 1})) == 1);
  CHECK_THROWS_AS(resultant(RatPoly{}, RatPoly{}), DomainError);
  CHECK(resultant(P({-1, 0, 1}), P({1, 2, 1})) == 0);  // common root -1
}

TEST_CASE("resultant agrees with Sylvester determinant and is antisymmetric") {
  oracle::Rng rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<Rational> a, b;
    const long da = rng.integer(1, 5), db = rng.integer(1, 5);
    for (long i = 0; i <= da; ++i) a.push_back(rng.rational(-6, 6, 3));
    for (long i = 0; i <= db; ++i) b.push_back(rng.rational(-6, 6, 3));
    a.back() = rng.nonzero(-4, 4);
    b.back() = rng.nonzero(-4, 4);
    RatPoly p(a), q(b);
    const Rational r = resultant(p, q);
    CHECK(r == oracle::sylvester_resultant(p, q));
    const Rational swapped = resultant(q, p);
    CHECK(r == ((p.degree() * q.degree()) % 2 == 0 ? swapped : Rational(-swapped)));
    CHECK((r == 0) == (gcd(p, q).degree() > 0));
  }
}

TEST_CASE("binary form discriminant") {
  // ax^2 + bxy + cy^2
  CHECK(F({3, 5, 7}).discriminant() == 25 - 4 * 3 * 7);
  CHECK(F({1, 0, -1, 0}).discriminant() == 4);
  CHECK(F({-1, 0, 1}).discriminant() == 4);
  CHECK_THROWS_AS(F({0, 1, 1}).discriminant(), DomainError);

  // cubic closed form b^2c^2 + 18abcd - 4ac^3 - 4b^3d - 27a^2d^2
  oracle::Rng rng(5);
  for (int t = 0; t < 40; ++t) {
    Rational a = rng.nonzero(-9, 9), b = rng.integer(-9, 9), c = rng.integer(-9, 9), d = rng.integer(-9, 9);
    BinaryForm f({a, b, c, d});
    CHECK(f.discriminant() ==
          b * b * c * c + 18 * a * b * c * d - 4 * a * c * c * c - 4 * b * b * b * d - 27 * a * a * d * d);
  }
}

TEST_CASE("binary discriminant matches the root product definition") {
  oracle::Rng rng(77);
  for (int t = 0; t < 40; ++t) {
    const int n = static_cast<int>(rng.integer(2, 5));
    Rational c = rng.nonzero(-3, 3);
    std::vector<std::pair<Rational, Rational>> roots;
    RatPoly p = RatPoly::constant(c);
    for (int i = 0; i < n; ++i) {
      Rational alpha = rng.nonzero(-4, 4), beta = rng.integer(-5, 5);
      roots.emplace_back(alpha, beta);
      p *= RatPoly({-beta, alpha});
    }
    std::vector<Rational> coeffs(p.coeffs().rbegin(), p.coeffs().rend());
    BinaryForm f(coeffs);
    CHECK(f.discriminant() == oracle::root_product_discriminant(c, roots));
  }
}

TEST_CASE("factorization examples") {
  auto x2m1 = factor_rational_poly(P({-1, 0, 1}));
  REQUIRE(x2m1.factors.size() == 2);
  CHECK(x2m1.factors[0].first == P({-1, 1}));
  CHECK(x2m1.factors[1].first == P({1, 1}));

  auto x3p1 = factor_rational_poly(P({1, 0, 0, 1}));
  REQUIRE(x3p1.factors.size() == 2);
  CHECK(x3p1.factors[0].first == P({1, 1}));
  CHECK(x3p1.factors[1].first == P({1, -1, 1}));

  auto x4p1 = factor_rational_poly(P({1, 0, 0, 0, 1}));
  REQUIRE(x4p1.factors.size() == 1);
  CHECK(x4p1.factors[0] == std::pair{P({1, 0, 0, 0, 1}), 1});
  CHECK_FALSE(oracle::kronecker_factor(P({1, 0, 0, 0, 1})).has_value());

  // repeated and rational-coefficient input
  RatPoly rep = P({-1, 1}) * P({-1, 1}) * P({2, 0, 1}).scaled(Rational(3, 2));
  auto fr = factor_rational_poly(rep);
  CHECK(fr.expand() == rep);
  REQUIRE(fr.factors.size() == 2);
  CHECK(fr.factors[0] == std::pair{P({-1, 1}), 2});
  CHECK(fr.unit == Rational(3, 2));

  // Swinnerton-Dyer style polynomial: x^4 - 10x^2 + 1 splits mod every prime
  auto sd = factor_rational_poly(P({1, 0, -10, 0, 1}));
  CHECK(sd.factors.size() == 1);
  CHECK_THROWS_AS(factor_rational_poly(RatPoly{}), DomainError);
}

TEST_CASE("factorization reproduces input and factors are irreducible") {
  oracle::Rng rng(2024);
  for (int t = 0; t < 60; ++t) {
    RatPoly p = RatPoly::constant(rng.nonzero(-5, 5));
    const int parts = static_cast<int>(rng.integer(1, 3));
    for (int i = 0; i < parts; ++i) {
      std::vector<Rational> c;
      const long d = rng.integer(1, 4);
      for (long k = 0; k < d; ++k) c.emplace_back(rng.integer(-5, 5));
      c.emplace_back(rng.nonzero(-3, 3));
      p *= RatPoly(c);
    }
    auto fac = factor_rational_poly(p);
    CHECK(fac.expand() == p);
    for (std::size_t i = 1; i < fac.factors.size(); ++i) {
      const auto& a = fac.factors[i - 1].first;
      const auto& b = fac.factors[i].first;
      CHECK(a.degree() <= b.degree());
    }
    for (const auto& [g, m] : fac.factors) {
      CHECK(g.leading() == 1);
      const RatPoly gi = primitive_integer_part(g);
      // modular degree patterns: an irreducible factor never has a proper
      // factor-degree common to every pattern unless Kronecker finds one
      std::vector<bool> possible(static_cast<std::size_t>(gi.degree()) + 1, true);
      int primes_used = 0;
      for (std::uint32_t prime : {101u, 103u, 107u, 109u, 113u, 127u}) {
        auto pat = degree_pattern_mod_p(gi, prime);
        if (pat.empty()) continue;
        ++primes_used;
        std::vector<bool> sums(possible.size(), false);
        sums[0] = true;
        for (int d : pat) {
          for (std::size_t s = sums.size(); s-- > 0;) {
            if (sums[s] && s + static_cast<std::size_t>(d) < sums.size()) sums[s + static_cast<std::size_t>(d)] = true;
          }
        }
        for (std::size_t s = 0; s < possible.size(); ++s) possible[s] = possible[s] && sums[s];
        if (primes_used == 3) break;
      }
      CHECK(primes_used == 3);
      bool proper = false;
      for (std::size_t s = 1; s + 1 < possible.size(); ++s) proper = proper || possible[s];
      if (proper) CHECK_FALSE(oracle::kronecker_factor(gi).has_value());
    }
  }
}

TEST_CASE("real root counting") {
  CHECK(real_root_count(P({-1, 0, 1})) == 2);
  CHECK(real_root_count(P({1, 0, 1})) == 0);
  CHECK(real_root_count(P({0, -1, 0, 1})) == 3);
  CHECK_THROWS_AS(real_root_count(P({1, 2, 1})), DomainError);

  oracle::Rng rng(99);
  int checked = 0;
  while (checked < 100) {
    const long d = rng.integer(3, 4);
    std::vector<Rational> c;
    for (long k = 0; k < d; ++k) c.emplace_back(rng.integer(-9, 9));
    c.emplace_back(rng.nonzero(-3, 3));
    RatPoly p(c);
    if (!is_squarefree(p)) continue;
    CHECK(real_root_count(p) == oracle::grid_root_count(p));
    ++checked;
  }
}

TEST_CASE("hermite normal form") {
  using V = std::vector<std::vector<Integer>>;
  CHECK(hnf(V{{2, 0}, {0, 2}}, 2).basis() == V{{2, 0}, {0, 2}});
  CHECK(hnf(V{{1, 1}, {0, 2}}, 2).basis() == V{{1, 1}, {0, 2}});
  CHECK(hnf(V{{2, 2}, {2, -2}}, 2).basis() == V{{2, 2}, {0, 4}});
  CHECK(hnf(V{{4, 6}, {6, 9}, {2, 3}}, 2).rank() == 1);

  oracle::Rng rng(3);
  for (int t = 0; t < 50; ++t) {
    const std::size_t n = static_cast<std::size_t>(rng.integer(2, 4));
    V rows(n, std::vector<Integer>(n));
    for (auto& r : rows) {
      for (auto& x : r) x = rng.integer(-9, 9);
    }
    IntLattice l = hnf(rows, n);
    CHECK(hnf(l) == l);
    if (l.rank() < n) continue;
    // mix rows by a unimodular transform: same lattice, same HNF
    RatMatrix u = rng.unimodular(n, 6);
    V mixed(n, std::vector<Integer>(n));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        Rational s = 0;
        for (std::size_t k = 0; k < n; ++k) s += u(k, i) * Rational(rows[k][j]);
        mixed[i][j] = s.get_num();
      }
    }
    CHECK(hnf(mixed, n) == l);
    CHECK(oracle::lattice_contains(rows, l.basis()));
    CHECK(oracle::lattice_contains(l.basis(), rows));
    CHECK(l.index() == Rational(abs(determinant(RatMatrix::from_rows(
                           [&] {
                             std::vector<std::vector<Rational>> r;
                             for (auto& row : rows) r.emplace_back(row.begin(), row.end());
                             return r;
                           }())))
                           ).get_num());
  }
}

TEST_CASE("matrix helpers") {
  RatMatrix m{{2, 1}, {1, 3}};
  CHECK(determinant(m) == 5);
  CHECK(inverse(m) * m == RatMatrix::identity(2));
  CHECK(characteristic_polynomial(m) == P({5, -5, 1}));
  CHECK(evaluate(characteristic_polynomial(m), m) == RatMatrix(2, 2));
  CHECK_THROWS_AS(inverse(RatMatrix{{1, 2}, {2, 4}}), DomainError);
  auto k = kernel(RatMatrix{{1, 2, 3}, {2, 4, 6}});
  CHECK(k.size() == 2);
  oracle::Rng rng(8);
  for (int t = 0; t < 20; ++t) {
    RatMatrix a(4, 4);
    for (std::size_t i = 0; i < 4; ++i) {
      for (std::size_t j = 0; j < 4; ++j) a(i, j) = rng.rational(-5, 5, 3);
    }
    CHECK(determinant(a) == oracle::cofactor_det(a));
  }
}

TEST_CASE("height shells are enumerated exactly once") {
  for (std::size_t dim = 1; dim <= 4; ++dim) {
    for (long h = 1; h <= 3; ++h) {
      std::set<std::vector<long>> seen;
      std::size_t calls = 0;
      for_each_of_height(dim, h, [&](const std::vector<long>& v) {
        ++calls;
        long height = 0;
        for (long x : v) height = std::max(height, std::abs(x));
        CHECK(height == h);
        seen.insert(v);
        return false;
      });
      const auto full = static_cast<std::size_t>(std::pow(2 * h + 1, dim) - std::pow(2 * h - 1, dim));
      CHECK(calls == full);
      CHECK(seen.size() == full);
    }
  }
}
