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

// Independent reference computations used only by the test suites. Nothing
// here calls into the code path it is used to check.
#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <vector>

#include "ait/matrix.hpp"
#include "ait/poly.hpp"
#include "ait/rational.hpp"

namespace ait::oracle {

/// Determinant by cofactor expansion (no elimination), for small matrices.
inline Rational cofactor_det(const RatMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  if (n == 1) return m(0, 0);
  Rational d = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (m(0, j) == 0) continue;
    Rational c = m(0, j) * cofactor_det(m.minor_without({0}, {j}));
    d += (j % 2 == 0) ? c : Rational(-c);
  }
  return d;
}

/// Resultant as the determinant of the Sylvester matrix.
inline Rational sylvester_resultant(const RatPoly& p, const RatPoly& q) {
  const int m = p.degree(), n = q.degree();
  const std::size_t size = static_cast<std::size_t>(m + n);
  RatMatrix s(size, size);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j <= m; ++j) s(static_cast<std::size_t>(i), static_cast<std::size_t>(i + j)) = p[m - j];
  }
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j <= n; ++j) {
      s(static_cast<std::size_t>(n + i), static_cast<std::size_t>(i + j)) = q[n - j];
    }
  }
  return determinant(s);
}

/// prod_{i<j} (a_i b_j - a_j b_i)^2 for f = c * prod (a_i x - b_i y).
inline Rational root_product_discriminant(const Rational& c,
                                          const std::vector<std::pair<Rational, Rational>>& roots) {
  Rational d = pow(c, 2 * static_cast<long>(roots.size()) - 2);
  for (std::size_t i = 0; i < roots.size(); ++i) {
    for (std::size_t j = i + 1; j < roots.size(); ++j) {
      Rational t = roots[i].first * roots[j].second - roots[j].first * roots[i].second;
      d *= t * t;
    }
  }
  return d;
}

/// Distinct real roots of a squarefree polynomial by counting sign changes on
/// a rational grid, halving the step until the count is stable.
inline int grid_root_count(const RatPoly& p) {
  Rational bound = 1;
  for (int i = 0; i < p.degree(); ++i) bound = std::max(bound, Rational(Rational(1) + abs(p[i] / p.leading())));
  auto count_at = [&](const Rational& step) {
    int roots = 0, last = 0;
    for (Rational x = -bound - 1; x <= bound + 1; x += step) {
      const int s = sgn(p(x));
      if (s == 0) {
        ++roots;
        last = 0;
        continue;
      }
      if (last != 0 && s != last) ++roots;
      last = s;
    }
    return roots;
  };
  Rational step(1, 8);
  int prev = count_at(step), stable = 0;
  while (stable < 2) {
    step /= 2;
    const int c = count_at(step);
    stable = (c == prev) ? stable + 1 : 0;
    prev = c;
  }
  return prev;
}

inline std::vector<Integer> signed_divisors(const Integer& n) {
  std::vector<Integer> out;
  const Integer a = abs(n);
  for (Integer d = 1; d * d <= a; ++d) {
    if (a % d == 0) {
      out.push_back(d);
      out.push_back(-d);
      if (d * d != a) {
        out.push_back(a / d);
        out.push_back(-(a / d));
      }
    }
  }
  return out;
}

/// Kronecker's method: searches for a proper integer factor of an integer
/// polynomial through interpolation on divisor choices. Returns the factor if
/// one exists, nothing when the polynomial is irreducible over Z.
inline std::optional<RatPoly> kronecker_factor(const RatPoly& f) {
  const int n = f.degree();
  for (int d = 1; d <= n / 2; ++d) {
    // interpolation nodes: the d + 1 points with fewest divisors among a few candidates
    std::vector<std::pair<std::size_t, long>> candidates;
    for (long x = 0; static_cast<int>(candidates.size()) < 4 * (d + 1); x = (x <= 0 ? 1 - x : -x)) {
      const Rational v = f(Rational(x));
      if (v == 0) return RatPoly::linear_root(Rational(x));
      candidates.emplace_back(signed_divisors(v.get_num()).size(), x);
    }
    std::sort(candidates.begin(), candidates.end());
    std::vector<Rational> xs;
    std::vector<std::vector<Integer>> divs;
    for (int k = 0; k <= d; ++k) {
      xs.emplace_back(candidates[static_cast<std::size_t>(k)].second);
      divs.push_back(signed_divisors(f(xs.back()).get_num()));
    }
    std::vector<std::size_t> pick(xs.size(), 0);
    std::function<std::optional<RatPoly>(std::size_t)> rec = [&](std::size_t i) -> std::optional<RatPoly> {
      if (i == xs.size()) {
        // Lagrange interpolation through (xs, chosen divisors)
        RatPoly g;
        for (std::size_t a = 0; a < xs.size(); ++a) {
          RatPoly term = RatPoly::constant(Rational(divs[a][pick[a]]));
          for (std::size_t b = 0; b < xs.size(); ++b) {
            if (a == b) continue;
            term *= RatPoly::linear_root(xs[b]).scaled(Rational(1) / (xs[a] - xs[b]));
          }
          g += term;
        }
        if (g.degree() < 1) return std::nullopt;
        for (const auto& c : g.coeffs()) {
          if (c.get_den() != 1) return std::nullopt;
        }
        if ((f % g).is_zero()) return g;
        return std::nullopt;
      }
      for (std::size_t k = 0; k < divs[i].size(); ++k) {
        pick[i] = k;
        if (auto r = rec(i + 1)) return r;
      }
      return std::nullopt;
    };
    if (auto r = rec(0)) return r;
  }
  return std::nullopt;
}

/// L1 contained in L2 for full-rank integer lattices, decided by solving
/// rationally against the raw basis of L2 and checking integrality.
inline bool lattice_contains(const std::vector<std::vector<Integer>>& big,
                             const std::vector<std::vector<Integer>>& small) {
  const std::size_t n = big.size();
  RatMatrix bt(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) bt(j, i) = Rational(big[i][j]);
  }
  for (const auto& v : small) {
    std::vector<Rational> rv(v.begin(), v.end());
    auto x = solve(bt, rv);
    if (!x) return false;
    for (const auto& c : *x) {
      if (c.get_den() != 1) return false;
    }
  }
  return true;
}

/// Random helpers with explicit engines so every test is reproducible.
struct Rng {
  std::mt19937_64 eng;
  explicit Rng(std::uint64_t seed) : eng(seed) {}
  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(eng); }
  long nonzero(long lo, long hi) {
    long v = 0;
    while (v == 0) v = integer(lo, hi);
    return v;
  }
  Rational rational(long lo, long hi, long max_den) {
    return make_rational(Integer(integer(lo, hi)), Integer(integer(1, max_den)));
  }
  RatMatrix unimodular(std::size_t n, int steps) {
    RatMatrix m = RatMatrix::identity(n);
    if (n < 2) return m;
    for (int s = 0; s < steps; ++s) {
      const auto i = static_cast<std::size_t>(integer(0, static_cast<long>(n) - 1));
      auto j = static_cast<std::size_t>(integer(0, static_cast<long>(n) - 1));
      if (i == j) j = (j + 1) % n;
      const long c = nonzero(-2, 2);
      for (std::size_t k = 0; k < n; ++k) m(k, i) += m(k, j) * c;  // column op
    }
    return m;
  }
};


/// Nontrivial solvability of z^2 = a x^2 + b y^2 over Q_p for squarefree
/// integers a, b, decided by searching for a primitive solution modulo p^2
/// (odd p) or 2^6.
inline bool local_solvable(long a, long b, long p) {
  const long m = p == 2 ? 64 : p * p;
  auto mod = [m](long x) { return ((x % m) + m) % m; };
  // squares mod m, split by whether some unit root exists
  std::vector<char> square_any(static_cast<std::size_t>(m), 0), square_unit(static_cast<std::size_t>(m), 0);
  for (long z = 0; z < m; ++z) {
    const auto s = static_cast<std::size_t>(mod(z * z));
    square_any[s] = 1;
    if (z % p != 0) square_unit[s] = 1;
  }
  for (long x = 0; x < m; ++x) {
    const long ax = mod(a * mod(x * x));
    for (long y = 0; y < m; ++y) {
      const auto v = static_cast<std::size_t>(mod(ax + b * mod(y * y)));
      const bool primitive_xy = x % p != 0 || y % p != 0;
      if (primitive_xy ? square_any[v] : square_unit[v]) return true;
    }
  }
  return false;
}

/// Local Brauer symbol at p of the full Clifford algebra of the diagonal form
/// <a_1, ..., a_{2m}>, by peeling off binary summands:
/// C(<x, y> + q') = (x, y) (x) C(-xy q').
template <class Symbol>
int clifford_symbol(std::vector<Rational> a, const Symbol& hilbert) {
  int s = 1;
  Rational scale = 1;
  for (std::size_t i = 0; i + 1 < a.size(); i += 2) {
    const Rational x = scale * a[i], y = scale * a[i + 1];
    s *= hilbert(x, y);
    scale *= -x * y;
  }
  return s;
}

/// Pfaffian as a signed sum over perfect matchings, with signs from the
/// inversion count of the matching read as a permutation.
inline Rational matching_pfaffian(const RatMatrix& m) {
  const std::size_t n = m.rows();
  if (n % 2 != 0) return 0;
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  Rational total = 0;
  do {
    bool canonical = true;
    for (std::size_t k = 0; k + 1 < n && canonical; k += 2) {
      if (perm[k] > perm[k + 1]) canonical = false;
      if (k >= 2 && perm[k - 2] > perm[k]) canonical = false;
    }
    if (!canonical) continue;
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j] ? 1 : 0;
    }
    Rational term = inversions % 2 == 0 ? 1 : -1;
    for (std::size_t k = 0; k < n; k += 2) term *= m(perm[k], perm[k + 1]);
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

}  // namespace ait::oracle
