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

#include "ait/adjoint.hpp"

namespace ait {

AdjointInvariants adjoint_invariants(const RatMatrix& T) {
  if (!T.is_square() || T.rows() == 0) throw DomainError("adjoint invariants need a square matrix");
  const std::size_t n = T.rows();
  const RatPoly p = characteristic_polynomial(T);
  AdjointInvariants inv;
  for (std::size_t i = 1; i <= n; ++i) inv.c.push_back((i % 2 == 0 ? 1 : -1) * p[static_cast<int>(n - i)]);
  RatMatrix power = T;
  for (std::size_t j = 1; j < n; ++j) {
    inv.moments.push_back(power(n - 1, n - 1));
    power = power * T;
  }
  return inv;
}

std::vector<Rational> extended_moments(const AdjointInvariants& inv, std::size_t count) {
  const std::size_t n = inv.n();
  if (inv.moments.size() + 1 != n) throw DomainError("need n-1 moments for n charpoly coefficients");
  std::vector<Rational> a{1};
  a.insert(a.end(), inv.moments.begin(), inv.moments.end());
  while (a.size() < count) {
    const std::size_t m = a.size();
    Rational s = 0;
    for (std::size_t i = 1; i <= n; ++i) s += (i % 2 == 1 ? 1 : -1) * inv.c[i - 1] * a[m - i];
    a.push_back(s);
  }
  a.resize(count);
  return a;
}

Rational regularity_D(const AdjointInvariants& inv) {
  const std::size_t n = inv.n();
  const auto a = extended_moments(inv, 2 * n - 1);
  RatMatrix h(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) h(i, j) = a[i + j];
  }
  return determinant(h);
}

Rational regularity_D(const RatMatrix& T) { return regularity_D(adjoint_invariants(T)); }

RatMatrix adjoint_canonical_rep(const AdjointInvariants& inv) {
  const std::size_t n = inv.n();
  if (regularity_D(inv) == 0) throw DomainError("irregular: D = 0");
  const auto a = extended_moments(inv, n);

  // coordinates of T^k e in the basis w_1..w_{n-1}, e
  auto krylov = [&](std::size_t k) {
    std::vector<Rational> v(n);
    if (k == 0) {
      v[n - 1] = 1;
    } else if (k < n) {
      v[k - 1] = 1;
      v[n - 1] = a[k];
    } else {
      for (std::size_t i = 1; i <= n; ++i) {
        const Rational coef = (i % 2 == 1 ? 1 : -1) * inv.c[i - 1];
        const std::size_t j = n - i;
        if (j == 0) {
          v[n - 1] += coef;
        } else {
          v[j - 1] += coef;
          v[n - 1] += coef * a[j];
        }
      }
    }
    return v;
  };

  RatMatrix out(n, n);
  const auto te = krylov(1);
  for (std::size_t j = 1; j < n; ++j) {
    const auto next = krylov(j + 1);
    for (std::size_t i = 0; i < n; ++i) out(i, j - 1) = next[i] - a[j] * te[i];
  }
  for (std::size_t i = 0; i < n; ++i) out(i, n - 1) = te[i];
  return out;
}

RatMatrix block_embed(const RatMatrix& g0) {
  const std::size_t m = g0.rows();
  RatMatrix g = RatMatrix::identity(m + 1);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) g(i, j) = g0(i, j);
  }
  return g;
}

Conjugator adjoint_conjugator(const RatMatrix& T, const RatMatrix& Tprime) {
  if (!T.is_square() || T.rows() != Tprime.rows() || !Tprime.is_square()) {
    throw DomainError("conjugator needs two square matrices of equal size");
  }
  if (regularity_D(T) == 0) throw DomainError("irregular: D = 0");
  const std::size_t n = T.rows(), m = n - 1;
  // unknowns: g0 entries row-major, then g_nn
  const std::size_t vars = m * m + 1;
  auto var_of = [&](std::size_t i, std::size_t j) -> std::optional<std::size_t> {
    if (i < m && j < m) return i * m + j;
    if (i == m && j == m) return m * m;
    return std::nullopt;
  };
  RatMatrix sys(n * n, vars);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      // (g T - T' g)_{rc} = sum_k g_{rk} T_{kc} - T'_{rk} g_{kc}
      for (std::size_t k = 0; k < n; ++k) {
        if (auto v = var_of(r, k)) sys(r * n + c, *v) += T(k, c);
        if (auto v = var_of(k, c)) sys(r * n + c, *v) -= Tprime(r, k);
      }
    }
  }
  const auto ker = kernel(sys);
  for (const auto& vec : ker) {
    if (vec[m * m] == 0) continue;
    RatMatrix g0(m, m);
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) g0(i, j) = vec[i * m + j] / vec[m * m];
    }
    const RatMatrix g = block_embed(g0);
    if (determinant(g) == 0) continue;
    return Conjugator{g, ker.size() == 1};
  }
  throw DomainError("no block conjugator: the invariants differ");
}

}  // namespace ait
