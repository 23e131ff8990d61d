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

#include "ait/pencil.hpp"

#include <algorithm>
#include <random>

#include "ait/enumerate.hpp"
#include "ait/factor.hpp"

namespace ait {

SymPair::SymPair(RatMatrix a, RatMatrix b) : A(std::move(a)), B(std::move(b)) {
  if (!A.is_square() || !B.is_square() || A.rows() != B.rows() || A.rows() == 0) {
    throw DomainError("pencil needs two square matrices of the same size");
  }
  if (!A.is_symmetric() || !B.is_symmetric()) throw DomainError("pencil matrices must be symmetric");
}

SymPair SymPair::transformed(const RatMatrix& m) const {
  return SymPair(congruence(A, m), congruence(B, m));
}

namespace {

int wedge_sign(std::size_t n) { return (n * (n - 1) / 2) % 2 == 0 ? 1 : -1; }

RatMatrix monodromy(const SymPair& v) { return inverse(v.A) * v.B; }

}  // namespace

BinaryForm invariant_binary_form(const SymPair& v) {
  // det(xA - B) sampled at x = 0..n and interpolated
  const std::size_t n = v.n();
  RatMatrix vander(n + 1, n + 1);
  std::vector<Rational> values(n + 1);
  for (std::size_t k = 0; k <= n; ++k) {
    const Rational x(static_cast<long>(k));
    Rational p = 1;
    for (std::size_t j = 0; j <= n; ++j) {
      vander(k, j) = p;
      p *= x;
    }
    values[k] = determinant(v.A.scaled(x) - v.B);
  }
  const auto low_first = solve(vander, values);
  std::vector<Rational> coeffs(n + 1);
  for (std::size_t i = 0; i <= n; ++i) coeffs[i] = (*low_first)[n - i] * wedge_sign(n);
  return BinaryForm(std::move(coeffs));
}

bool is_stable(const BinaryForm& f) { return f.is_nondegenerate(); }

AlgebraPtr algebra_of(const BinaryForm& f) {
  if (!is_stable(f)) throw DomainError("not stable: f_0 = 0 or Delta(f) = 0 for " + f.str());
  return make_algebra(f.monic_part());
}

void check_orbit_param(const BinaryForm& f, const OrbitParam& p) {
  if (p.algebra()->modulus() != f.monic_part()) {
    throw DomainError("parameter lives in the wrong algebra");
  }
  if (p.t == 0) throw DomainError("t must be nonzero");
  if (!p.alpha.is_invertible()) throw DomainError("alpha must be a unit");
  if (p.t * p.t != f.leading() * p.alpha.norm()) {
    throw DomainError("constraint t^2 = f_0 N(alpha) violated");
  }
}

OrbitParam pencil_to_param(const SymPair& v) {
  const BinaryForm f = invariant_binary_form(v);
  const AlgebraPtr L = algebra_of(f);
  const std::size_t n = v.n();
  const RatMatrix T = monodromy(v);
  if (characteristic_polynomial(T) != L->modulus()) {
    throw DomainError("internal: characteristic polynomial of A^-1 B differs from g");
  }

  // cyclic vector: basis vectors first, then small random vectors
  std::mt19937_64 rng(20260101);
  std::uniform_int_distribution<long> coord(-3, 3);
  std::vector<Rational> m;
  RatMatrix krylov(n, n);
  for (int attempt = 0;; ++attempt) {
    m.assign(n, Rational(0));
    if (attempt < static_cast<int>(n)) {
      m[static_cast<std::size_t>(attempt)] = 1;
    } else {
      for (auto& x : m) x = coord(rng);
    }
    std::vector<Rational> w = m;
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t i = 0; i < n; ++i) krylov(i, j) = w[i];
      w = T * w;
    }
    if (determinant(krylov) != 0) break;
    if (attempt > 1000) throw DomainError("internal: no cyclic vector found");
  }

  const std::vector<Rational> Am = v.A * m;
  std::vector<Rational> a(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::vector<Rational> ti = krylov.col(i);
    for (std::size_t k = 0; k < n; ++k) a[i] += Am[k] * ti[k];
  }
  const AlgElement kappa = euler_trace_solve(L, a);
  OrbitParam p{kappa.inverse(), 1 / determinant(krylov)};
  check_orbit_param(f, p);
  return p;
}

SymPair param_to_pencil(const BinaryForm& f, const OrbitParam& p) {
  check_orbit_param(f, p);
  const AlgebraPtr& L = p.algebra();
  const auto n = static_cast<std::size_t>(L->degree());
  const AlgElement w = (p.alpha * derivative_at_beta(L)).inverse();
  std::vector<Rational> traces(2 * n);
  AlgElement power = w;
  for (std::size_t k = 0; k < 2 * n; ++k) {
    traces[k] = power.trace();
    power *= L->beta();
  }
  RatMatrix A(n, n), B(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      A(i, j) = traces[i + j];
      B(i, j) = traces[i + j + 1];
    }
  }
  std::vector<Rational> u(n, Rational(1));
  u[0] = p.t;
  const RatMatrix U = RatMatrix::diagonal(u);
  SymPair v(congruence(A, U), congruence(B, U));
  if (!(invariant_binary_form(v) == f)) throw DomainError("internal: reconstructed pencil has the wrong invariant");
  return v;
}

// ---------------------------------------------------------------------------

namespace {

// Sign vectors s in {+1,-1}^r, as bit masks (bit i set means s_i = -1).
int sign_norm(unsigned mask, const std::vector<RatPoly>& factors) {
  int s = 1;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if ((mask >> i) & 1U && factors[i].degree() % 2 == 1) s = -s;
  }
  return s;
}

RatPoly sign_poly(unsigned mask, const EtaleAlgebra& L) {
  RatPoly e;
  for (std::size_t i = 0; i < L.factors().size(); ++i) {
    e += L.idempotent_polys()[i].scaled((mask >> i) & 1U ? -1 : 1);
  }
  return e;
}

bool first_nonzero_positive(const AlgElement& c) {
  for (const auto& x : c.coords()) {
    if (x != 0) return x > 0;
  }
  return true;
}

}  // namespace

std::optional<AlgElement> g_equivalent(const OrbitParam& p1, const OrbitParam& p2) {
  const AlgebraPtr& L = p1.algebra();
  if (!L->same_as(*p2.algebra())) throw DomainError("parameters live in different algebras");
  const auto c0 = sqrt_in_algebra(p1.alpha / p2.alpha);
  if (!c0) return std::nullopt;
  const Rational n0 = c0->norm();
  const std::size_t r = L->factors().size();
  if (r >= 31) throw DomainError("too many factors");
  for (unsigned mask = 0; mask < (1U << r); ++mask) {
    if (n0 * sign_norm(mask, L->factors()) * p2.t != p1.t) continue;
    AlgElement c = *c0 * L->from_poly(sign_poly(mask, *L));
    // -c is a witness as well exactly when n is even
    if (!first_nonzero_positive(c) && L->degree() % 2 == 0) c = -c;
    return c;
  }
  return std::nullopt;
}

std::optional<HWitness> h_equivalent(const BinaryForm& f, const OrbitParam& p1,
                                     const OrbitParam& p2, const std::vector<Integer>& primes) {
  const int n = f.degree();
  if (n % 2 != 0) throw DomainError("H undefined for odd n");
  check_orbit_param(f, p1);
  check_orbit_param(f, p2);

  std::vector<Integer> support;
  for (const auto& p : primes) {
    if (p < 2) throw DomainError("support primes must be >= 2");
    support.push_back(p);
  }
  for (const auto& p : prime_support(f.leading() * f.discriminant())) support.push_back(p);
  std::sort(support.begin(), support.end());
  support.erase(std::unique(support.begin(), support.end()), support.end());
  if (support.size() > 20) throw DomainError("prime support too large for exhaustive search");

  std::vector<Integer> ds;
  for (unsigned long mask = 0; mask < (1UL << support.size()); ++mask) {
    Integer d = 1;
    for (std::size_t i = 0; i < support.size(); ++i) {
      if ((mask >> i) & 1UL) d *= support[i];
    }
    ds.push_back(d);
    ds.push_back(-d);
  }
  std::stable_sort(ds.begin(), ds.end(), [](const Integer& a, const Integer& b) {
    return abs(a) < abs(b) || (abs(a) == abs(b) && a > b);
  });

  for (const auto& d : ds) {
    const Rational dq(d);
    OrbitParam twisted{p2.alpha.scaled(dq), p2.t * pow(dq, n / 2)};
    if (auto c = g_equivalent(p1, twisted)) return HWitness{*c, dq};
  }
  return std::nullopt;
}

StabilizerGroup stabilizer_rational(const SymPair& v) {
  const BinaryForm f = invariant_binary_form(v);
  const AlgebraPtr L = algebra_of(f);
  const RatMatrix T = monodromy(v);
  const auto& factors = L->factors();
  const std::size_t r = factors.size();

  StabilizerGroup G;
  for (unsigned mask = 0; mask < (1U << r); ++mask) {
    if (sign_norm(mask, factors) == 1) G.elements.push_back(evaluate(sign_poly(mask, *L), T));
  }
  G.order = Integer(static_cast<unsigned long>(G.elements.size()));

  std::vector<std::size_t> odd;
  for (std::size_t i = 0; i < r; ++i) {
    if (factors[i].degree() % 2 == 0) {
      G.generators.push_back(evaluate(sign_poly(1U << i, *L), T));
    } else {
      odd.push_back(i);
    }
  }
  for (std::size_t k = 1; k < odd.size(); ++k) {
    G.generators.push_back(evaluate(sign_poly((1U << odd[0]) | (1U << odd[k]), *L), T));
  }
  return G;
}

Integer geometric_stabilizer_order(int n) {
  if (n < 1) throw DomainError("dimension must be positive");
  return pow(Integer(2), static_cast<unsigned long>(n - 1));
}

bool real_orbit_obstruction(const BinaryForm& f) {
  const AlgebraPtr L = algebra_of(f);
  return real_root_count(L->modulus()) == 0 && f.leading() < 0;
}

ObstructionReport orbit_witness_search(const BinaryForm& f, long bound) {
  const AlgebraPtr L = algebra_of(f);
  const RatPoly& g = L->modulus();
  const int n = L->degree();
  const Rational f0 = f.leading();

  ObstructionReport report;
  report.f0_class = squarefree_part(f0);
  report.real_obstruction = real_orbit_obstruction(f);
  if (bound < 0) return report;

  std::vector<Integer> divisors{1};
  for (const auto& [p, e] : factor_integer(f0.get_num())) {
    std::vector<Integer> next;
    for (const auto& d : divisors) {
      Integer pk = 1;
      for (int k = 0; k <= e; ++k, pk *= p) next.push_back(d * pk);
    }
    divisors = std::move(next);
  }
  std::sort(divisors.begin(), divisors.end());

  auto attempt = [&](const std::vector<long>& v) {
    std::vector<Rational> c(v.begin(), v.end());
    const Rational na = resultant(g, RatPoly(c));
    if (na == 0) return false;
    for (const auto& q : divisors) {
      const Rational target = f0 * na / pow(Rational(q), n);
      if (!is_square(target)) continue;
      for (auto& x : c) x /= q;
      report.witness = OrbitParam{L->from_coords(c), sqrt_exact(target)};
      return true;
    }
    return false;
  };
  for (long h = 1; h <= bound; ++h) {
    if (for_each_of_height(static_cast<std::size_t>(n), h, attempt)) break;
  }
  return report;
}

}  // namespace ait
