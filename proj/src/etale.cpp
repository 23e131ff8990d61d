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

#include "ait/etale.hpp"

#include <algorithm>

#include "ait/factor.hpp"

namespace ait {

EtaleAlgebra::EtaleAlgebra(RatPoly g) : modulus_(std::move(g)) {
  factors_ = irreducible_factors(modulus_);
  for (const auto& gi : factors_) {
    const RatPoly cofactor = modulus_ / gi;
    // u * gi + v * cofactor = 1, so v * cofactor is 1 mod gi and 0 mod the rest
    const ExtendedGcd eg = extended_gcd(gi, cofactor);
    idempotents_.push_back((eg.t * cofactor) % modulus_);
  }
}

std::shared_ptr<const EtaleAlgebra> EtaleAlgebra::make(const RatPoly& g) {
  if (g.degree() < 1) throw DomainError("etale algebra needs a polynomial of degree >= 1");
  if (g.leading() != 1) throw DomainError("etale algebra needs a monic polynomial");
  if (!is_squarefree(g)) throw DomainError("not etale: " + g.str() + " has a repeated factor");
  return std::shared_ptr<const EtaleAlgebra>(new EtaleAlgebra(g));
}

AlgebraPtr make_algebra(const RatPoly& g) { return EtaleAlgebra::make(g); }

AlgElement EtaleAlgebra::zero() const { return scalar(0); }
AlgElement EtaleAlgebra::one() const { return scalar(1); }
AlgElement EtaleAlgebra::beta() const { return from_poly(RatPoly({0, 1})); }

AlgElement EtaleAlgebra::scalar(const Rational& c) const {
  return from_poly(RatPoly::constant(c));
}

AlgElement EtaleAlgebra::from_coords(std::vector<Rational> coords) const {
  return AlgElement(shared_from_this(), std::move(coords));
}

AlgElement EtaleAlgebra::from_poly(const RatPoly& p) const {
  const RatPoly r = p % modulus_;
  std::vector<Rational> c(static_cast<std::size_t>(degree()));
  for (int i = 0; i <= r.degree(); ++i) c[static_cast<std::size_t>(i)] = r[i];
  return from_coords(std::move(c));
}

std::vector<AlgElement> EtaleAlgebra::idempotents() const {
  std::vector<AlgElement> out;
  for (const auto& e : idempotents_) out.push_back(from_poly(e));
  return out;
}

Rational EtaleAlgebra::euler_trace(int m) const {
  const int n = degree();
  if (m < 0) throw DomainError("euler_trace needs a nonnegative exponent");
  std::vector<Rational> h(static_cast<std::size_t>(std::max(m, n - 1)) + 1);
  h[static_cast<std::size_t>(n - 1)] = 1;
  for (int k = n; k <= m; ++k) {
    Rational s = 0;
    for (int j = 0; j < n; ++j) s += modulus_[j] * h[static_cast<std::size_t>(k - n + j)];
    h[static_cast<std::size_t>(k)] = -s;
  }
  return h[static_cast<std::size_t>(m)];
}

// ---------------------------------------------------------------------------

AlgElement::AlgElement(AlgebraPtr algebra, std::vector<Rational> coords)
    : algebra_(std::move(algebra)), coords_(std::move(coords)) {
  if (!algebra_) throw DomainError("element without an algebra");
  if (static_cast<int>(coords_.size()) != algebra_->degree()) {
    throw DomainError("element has the wrong number of coordinates");
  }
}

bool AlgElement::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Rational& q) { return q == 0; });
}

namespace {

void require_same(const AlgElement& a, const AlgElement& b) {
  if (a.algebra() != b.algebra() && !a.algebra()->same_as(*b.algebra())) {
    throw DomainError("elements belong to different algebras");
  }
}

}  // namespace

AlgElement& AlgElement::operator+=(const AlgElement& o) {
  require_same(*this, o);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
  return *this;
}

AlgElement& AlgElement::operator-=(const AlgElement& o) {
  require_same(*this, o);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= o.coords_[i];
  return *this;
}

AlgElement& AlgElement::operator*=(const AlgElement& o) {
  require_same(*this, o);
  *this = algebra_->from_poly(as_poly() * o.as_poly());
  return *this;
}

AlgElement AlgElement::operator-() const { return scaled(-1); }

AlgElement AlgElement::scaled(const Rational& c) const {
  std::vector<Rational> v = coords_;
  for (auto& x : v) x *= c;
  return AlgElement(algebra_, std::move(v));
}

bool operator==(const AlgElement& a, const AlgElement& b) {
  return a.algebra()->same_as(*b.algebra()) && a.coords() == b.coords();
}

bool AlgElement::is_invertible() const {
  return gcd(as_poly(), algebra_->modulus()).degree() == 0;
}

AlgElement AlgElement::inverse() const {
  const ExtendedGcd eg = extended_gcd(as_poly(), algebra_->modulus());
  if (eg.gcd.degree() != 0) throw DomainError("element is not invertible (zero divisor)");
  return algebra_->from_poly(eg.s);
}

AlgElement AlgElement::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  AlgElement r = algebra_->one();
  AlgElement b = *this;
  while (e > 0) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

AlgElement operator/(const AlgElement& a, const AlgElement& b) { return a * b.inverse(); }

RatMatrix AlgElement::multiplication_matrix() const {
  const auto n = static_cast<std::size_t>(algebra_->degree());
  RatMatrix m(n, n);
  AlgElement col = *this;
  const AlgElement beta = algebra_->beta();
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) m(i, j) = col.coords_[i];
    col *= beta;
  }
  return m;
}

RatPoly AlgElement::charpoly() const { return characteristic_polynomial(multiplication_matrix()); }
Rational AlgElement::norm() const { return determinant(multiplication_matrix()); }
Rational AlgElement::trace() const { return multiplication_matrix().trace(); }

AlgElement derivative_at_beta(const AlgebraPtr& algebra) {
  return algebra->from_poly(algebra->modulus().derivative());
}

AlgElement euler_trace_solve(const AlgebraPtr& algebra, const std::vector<Rational>& values) {
  const auto n = static_cast<std::size_t>(algebra->degree());
  if (values.size() != n) throw DomainError("euler_trace_solve needs n values");
  RatMatrix hankel(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) hankel(i, j) = algebra->euler_trace(static_cast<int>(i + j));
  }
  auto kappa = solve(hankel, values);
  if (!kappa) throw DomainError("trace form is degenerate (g not separable)");
  return algebra->from_coords(std::move(*kappa));
}

// ---------------------------------------------------------------------------
// Square roots

namespace {

// Arithmetic in the number field K = Q[x]/(p), p irreducible.
struct Field {
  RatPoly p;
  RatPoly mul(const RatPoly& a, const RatPoly& b) const { return (a * b) % p; }
  RatPoly inv(const RatPoly& a) const { return extended_gcd(a, p).s % p; }
};

RatMatrix block_multiplication(const Field& K, const RatPoly& a, long s) {
  // basis beta^k (k < d), then beta^k * Y; element s*beta + Y acting on
  // u + v Y gives (s beta u + a v) + (u + s beta v) Y
  const auto d = static_cast<std::size_t>(K.p.degree());
  RatMatrix m(2 * d, 2 * d);
  const RatPoly sbeta({0, Rational(s)});
  for (std::size_t j = 0; j < 2 * d; ++j) {
    RatPoly u, v;
    if (j < d) {
      u = RatPoly::monomial(1, static_cast<int>(j));
    } else {
      v = RatPoly::monomial(1, static_cast<int>(j - d));
    }
    const RatPoly nu = (K.mul(sbeta, u) + K.mul(a, v)) % K.p;
    const RatPoly nv = (u + K.mul(sbeta, v)) % K.p;
    for (std::size_t i = 0; i < d; ++i) {
      m(i, j) = nu[static_cast<int>(i)];
      m(d + i, j) = nv[static_cast<int>(i)];
    }
  }
  return m;
}

void normalize_sign(RatPoly& c) {
  for (const auto& x : c.coeffs()) {
    if (x == 0) continue;
    if (x < 0) c = -c;
    return;
  }
}

std::optional<RatPoly> component_sqrt(const Field& K, const RatPoly& a) {
  for (long s = 0;; ++s) {
    const RatPoly norm = characteristic_polynomial(block_multiplication(K, a, s));
    if (!is_squarefree(norm)) continue;
    // (y - s beta)^2 - a = y^2 - 2 s beta y + (s^2 beta^2 - a)
    const RatPoly two_s_beta({0, Rational(2 * s)});
    const RatPoly c0 = (RatPoly({0, 0, Rational(s * s)}) - a) % K.p;
    for (const auto& nj : irreducible_factors(norm)) {
      // reduce nj(y) modulo the quadratic: accumulate r1*y + r0
      RatPoly r1, r0 = RatPoly::constant(1);
      RatPoly acc1, acc0;
      for (int k = 0; k <= nj.degree(); ++k) {
        acc1 += r1.scaled(nj[k]);
        acc0 += r0.scaled(nj[k]);
        const RatPoly n1 = (K.mul(two_s_beta, r1) + r0) % K.p;
        const RatPoly n0 = -K.mul(r1, c0);
        r1 = n1;
        r0 = n0;
      }
      if (acc1.is_zero()) continue;
      const RatPoly z = (-K.mul(acc0, K.inv(acc1))) % K.p;
      RatPoly c = (z - RatPoly({0, Rational(s)})) % K.p;
      if (!((K.mul(c, c) - a) % K.p).is_zero()) continue;
      normalize_sign(c);
      return c;
    }
    return std::nullopt;
  }
}

}  // namespace

std::optional<AlgElement> sqrt_in_algebra(const AlgElement& a) {
  if (!a.is_invertible()) throw DomainError("sqrt_in_algebra needs an invertible element");
  const auto& L = a.algebra();
  RatPoly root;
  for (std::size_t i = 0; i < L->factors().size(); ++i) {
    const Field K{L->factors()[i]};
    auto ci = component_sqrt(K, a.as_poly() % K.p);
    if (!ci) return std::nullopt;
    root += *ci * L->idempotent_polys()[i];
  }
  AlgElement c = L->from_poly(root);
  if (!(c * c == a)) throw DomainError("internal: square root check failed");
  return c;
}

}  // namespace ait
