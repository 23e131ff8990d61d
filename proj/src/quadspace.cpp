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

#include "ait/quadspace.hpp"

#include <algorithm>
#include <cmath>

#include "ait/enumerate.hpp"

namespace ait {

std::string Place::str() const { return is_infinite() ? "inf" : to_string(p); }

bool operator<(const Place& a, const Place& b) {
  if (a.is_infinite() || b.is_infinite()) return !a.is_infinite() && b.is_infinite();
  return a.p < b.p;
}

QuadForm::QuadForm(RatMatrix gram) : gram_(std::move(gram)) {
  if (!gram_.is_square() || !gram_.is_symmetric()) throw DomainError("Gram matrix must be square and symmetric");
}

QuadForm QuadForm::diagonal(const std::vector<Rational>& entries) {
  return QuadForm(RatMatrix::diagonal(entries));
}

Rational QuadForm::operator()(const std::vector<Rational>& x) const {
  const auto gx = gram_ * x;
  Rational s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * gx[i];
  return s;
}

QuadForm orthogonal_sum(const QuadForm& a, const QuadForm& b) {
  const std::size_t n = a.dim(), m = b.dim();
  RatMatrix g(n + m, n + m);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) g(i, j) = a.gram()(i, j);
  }
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) g(n + i, n + j) = b.gram()(i, j);
  }
  return QuadForm(g);
}

namespace {

// Column operation col_j += c col_i on P, and the matching congruence on G.
void add_multiple(RatMatrix& G, RatMatrix& P, std::size_t j, std::size_t i, const Rational& c) {
  const std::size_t n = G.rows();
  for (std::size_t k = 0; k < n; ++k) P(k, j) += c * P(k, i);
  for (std::size_t k = 0; k < n; ++k) G(k, j) += c * G(k, i);
  for (std::size_t k = 0; k < n; ++k) G(j, k) += c * G(i, k);
}

void swap_basis(RatMatrix& G, RatMatrix& P, std::size_t i, std::size_t j) {
  const std::size_t n = G.rows();
  for (std::size_t k = 0; k < n; ++k) std::swap(P(k, i), P(k, j));
  for (std::size_t k = 0; k < n; ++k) std::swap(G(k, i), G(k, j));
  for (std::size_t k = 0; k < n; ++k) std::swap(G(i, k), G(j, k));
}

}  // namespace

Diagonalization diagonalize(const QuadForm& q) {
  const std::size_t n = q.dim();
  RatMatrix G = q.gram();
  RatMatrix P = RatMatrix::identity(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (G(i, i) == 0) {
      std::size_t j = i + 1;
      while (j < n && G(j, j) == 0) ++j;
      if (j < n) {
        swap_basis(G, P, i, j);
      } else {
        j = i + 1;
        while (j < n && G(i, j) == 0) ++j;
        if (j == n) throw DomainError("quadratic form is degenerate");
        add_multiple(G, P, i, j, 1);
      }
    }
    for (std::size_t j = i + 1; j < n; ++j) {
      if (G(i, j) != 0) add_multiple(G, P, j, i, -G(i, j) / G(i, i));
    }
  }
  Diagonalization out;
  for (std::size_t i = 0; i < n; ++i) {
    const Rational d = G(i, i);
    const Integer s = squarefree_part(d);
    const Rational r = sqrt_exact(d / Rational(s));
    for (std::size_t k = 0; k < n; ++k) P(k, i) /= r;
    out.entries.push_back(s);
  }
  out.transform = P;
  return out;
}

// ---------------------------------------------------------------------------

namespace {

Integer square_class(const Rational& a) {
  if (a == 0) throw DomainError("Hilbert symbol of zero");
  return a.get_num() * a.get_den();
}

int legendre(const Integer& u, const Integer& p) {
  Integer r = u % p;
  if (r < 0) r += p;
  return mpz_legendre(r.get_mpz_t(), p.get_mpz_t());
}

// Splits a = p^k u with p not dividing u.
long split_valuation(Integer& u, const Integer& p) {
  long k = 0;
  while (u % p == 0) {
    u /= p;
    ++k;
  }
  return k;
}

long mod8(const Integer& u) {
  Integer r = u % 8;
  if (r < 0) r += 8;
  return r.get_si();
}

}  // namespace

int hilbert_symbol(const Rational& a, const Rational& b, const Place& v) {
  Integer u = square_class(a), w = square_class(b);
  if (v.is_infinite()) return (u < 0 && w < 0) ? -1 : 1;
  const Integer& p = v.p;
  const long alpha = split_valuation(u, p), beta = split_valuation(w, p);
  if (p == 2) {
    const long um = mod8(u), wm = mod8(w);
    const long eu = ((um - 1) / 2) % 2, ew = ((wm - 1) / 2) % 2;
    const long ou = (um == 3 || um == 5) ? 1 : 0, ow = (wm == 3 || wm == 5) ? 1 : 0;
    return ((eu * ew + alpha * ow + beta * ou) % 2 == 0) ? 1 : -1;
  }
  int s = 1;
  if ((alpha * beta) % 2 == 1 && mod8(p) % 4 == 3) s = -s;
  if (beta % 2 == 1) s *= legendre(u, p);
  if (alpha % 2 == 1) s *= legendre(w, p);
  return s;
}

bool is_local_square(const Rational& a, const Place& v) {
  Integer u = square_class(a);
  if (v.is_infinite()) return u > 0;
  const long k = split_valuation(u, v.p);
  if (k % 2 != 0) return false;
  if (v.p == 2) return mod8(u) == 1;
  return legendre(u, v.p) == 1;
}

std::vector<Place> relevant_places(const QuadForm& q) {
  std::vector<Integer> primes{2};
  for (const auto& a : diagonalize(q).entries) {
    for (const auto& p : prime_support(Rational(a))) primes.push_back(p);
  }
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
  std::vector<Place> out;
  for (const auto& p : primes) out.push_back(Place{p});
  out.push_back(Place::infinity());
  return out;
}

namespace {

int hasse_of(const std::vector<Integer>& a, const Place& v) {
  int s = 1;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = i + 1; j < a.size(); ++j) s *= hilbert_symbol(Rational(a[i]), Rational(a[j]), v);
  }
  return s;
}

Integer product(const std::vector<Integer>& a) {
  Integer d = 1;
  for (const auto& x : a) d *= x;
  return d;
}

void require_nondegenerate(const QuadForm& q) {
  if (q.dim() == 0 || !q.is_nondegenerate()) throw DomainError("quadratic form is degenerate");
}

}  // namespace

int hasse_invariant(const QuadForm& q, const Place& v) { return hasse_of(diagonalize(q).entries, v); }

int signature_positive(const QuadForm& q) {
  const auto a = diagonalize(q).entries;
  return static_cast<int>(std::count_if(a.begin(), a.end(), [](const Integer& x) { return x > 0; }));
}

int signature_negative(const QuadForm& q) {
  const auto a = diagonalize(q).entries;
  return static_cast<int>(std::count_if(a.begin(), a.end(), [](const Integer& x) { return x < 0; }));
}

Integer discriminant_class(const QuadForm& q) {
  require_nondegenerate(q);
  return squarefree_part(q.det());
}

bool is_locally_isotropic(const QuadForm& q, const Place& v) {
  require_nondegenerate(q);
  const auto a = diagonalize(q).entries;
  const std::size_t n = a.size();
  if (n == 1) return false;
  if (v.is_infinite()) {
    const bool pos = std::any_of(a.begin(), a.end(), [](const Integer& x) { return x > 0; });
    const bool neg = std::any_of(a.begin(), a.end(), [](const Integer& x) { return x < 0; });
    return pos && neg;
  }
  const Rational d(product(a));
  const int eps = hasse_of(a, v);
  switch (n) {
    case 2:
      return is_local_square(-d, v);
    case 3:
      return hilbert_symbol(-1, -d, v) == eps;
    case 4:
      return !is_local_square(d, v) || eps == hilbert_symbol(-1, -1, v);
    default:
      return true;
  }
}

bool is_isotropic(const QuadForm& q) {
  require_nondegenerate(q);
  if (q.dim() == 1) return false;
  if (q.dim() == 2) return is_square(-q.det());
  for (const auto& v : relevant_places(q)) {
    if (!is_locally_isotropic(q, v)) return false;
  }
  return true;
}

namespace {

// Largest r with r^2 <= t, for 0 <= t < 2^126.
__int128 isqrt128(__int128 t) {
  auto r = static_cast<__int128>(std::sqrt(static_cast<long double>(t)));
  while (r * r > t) --r;
  while ((r + 1) * (r + 1) <= t) ++r;
  return r;
}

}  // namespace

std::optional<std::vector<Rational>> isotropic_vector(const QuadForm& q, long bound) {
  require_nondegenerate(q);
  const Diagonalization D = diagonalize(q);
  const std::size_t m = D.entries.size();
  if (m < 2 || bound < 1) return std::nullopt;

  // machine-integer fast path when every term stays far below 2^126
  bool fast = bound <= (1L << 20);
  for (const auto& a : D.entries) fast = fast && abs(a) < (Integer(1) << 40);
  std::vector<__int128> small;
  if (fast) {
    for (const auto& a : D.entries) small.push_back(a.get_si());
  }
  const Integer& last = D.entries.back();
  std::optional<std::vector<Rational>> found;

  // y_1..y_{m-1} by height; y_m solved from the form
  auto attempt = [&](const std::vector<long>& y) {
    Integer root;
    if (fast) {
      __int128 s = 0;
      for (std::size_t i = 0; i + 1 < m; ++i) s -= small[i] * y[i] * y[i];
      const __int128 l = small.back();
      if (s % l != 0) return false;
      const __int128 t = s / l;
      if (t < 0) return false;
      const __int128 r = isqrt128(t);
      if (r * r != t) return false;
      root = Integer(static_cast<long>(r));
    } else {
      Integer s = 0;
      for (std::size_t i = 0; i + 1 < m; ++i) s -= D.entries[i] * y[i] * y[i];
      if (s % last != 0) return false;
      const Integer t = s / last;
      if (t < 0 || !mpz_perfect_square_p(t.get_mpz_t())) return false;
      mpz_sqrt(root.get_mpz_t(), t.get_mpz_t());
    }
    std::vector<Rational> full(y.begin(), y.end());
    full.emplace_back(root);
    found = D.transform * full;
    return true;
  };
  for (long h = 1; h <= bound; ++h) {
    if (for_each_of_height(m - 1, h, attempt)) return found;
  }
  return std::nullopt;
}

bool forms_equivalent(const QuadForm& a, const QuadForm& b) {
  require_nondegenerate(a);
  require_nondegenerate(b);
  if (a.dim() != b.dim()) return false;
  if (discriminant_class(a) != discriminant_class(b)) return false;
  if (signature_positive(a) != signature_positive(b)) return false;
  std::vector<Place> places = relevant_places(a);
  for (const auto& v : relevant_places(b)) places.push_back(v);
  for (const auto& v : places) {
    if (v.is_infinite()) continue;
    if (hasse_invariant(a, v) != hasse_invariant(b, v)) return false;
  }
  return true;
}

QuadForm gram_invariant(const QuadForm& space, const RatMatrix& vectors) {
  if (vectors.rows() != space.dim()) throw DomainError("vectors have the wrong length");
  return QuadForm(congruence(space.gram(), vectors));
}

OrbitTarget so_orbit_target(const QuadForm& f, const QuadForm& space) {
  require_nondegenerate(f);
  require_nondegenerate(space);
  if (space.dim() != f.dim() + 1) throw DomainError("space must have dimension n + 1");
  OrbitTarget out;
  out.target = orthogonal_sum(f, QuadForm::diagonal({space.det() / f.det()}));
  out.lifts = forms_equivalent(out.target, space);
  return out;
}

BrauerClass2 quaternion_class(const Rational& a, const Rational& b) {
  const QuadForm q = QuadForm::diagonal({a, b});
  BrauerClass2 out;
  for (const auto& v : relevant_places(q)) {
    if (hilbert_symbol(a, b, v) == -1) out.ramified.push_back(v);
  }
  return out;
}

BrauerClass2 spin_obstruction(const QuadForm& q) {
  require_nondegenerate(q);
  const std::size_t n = q.dim();
  if (n % 2 == 0) throw DomainError("even Clifford class is computed for odd dimension only");
  const auto a = diagonalize(q).entries;
  const Rational d(product(a));
  BrauerClass2 out;
  for (const auto& v : relevant_places(q)) {
    int c = hasse_of(a, v);
    switch (n % 8) {
      case 3:
        c *= hilbert_symbol(-1, -d, v);
        break;
      case 5:
        c *= hilbert_symbol(-1, -1, v);
        break;
      case 7:
        c *= hilbert_symbol(-1, d, v);
        break;
      default:
        break;
    }
    if (c == -1) out.ramified.push_back(v);
  }
  return out;
}

}  // namespace ait
