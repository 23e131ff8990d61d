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

#include "ait/factor.hpp"

#include <algorithm>
#include <functional>
#include <random>

namespace ait {

namespace {

// ---------------------------------------------------------------------------
// Polynomials over F_p, p an odd prime below 2^31, low degree first.

using u64 = std::uint64_t;
using PolyP = std::vector<u64>;

struct Fp {
  u64 p;

  u64 add(u64 a, u64 b) const { return (a + b) % p; }
  u64 sub(u64 a, u64 b) const { return (a + p - b) % p; }
  u64 mul(u64 a, u64 b) const { return (a * b) % p; }
  u64 pow(u64 a, u64 e) const {
    u64 r = 1;
    a %= p;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  u64 inv(u64 a) const { return pow(a, p - 2); }

  static void trim(PolyP& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
  }
  static int deg(const PolyP& a) { return static_cast<int>(a.size()) - 1; }

  PolyP reduce(const RatPoly& f) const {
    PolyP out;
    const Integer P(static_cast<unsigned long>(p));
    for (const auto& c : f.coeffs()) {
      Integer n = c.get_num() % P;
      if (n < 0) n += P;
      Integer d = c.get_den() % P;
      out.push_back(mul(n.get_ui(), inv(d.get_ui())));
    }
    trim(out);
    return out;
  }

  PolyP sub(const PolyP& a, const PolyP& b) const {
    PolyP r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = sub(r[i], b[i]);
    trim(r);
    return r;
  }

  PolyP mul(const PolyP& a, const PolyP& b) const {
    if (a.empty() || b.empty()) return {};
    PolyP r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] == 0) continue;
      for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    }
    trim(r);
    return r;
  }

  std::pair<PolyP, PolyP> divmod(PolyP a, const PolyP& b) const {
    const int db = deg(b);
    if (deg(a) < db) return {{}, a};
    PolyP q(static_cast<std::size_t>(deg(a) - db + 1), 0);
    const u64 il = inv(b.back());
    for (int i = deg(a); i >= db; --i) {
      u64 c = mul(a[static_cast<std::size_t>(i)], il);
      q[static_cast<std::size_t>(i - db)] = c;
      if (c == 0) continue;
      for (int j = 0; j <= db; ++j) {
        auto& slot = a[static_cast<std::size_t>(i - db + j)];
        slot = sub(slot, mul(c, b[static_cast<std::size_t>(j)]));
      }
    }
    a.resize(static_cast<std::size_t>(db));
    trim(a);
    trim(q);
    return {q, a};
  }

  PolyP rem(const PolyP& a, const PolyP& b) const { return divmod(a, b).second; }

  PolyP monic(PolyP a) const {
    if (a.empty()) return a;
    const u64 il = inv(a.back());
    for (auto& c : a) c = mul(c, il);
    return a;
  }

  PolyP gcd(PolyP a, PolyP b) const {
    while (!b.empty()) {
      PolyP r = rem(a, b);
      a = std::move(b);
      b = std::move(r);
    }
    return monic(a);
  }

  // s*a + t*b = 1 for coprime a, b.
  std::pair<PolyP, PolyP> bezout(const PolyP& a, const PolyP& b) const {
    PolyP r0 = a, r1 = b, s0{1}, s1{}, t0{}, t1{1};
    while (!r1.empty()) {
      auto [q, r] = divmod(r0, r1);
      PolyP s2 = sub(s0, mul(q, s1));
      PolyP t2 = sub(t0, mul(q, t1));
      r0 = std::move(r1);
      r1 = std::move(r);
      s0 = std::move(s1);
      s1 = std::move(s2);
      t0 = std::move(t1);
      t1 = std::move(t2);
    }
    const u64 il = inv(r0.back());
    for (auto& c : s0) c = mul(c, il);
    for (auto& c : t0) c = mul(c, il);
    return {s0, t0};
  }

  PolyP derivative(const PolyP& a) const {
    PolyP r;
    for (std::size_t i = 1; i < a.size(); ++i) r.push_back(mul(a[i], i % p));
    trim(r);
    return r;
  }

  PolyP powmod(PolyP base, Integer e, const PolyP& m) const {
    PolyP r{1};
    base = rem(base, m);
    while (e > 0) {
      if (mpz_odd_p(e.get_mpz_t())) r = rem(mul(r, base), m);
      base = rem(mul(base, base), m);
      e >>= 1;
    }
    return r;
  }
};

std::vector<std::pair<PolyP, int>> distinct_degree(const Fp& F, PolyP f) {
  std::vector<std::pair<PolyP, int>> out;
  const PolyP x{0, 1};
  PolyP h = x;
  for (int d = 1; 2 * d <= Fp::deg(f); ++d) {
    h = F.powmod(h, Integer(static_cast<unsigned long>(F.p)), f);
    PolyP g = F.gcd(f, F.sub(h, x));
    if (Fp::deg(g) > 0) {
      out.emplace_back(g, d);
      f = F.divmod(f, g).first;
      h = F.rem(h, f);
    }
  }
  if (Fp::deg(f) > 0) out.emplace_back(F.monic(f), Fp::deg(f));
  return out;
}

void equal_degree(const Fp& F, const PolyP& g, int d, std::mt19937_64& rng,
                  std::vector<PolyP>& out) {
  if (Fp::deg(g) == d) {
    out.push_back(g);
    return;
  }
  const Integer q = pow(Integer(static_cast<unsigned long>(F.p)), static_cast<unsigned long>(d));
  const Integer e = (q - 1) / 2;
  std::uniform_int_distribution<u64> coeff(0, F.p - 1);
  while (true) {
    PolyP a(static_cast<std::size_t>(Fp::deg(g)), 0);
    for (auto& c : a) c = coeff(rng);
    Fp::trim(a);
    if (Fp::deg(a) < 1) continue;
    PolyP b = F.sub(F.powmod(a, e, g), PolyP{1});
    PolyP h = F.gcd(g, b);
    if (Fp::deg(h) > 0 && Fp::deg(h) < Fp::deg(g)) {
      equal_degree(F, h, d, rng, out);
      equal_degree(F, F.divmod(g, h).first, d, rng, out);
      return;
    }
  }
}

std::vector<PolyP> factor_mod_p(const Fp& F, const PolyP& f) {
  std::mt19937_64 rng(0x5eed'0f'ac7ULL ^ F.p);
  std::vector<PolyP> out;
  for (const auto& [g, d] : distinct_degree(F, F.monic(f))) equal_degree(F, g, d, rng, out);
  return out;
}

bool good_prime(const Fp& F, const RatPoly& f, PolyP& reduced) {
  Integer lc = f.leading().get_num();
  if (lc % static_cast<unsigned long>(F.p) == 0) return false;
  reduced = F.reduce(f);
  return Fp::deg(F.gcd(reduced, F.derivative(reduced))) == 0;
}

bool is_prime_u64(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Integer polynomials modulo m = p^k.

using PolyZ = std::vector<Integer>;

Integer mod(const Integer& a, const Integer& m) {
  Integer r = a % m;
  if (r < 0) r += m;
  return r;
}

PolyZ to_z(const PolyP& a) {
  PolyZ r;
  for (auto c : a) r.emplace_back(static_cast<unsigned long>(c));
  return r;
}

PolyP to_p(const PolyZ& a, const Fp& F) {
  PolyP r;
  const Integer P(static_cast<unsigned long>(F.p));
  for (const auto& c : a) r.push_back(mod(c, P).get_ui());
  Fp::trim(r);
  return r;
}

PolyZ mul_z(const PolyZ& a, const PolyZ& b, const Integer& m) {
  if (a.empty() || b.empty()) return {};
  PolyZ r(a.size() + b.size() - 1, Integer(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  for (auto& c : r) c = mod(c, m);
  return r;
}

PolyZ integer_coeffs(const RatPoly& f) {
  PolyZ r;
  for (const auto& c : f.coeffs()) r.push_back(c.get_num());
  return r;
}

// Lift f = g*h (mod p), g monic, to modulus p^k. On return g is monic and
// f = g*h (mod p^k).
void hensel_lift(const Fp& F, const PolyZ& f, PolyZ& g, PolyZ& h, int k) {
  const Integer P(static_cast<unsigned long>(F.p));
  const PolyP t = F.bezout(to_p(g, F), to_p(h, F)).second;
  Integer m = P;
  for (int j = 1; j < k; ++j) {
    const Integer next = m * P;
    PolyZ gh = mul_z(g, h, next);
    PolyZ e(std::max(f.size(), gh.size()), Integer(0));
    for (std::size_t i = 0; i < f.size(); ++i) e[i] += f[i];
    for (std::size_t i = 0; i < gh.size(); ++i) e[i] -= gh[i];
    for (auto& c : e) c = mod(c, next) / m;
    const PolyP ep = to_p(e, F);
    const PolyP gp = to_p(g, F);
    // g*dh + h*dg = e (mod p) with deg dg < deg g
    const PolyP dg = F.rem(F.mul(t, ep), gp);
    const PolyP dh = F.divmod(F.sub(ep, F.mul(to_p(h, F), dg)), gp).first;
    g.resize(std::max(g.size(), dg.size()), Integer(0));
    for (std::size_t i = 0; i < dg.size(); ++i) {
      g[i] = mod(g[i] + m * static_cast<unsigned long>(dg[i]), next);
    }
    h.resize(std::max(h.size(), dh.size()), Integer(0));
    for (std::size_t i = 0; i < dh.size(); ++i) {
      h[i] = mod(h[i] + m * static_cast<unsigned long>(dh[i]), next);
    }
    m = next;
  }
}

RatPoly symmetric_lift(const PolyZ& a, const Integer& m) {
  std::vector<Rational> v;
  const Integer half = m / 2;
  for (const auto& c : a) {
    Integer r = mod(c, m);
    if (r > half) r -= m;
    v.emplace_back(r);
  }
  return RatPoly(std::move(v));
}

bool canonical_less(const RatPoly& a, const RatPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int i = 0; i <= a.degree(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

// Irreducible primitive integer factors of a squarefree primitive integer f.
std::vector<RatPoly> zassenhaus(RatPoly f) {
  if (f.degree() <= 1) return {f};

  // Prime with the fewest modular factors among the first few good ones.
  Fp best{0};
  std::vector<PolyP> best_factors;
  int tried = 0;
  for (u64 p = 3; tried < 6; p += 2) {
    if (!is_prime_u64(p)) continue;
    Fp F{p};
    PolyP fp;
    if (!good_prime(F, f, fp)) continue;
    ++tried;
    auto fs = factor_mod_p(F, fp);
    if (best.p == 0 || fs.size() < best_factors.size()) {
      best = F;
      best_factors = std::move(fs);
    }
    if (best_factors.size() == 1) break;
  }
  if (best_factors.size() == 1) return {f};

  // Landau-Mignotte: every factor of degree <= n has coefficients bounded by
  // 2^n ||f||_2; multiplied by |lc| for the lc-normalised candidates.
  Integer norm2 = 0;
  for (const auto& c : f.coeffs()) norm2 += c.get_num() * c.get_num();
  Integer root;
  mpz_sqrt(root.get_mpz_t(), norm2.get_mpz_t());
  const Integer bound =
      2 * pow(Integer(2), static_cast<unsigned long>(f.degree())) * (root + 1) * abs(f.leading().get_num());
  const Integer P(static_cast<unsigned long>(best.p));
  int k = 1;
  Integer modulus = P;
  while (modulus <= bound) {
    modulus *= P;
    ++k;
  }

  // Multifactor lift by peeling one monic factor at a time.
  std::vector<PolyZ> lifted;
  PolyZ rest = integer_coeffs(f);
  for (auto& c : rest) c = mod(c, modulus);
  for (std::size_t i = 0; i + 1 < best_factors.size(); ++i) {
    PolyZ g = to_z(best_factors[i]);
    PolyP rest_p = to_p(rest, best);
    PolyP h0 = best.divmod(rest_p, best_factors[i]).first;
    PolyZ h = to_z(h0);
    hensel_lift(best, rest, g, h, k);
    lifted.push_back(g);
    rest = h;
  }
  {
    // Remaining factor made monic modulo p^k.
    Integer lc = rest.back();
    Integer inv;
    mpz_invert(inv.get_mpz_t(), lc.get_mpz_t(), modulus.get_mpz_t());
    for (auto& c : rest) c = mod(c * inv, modulus);
    lifted.push_back(rest);
  }

  // Subset recombination.
  std::vector<RatPoly> out;
  RatPoly remaining = f;
  std::vector<PolyZ> pool = lifted;
  std::size_t s = 1;
  while (2 * s <= pool.size()) {
    bool found = false;
    std::vector<std::size_t> idx(s);
    std::function<bool(std::size_t, std::size_t)> choose = [&](std::size_t start, std::size_t depth) {
      if (depth == s) {
        PolyZ prod{mod(remaining.leading().get_num(), modulus)};
        for (auto i : idx) prod = mul_z(prod, pool[i], modulus);
        RatPoly cand = primitive_integer_part(symmetric_lift(prod, modulus));
        if (cand.degree() < 1) return false;
        auto [q, r] = divmod(remaining, cand);
        if (!r.is_zero()) return false;
        out.push_back(cand);
        remaining = primitive_integer_part(q);
        for (auto it = idx.rbegin(); it != idx.rend(); ++it) pool.erase(pool.begin() + static_cast<long>(*it));
        return true;
      }
      for (std::size_t i = start; i < pool.size(); ++i) {
        idx[depth] = i;
        if (choose(i + 1, depth + 1)) return true;
      }
      return false;
    };
    found = choose(0, 0);
    if (!found) ++s;
  }
  if (remaining.degree() > 0) out.push_back(remaining);
  return out;
}

}  // namespace

RatPoly Factorization::expand() const {
  RatPoly r = RatPoly::constant(unit);
  for (const auto& [f, m] : factors) {
    for (int i = 0; i < m; ++i) r *= f;
  }
  return r;
}

std::vector<RatPoly> irreducible_factors(const RatPoly& squarefree) {
  if (squarefree.degree() < 1) return {};
  std::vector<RatPoly> out;
  for (const auto& g : zassenhaus(primitive_integer_part(squarefree))) out.push_back(g.monic());
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

Factorization factor_rational_poly(const RatPoly& p) {
  if (p.is_zero()) throw DomainError("cannot factor the zero polynomial");
  Factorization result{p.leading(), {}};
  for (const auto& [part, mult] : squarefree_decomposition(p)) {
    for (auto& g : irreducible_factors(part)) result.factors.emplace_back(std::move(g), mult);
  }
  std::sort(result.factors.begin(), result.factors.end(), [](const auto& a, const auto& b) {
    if (a.first == b.first) return a.second < b.second;
    return canonical_less(a.first, b.first);
  });
  return result;
}

std::vector<int> degree_pattern_mod_p(const RatPoly& p, std::uint32_t prime) {
  Fp F{prime};
  PolyP reduced;
  if (prime == 2 || !is_prime_u64(prime)) throw DomainError("degree pattern needs an odd prime");
  RatPoly f = primitive_integer_part(p);
  if (!good_prime(F, f, reduced)) return {};
  std::vector<int> out;
  for (const auto& g : factor_mod_p(F, reduced)) out.push_back(Fp::deg(g));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace ait
