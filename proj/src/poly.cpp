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

#include "ait/poly.hpp"

#include <sstream>

namespace ait {

RatPoly::RatPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

RatPoly::RatPoly(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { trim(); }

RatPoly RatPoly::constant(const Rational& c) { return RatPoly({c}); }

RatPoly RatPoly::monomial(const Rational& c, int degree) {
  std::vector<Rational> v(static_cast<std::size_t>(degree) + 1);
  v.back() = c;
  return RatPoly(std::move(v));
}

RatPoly RatPoly::linear_root(const Rational& r) { return RatPoly({-r, Rational(1)}); }

void RatPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational RatPoly::operator[](int i) const {
  if (i < 0 || i > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(i)];
}

Rational RatPoly::leading() const { return is_zero() ? Rational(0) : coeffs_.back(); }

Rational RatPoly::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

RatPoly RatPoly::derivative() const {
  if (degree() < 1) return {};
  std::vector<Rational> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<long>(i);
  return RatPoly(std::move(d));
}

RatPoly RatPoly::monic() const {
  if (is_zero()) return {};
  return scaled(Rational(1) / leading());
}

RatPoly RatPoly::operator-() const { return scaled(-1); }

RatPoly RatPoly::scaled(const Rational& c) const {
  std::vector<Rational> v = coeffs_;
  for (auto& x : v) x *= c;
  return RatPoly(std::move(v));
}

RatPoly RatPoly::compose(const RatPoly& q) const {
  RatPoly acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * q + constant(*it);
  return acc;
}

RatPoly& RatPoly::operator+=(const RatPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

RatPoly& RatPoly::operator-=(const RatPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

RatPoly& RatPoly::operator*=(const RatPoly& o) {
  if (is_zero() || o.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rational> r(coeffs_.size() + o.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) r[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  coeffs_ = std::move(r);
  trim();
  return *this;
}

std::string RatPoly::str(char var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Rational& c = coeffs_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    Rational mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0 || mag != 1) os << to_string(mag);
    if (i > 0) {
      if (mag != 1) os << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const RatPoly& p) { return os << p.str(); }

std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b) {
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  if (a.degree() < b.degree()) return {RatPoly{}, a};
  std::vector<Rational> rem = a.coeffs();
  std::vector<Rational> quo(static_cast<std::size_t>(a.degree() - b.degree() + 1));
  const Rational inv_lc = Rational(1) / b.leading();
  const int db = b.degree();
  for (int i = a.degree(); i >= db; --i) {
    Rational c = rem[static_cast<std::size_t>(i)] * inv_lc;
    quo[static_cast<std::size_t>(i - db)] = c;
    if (c == 0) continue;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(i - db + j)] -= c * b[j];
  }
  rem.resize(static_cast<std::size_t>(db));
  return {RatPoly(std::move(quo)), RatPoly(std::move(rem))};
}

RatPoly operator/(const RatPoly& a, const RatPoly& b) { return divmod(a, b).first; }
RatPoly operator%(const RatPoly& a, const RatPoly& b) { return divmod(a, b).second; }

RatPoly gcd(const RatPoly& a, const RatPoly& b) {
  RatPoly x = a, y = b;
  while (!y.is_zero()) {
    RatPoly r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

ExtendedGcd extended_gcd(const RatPoly& a, const RatPoly& b) {
  RatPoly r0 = a, r1 = b;
  RatPoly s0 = RatPoly::constant(1), s1;
  RatPoly t0, t1 = RatPoly::constant(1);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    RatPoly s2 = s0 - q * s1;
    RatPoly t2 = t0 - q * t1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {RatPoly{}, RatPoly{}, RatPoly{}};
  const Rational inv = Rational(1) / r0.leading();
  return {r0.scaled(inv), s0.scaled(inv), t0.scaled(inv)};
}

namespace {

// lc(b)^(deg a - deg b + 1) * a mod b
RatPoly pseudo_remainder(const RatPoly& a, const RatPoly& b) {
  const long delta = a.degree() - b.degree();
  return (a.scaled(pow(b.leading(), delta + 1))) % b;
}

}  // namespace

Rational resultant(const RatPoly& p, const RatPoly& q) {
  if (p.is_zero() && q.is_zero()) throw DomainError("resultant of two zero polynomials");
  if (p.is_zero() || q.is_zero()) return 0;
  if (p.degree() == 0) return pow(p.leading(), q.degree());
  if (q.degree() == 0) return pow(q.leading(), p.degree());

  RatPoly a = p, b = q;
  Rational s = 1;
  if (a.degree() < b.degree()) {
    std::swap(a, b);
    if (a.degree() % 2 == 1 && b.degree() % 2 == 1) s = -1;
  }
  Rational g = 1, h = 1;
  while (true) {
    const long delta = a.degree() - b.degree();
    if (a.degree() % 2 == 1 && b.degree() % 2 == 1) s = -s;
    RatPoly r = pseudo_remainder(a, b);
    a = std::move(b);
    b = r.scaled(Rational(1) / (g * pow(h, delta)));
    g = a.leading();
    h = pow(h, 1 - delta) * pow(g, delta);
    if (b.is_zero()) return 0;
    if (b.degree() == 0) {
      h = pow(h, 1 - a.degree()) * pow(b.leading(), a.degree());
      return s * h;
    }
  }
}

Rational discriminant(const RatPoly& p) {
  const int n = p.degree();
  if (n < 1) throw DomainError("discriminant of a constant polynomial");
  Rational r = resultant(p, p.derivative()) / p.leading();
  return (static_cast<long>(n) * (n - 1) / 2) % 2 == 0 ? r : Rational(-r);
}

bool is_squarefree(const RatPoly& p) {
  if (p.is_zero()) return false;
  return gcd(p, p.derivative()).degree() <= 0;
}

std::vector<std::pair<RatPoly, int>> squarefree_decomposition(const RatPoly& p) {
  if (p.is_zero()) throw DomainError("squarefree decomposition of zero");
  std::vector<std::pair<RatPoly, int>> out;
  if (p.degree() == 0) return out;
  RatPoly f = p.monic();
  RatPoly fp = f.derivative();
  RatPoly a = gcd(f, fp);
  RatPoly b = f / a;
  RatPoly c = fp / a;
  RatPoly d = c - b.derivative();
  int i = 1;
  while (b.degree() > 0) {
    RatPoly s = gcd(b, d);
    b = b / s;
    c = d / s;
    d = c - b.derivative();
    if (s.degree() > 0) out.emplace_back(s.monic(), i);
    ++i;
  }
  return out;
}

int real_root_count(const RatPoly& p) {
  if (p.is_zero()) throw DomainError("real root count of the zero polynomial");
  if (!is_squarefree(p)) throw DomainError("real_root_count requires a squarefree polynomial");
  if (p.degree() == 0) return 0;
  std::vector<RatPoly> chain{p, p.derivative()};
  while (chain.back().degree() > 0) {
    RatPoly r = chain[chain.size() - 2] % chain.back();
    if (r.is_zero()) break;
    chain.push_back(-r);
  }
  auto changes = [&](bool at_plus_infinity) {
    int count = 0, last = 0;
    for (const auto& q : chain) {
      int s = sgn(q.leading());
      if (!at_plus_infinity && q.degree() % 2 == 1) s = -s;
      if (s == 0) continue;
      if (last != 0 && s != last) ++count;
      last = s;
    }
    return count;
  };
  return changes(false) - changes(true);
}

RatPoly primitive_integer_part(const RatPoly& p) {
  if (p.is_zero()) return {};
  Integer l = lcm_of_denominators(p.coeffs());
  std::vector<Rational> v;
  Integer content = 0;
  for (const auto& c : p.coeffs()) {
    Integer z = Rational(c * l).get_num();
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), z.get_mpz_t());
    v.emplace_back(z);
  }
  for (auto& c : v) c /= content;
  return RatPoly(std::move(v));
}

}  // namespace ait
