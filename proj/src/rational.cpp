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

#include "ait/rational.hpp"

#include <algorithm>
#include <cctype>

namespace ait {

Rational parse_rational(std::string_view text) {
  std::string s(text);
  s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }),
          s.end());
  if (s.empty()) throw DomainError("empty rational literal");
  auto valid_int = [](const std::string& t) {
    if (t.empty()) return false;
    std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) return false;
    return std::all_of(t.begin() + static_cast<long>(i), t.end(),
                       [](unsigned char c) { return std::isdigit(c); });
  };
  auto strip_plus = [](std::string t) {
    if (!t.empty() && t[0] == '+') t.erase(0, 1);
    return t;
  };
  const auto slash = s.find('/');
  if (slash == std::string::npos) {
    if (!valid_int(s)) throw DomainError("malformed rational literal '" + s + "'");
    return Rational(Integer(strip_plus(s)));
  }
  std::string num = s.substr(0, slash);
  std::string den = s.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den)) {
    throw DomainError("malformed rational literal '" + s + "'");
  }
  return make_rational(Integer(strip_plus(num)), Integer(strip_plus(den)));
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_string(const Integer& z) { return z.get_str(); }

Integer pow(const Integer& base, unsigned long exp) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

Rational pow(const Rational& base, long exp) {
  if (exp < 0) {
    if (base == 0) throw DomainError("zero to a negative power");
    return pow(Rational(1) / base, -exp);
  }
  const auto e = static_cast<unsigned long>(exp);
  return make_rational(pow(base.get_num(), e), pow(base.get_den(), e));
}

namespace {

Integer pollard_rho(const Integer& n) {
  if (n % 2 == 0) return 2;
  for (unsigned long c = 1;; ++c) {
    Integer x = 2, y = 2, d = 1;
    auto step = [&](const Integer& v) {
      Integer r = (v * v + c) % n;
      return r;
    };
    while (d == 1) {
      x = step(x);
      y = step(step(y));
      Integer diff = abs(x - y);
      mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
    }
    if (d != n) return d;
  }
}

void split_into(const Integer& n, std::vector<Integer>& out) {
  if (n == 1) return;
  if (mpz_probab_prime_p(n.get_mpz_t(), 30) > 0) {
    out.push_back(n);
    return;
  }
  Integer d = pollard_rho(n);
  split_into(d, out);
  split_into(n / d, out);
}

}  // namespace

std::vector<std::pair<Integer, int>> factor_integer(const Integer& n_in) {
  if (n_in == 0) throw DomainError("cannot factor zero");
  Integer n = abs(n_in);
  std::vector<Integer> primes;
  for (unsigned long p = 2; p < 10000 && Integer(p) * p <= n; ++p) {
    while (n % p == 0) {
      primes.emplace_back(p);
      n /= p;
    }
  }
  split_into(n, primes);
  std::sort(primes.begin(), primes.end());
  std::vector<std::pair<Integer, int>> out;
  for (const auto& p : primes) {
    if (!out.empty() && out.back().first == p) {
      ++out.back().second;
    } else {
      out.emplace_back(p, 1);
    }
  }
  return out;
}

std::vector<Integer> prime_support(const Rational& q) {
  std::vector<Integer> out;
  if (q == 0) return out;
  for (const auto& [p, e] : factor_integer(q.get_num())) out.push_back(p);
  for (const auto& [p, e] : factor_integer(q.get_den())) out.push_back(p);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Integer squarefree_part(const Rational& q) {
  if (q == 0) throw DomainError("squarefree part of zero");
  // q * den^2 = num * den is an integer in the same square class.
  Integer m = q.get_num() * q.get_den();
  Integer s = sgn(m);
  for (const auto& [p, e] : factor_integer(m)) {
    if (e % 2 == 1) s *= p;
  }
  return s;
}

bool is_square(const Rational& q) {
  if (q < 0) return false;
  return mpz_perfect_square_p(q.get_num().get_mpz_t()) != 0 &&
         mpz_perfect_square_p(q.get_den().get_mpz_t()) != 0;
}

Rational sqrt_exact(const Rational& q) {
  if (!is_square(q)) throw DomainError("not a rational square: " + to_string(q));
  Integer a, b;
  mpz_sqrt(a.get_mpz_t(), q.get_num().get_mpz_t());
  mpz_sqrt(b.get_mpz_t(), q.get_den().get_mpz_t());
  return make_rational(a, b);
}

long valuation(const Rational& q, const Integer& p) {
  if (q == 0) throw DomainError("valuation of zero");
  long v = 0;
  Integer n = q.get_num();
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  Integer d = q.get_den();
  while (d % p == 0) {
    d /= p;
    --v;
  }
  return v;
}

Integer lcm_of_denominators(const std::vector<Rational>& v) {
  Integer l = 1;
  for (const auto& q : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den().get_mpz_t());
  return l;
}

}  // namespace ait
