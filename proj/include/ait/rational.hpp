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

#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ait {

using Integer = mpz_class;
/// Always canonical: reduced, positive denominator, zero stored as 0/1.
using Rational = mpq_class;

/// Raised when an input violates a documented precondition.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

inline Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw DomainError("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline int sign(const Rational& q) { return sgn(q); }
inline int sign(const Integer& z) { return sgn(z); }

Integer pow(const Integer& base, unsigned long exp);
Rational pow(const Rational& base, long exp);

/// Prime factorization of |n|, primes ascending. n = 0 is rejected.
std::vector<std::pair<Integer, int>> factor_integer(const Integer& n);

/// Distinct primes dividing numerator or denominator of q.
std::vector<Integer> prime_support(const Rational& q);

/// Squarefree integer s with q = s * r^2 for some rational r.
Integer squarefree_part(const Rational& q);

bool is_square(const Rational& q);
/// Nonnegative square root when q is a rational square.
Rational sqrt_exact(const Rational& q);

/// p-adic valuation of a nonzero rational.
long valuation(const Rational& q, const Integer& p);

Integer lcm_of_denominators(const std::vector<Rational>& v);

}  // namespace ait
