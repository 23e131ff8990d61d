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

#include "ait/pfaffian.hpp"

namespace ait {

namespace {

void require_skew(const RatMatrix& m) {
  if (!m.is_square() || !m.is_skew_symmetric()) throw DomainError("matrix must be square and skew-symmetric");
}

Rational pfaffian_rec(const RatMatrix& m, std::vector<std::size_t>& idx) {
  if (idx.empty()) return 1;
  const std::size_t first = idx.front();
  Rational total = 0;
  for (std::size_t k = 1; k < idx.size(); ++k) {
    const std::size_t j = idx[k];
    if (m(first, j) == 0) continue;
    std::vector<std::size_t> rest;
    for (std::size_t l = 1; l < idx.size(); ++l) {
      if (l != k) rest.push_back(idx[l]);
    }
    const Rational sub = pfaffian_rec(m, rest);
    total += (k % 2 == 1 ? 1 : -1) * m(first, j) * sub;
  }
  return total;
}

// Linear form a x + b y + c z.
using Linear = std::array<Rational, 3>;

TernaryQuadratic product(const Linear& p, const Linear& q) {
  TernaryQuadratic r;
  r[0] = p[0] * q[0];
  r[1] = p[1] * q[1];
  r[2] = p[2] * q[2];
  r[3] = p[0] * q[1] + p[1] * q[0];
  r[4] = p[0] * q[2] + p[2] * q[0];
  r[5] = p[1] * q[2] + p[2] * q[1];
  return r;
}

void accumulate(TernaryQuadratic& acc, const TernaryQuadratic& t, int sign) {
  for (std::size_t k = 0; k < 6; ++k) acc[k] += sign * t[k];
}

}  // namespace

Rational pfaffian(const RatMatrix& m) {
  require_skew(m);
  if (m.rows() % 2 != 0) throw DomainError("Pfaffian needs even dimension");
  std::vector<std::size_t> idx(m.rows());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  return pfaffian_rec(m, idx);
}

SkewTriple::SkewTriple(RatMatrix a, RatMatrix b, RatMatrix c) : A(std::move(a)), B(std::move(b)), C(std::move(c)) {
  for (const RatMatrix* x : {&A, &B, &C}) {
    require_skew(*x);
    if (x->rows() != 5) throw DomainError("triple matrices must be 5x5");
  }
}

SkewTriple SkewTriple::acted(const RatMatrix& g) const {
  const RatMatrix gt = g.transpose();
  return SkewTriple(g * A * gt, g * B * gt, g * C * gt);
}

std::array<TernaryQuadratic, 5> sub_pfaffian_forms(const SkewTriple& v) {
  auto entry = [&](std::size_t i, std::size_t j) { return Linear{v.A(i, j), v.B(i, j), v.C(i, j)}; };
  std::array<TernaryQuadratic, 5> out;
  for (std::size_t i = 0; i < 5; ++i) {
    std::vector<std::size_t> k;
    for (std::size_t j = 0; j < 5; ++j) {
      if (j != i) k.push_back(j);
    }
    // Pf of a 4x4 block: m01 m23 - m02 m13 + m03 m12
    TernaryQuadratic q{};
    accumulate(q, product(entry(k[0], k[1]), entry(k[2], k[3])), 1);
    accumulate(q, product(entry(k[0], k[2]), entry(k[1], k[3])), -1);
    accumulate(q, product(entry(k[0], k[3]), entry(k[1], k[2])), 1);
    const int sign = i % 2 == 0 ? 1 : -1;  // (-1)^{i+1} with i counted from 1
    for (auto& c : q) c *= sign;
    out[i] = q;
  }
  return out;
}

RatMatrix pi_invariant(const SkewTriple& v) {
  const auto Q = sub_pfaffian_forms(v);
  RatMatrix M(5, 6);
  for (std::size_t i = 0; i < 5; ++i) {
    for (std::size_t j = 0; j < 6; ++j) M(i, j) = Q[i][j];
  }
  std::array<Rational, 6> pi;
  for (std::size_t j = 0; j < 6; ++j) pi[j] = (j % 2 == 0 ? 1 : -1) * determinant(M.minor_without({}, {j}));
  const Rational h(1, 2);
  return RatMatrix{{pi[0], h * pi[3], h * pi[4]}, {h * pi[3], pi[1], h * pi[5]}, {h * pi[4], h * pi[5], pi[2]}};
}

bool sl5_stable(const SkewTriple& v) { return determinant(pi_invariant(v)) != 0; }

}  // namespace ait
