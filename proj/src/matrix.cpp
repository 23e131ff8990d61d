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

#include "ait/matrix.hpp"

#include <algorithm>

namespace ait {

RatMatrix::RatMatrix(std::initializer_list<std::initializer_list<Rational>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DomainError("ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RatMatrix RatMatrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
  RatMatrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols_) throw DomainError("ragged matrix rows");
    for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

RatMatrix RatMatrix::antidiagonal(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, n - 1 - i) = 1;
  return m;
}

RatMatrix RatMatrix::diagonal(const std::vector<Rational>& d) {
  RatMatrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

std::vector<Rational> RatMatrix::row(std::size_t i) const {
  return {data_.begin() + static_cast<long>(i * cols_),
          data_.begin() + static_cast<long>((i + 1) * cols_)};
}

std::vector<Rational> RatMatrix::col(std::size_t j) const {
  std::vector<Rational> c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
  return c;
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  }
  return t;
}

bool RatMatrix::is_symmetric() const { return is_square() && *this == transpose(); }

bool RatMatrix::is_skew_symmetric() const {
  return is_square() && *this == transpose().scaled(-1);
}

bool RatMatrix::is_integral() const {
  return std::all_of(data_.begin(), data_.end(), [](const Rational& q) { return q.get_den() == 1; });
}

Rational RatMatrix::trace() const {
  Rational t = 0;
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
  return t;
}

RatMatrix& RatMatrix::operator+=(const RatMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DomainError("matrix shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}

RatMatrix& RatMatrix::operator-=(const RatMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DomainError("matrix shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
  return *this;
}

RatMatrix RatMatrix::scaled(const Rational& c) const {
  RatMatrix m = *this;
  for (auto& x : m.data_) x *= c;
  return m;
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
  if (a.cols_ != b.rows_) throw DomainError("matrix shape mismatch in product");
  RatMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& x = a(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += x * b(k, j);
    }
  }
  return c;
}

std::vector<Rational> operator*(const RatMatrix& a, const std::vector<Rational>& v) {
  if (a.cols_ != v.size()) throw DomainError("matrix-vector shape mismatch");
  std::vector<Rational> r(a.rows_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t j = 0; j < a.cols_; ++j) r[i] += a(i, j) * v[j];
  }
  return r;
}

RatMatrix RatMatrix::minor_without(const std::vector<std::size_t>& drop_rows,
                                   const std::vector<std::size_t>& drop_cols) const {
  auto keep = [](std::size_t n, const std::vector<std::size_t>& drop) {
    std::vector<std::size_t> k;
    for (std::size_t i = 0; i < n; ++i) {
      if (std::find(drop.begin(), drop.end(), i) == drop.end()) k.push_back(i);
    }
    return k;
  };
  const auto kr = keep(rows_, drop_rows);
  const auto kc = keep(cols_, drop_cols);
  RatMatrix m(kr.size(), kc.size());
  for (std::size_t i = 0; i < kr.size(); ++i) {
    for (std::size_t j = 0; j < kc.size(); ++j) m(i, j) = (*this)(kr[i], kc[j]);
  }
  return m;
}

std::ostream& operator<<(std::ostream& os, const RatMatrix& m) {
  os << "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? ", " : "") << to_string(m(i, j));
    os << "]";
  }
  return os << "]";
}

namespace {

// In-place row echelon form; returns the pivot columns and the determinant sign
// bookkeeping through `swaps`.
std::vector<std::size_t> echelon(RatMatrix& m, int* swaps = nullptr) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != r) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
      if (swaps) ++*swaps;
    }
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      if (m(i, c) == 0) continue;
      const Rational f = m(i, c) / m(r, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

Rational determinant(const RatMatrix& m_in) {
  if (!m_in.is_square()) throw DomainError("determinant of a non-square matrix");
  const std::size_t n = m_in.rows();
  if (n == 0) return 1;
  RatMatrix m = m_in;
  int swaps = 0;
  const auto pivots = echelon(m, &swaps);
  if (pivots.size() < n) return 0;
  Rational d = (swaps % 2) ? -1 : 1;
  for (std::size_t i = 0; i < n; ++i) d *= m(i, i);
  return d;
}

std::size_t rank(const RatMatrix& m_in) {
  RatMatrix m = m_in;
  return echelon(m).size();
}

RatMatrix inverse(const RatMatrix& m) {
  if (!m.is_square()) throw DomainError("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  RatMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && aug(p, c) == 0) ++p;
    if (p == n) throw DomainError("matrix is singular");
    if (p != c) {
      for (std::size_t j = 0; j < 2 * n; ++j) std::swap(aug(p, j), aug(c, j));
    }
    const Rational inv = Rational(1) / aug(c, c);
    for (std::size_t j = 0; j < 2 * n; ++j) aug(c, j) *= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || aug(i, c) == 0) continue;
      const Rational f = aug(i, c);
      for (std::size_t j = 0; j < 2 * n; ++j) aug(i, j) -= f * aug(c, j);
    }
  }
  RatMatrix r(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) r(i, j) = aug(i, n + j);
  }
  return r;
}

std::optional<std::vector<Rational>> solve(const RatMatrix& m, const std::vector<Rational>& b) {
  if (!m.is_square() || b.size() != m.rows()) throw DomainError("solve: shape mismatch");
  if (determinant(m) == 0) return std::nullopt;
  return inverse(m) * b;
}

std::vector<std::vector<Rational>> kernel(const RatMatrix& m_in) {
  RatMatrix m = m_in;
  const auto pivots = echelon(m);
  // back-substitute to reduced form
  for (std::size_t r = pivots.size(); r-- > 0;) {
    const std::size_t c = pivots[r];
    const Rational inv = Rational(1) / m(r, c);
    for (std::size_t j = 0; j < m.cols(); ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < r; ++i) {
      if (m(i, c) == 0) continue;
      const Rational f = m(i, c);
      for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
  }
  std::vector<std::vector<Rational>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (std::find(pivots.begin(), pivots.end(), free) != pivots.end()) continue;
    std::vector<Rational> v(m.cols());
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

RatMatrix power(const RatMatrix& m, unsigned e) {
  RatMatrix r = RatMatrix::identity(m.rows());
  for (unsigned i = 0; i < e; ++i) r = r * m;
  return r;
}

RatPoly characteristic_polynomial(const RatMatrix& a) {
  if (!a.is_square()) throw DomainError("characteristic polynomial of a non-square matrix");
  // Faddeev-LeVerrier
  const std::size_t n = a.rows();
  std::vector<Rational> c(n + 1);
  c[n] = 1;
  RatMatrix mk(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    mk = a * mk;
    for (std::size_t i = 0; i < n; ++i) mk(i, i) += c[n - k + 1];
    c[n - k] = -(a * mk).trace() / static_cast<long>(k);
  }
  return RatPoly(std::move(c));
}

RatMatrix evaluate(const RatPoly& p, const RatMatrix& m) {
  RatMatrix acc(m.rows(), m.cols());
  for (int i = p.degree(); i >= 0; --i) {
    acc = acc * m;
    for (std::size_t k = 0; k < m.rows(); ++k) acc(k, k) += p[i];
  }
  return acc;
}

RatMatrix congruence(const RatMatrix& m, const RatMatrix& p) { return p.transpose() * m * p; }

// ---------------------------------------------------------------------------

namespace {

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

IntLattice::IntLattice(const std::vector<std::vector<Integer>>& generators, std::size_t dim)
    : dim_(dim) {
  std::vector<std::vector<Integer>> rows;
  for (const auto& g : generators) {
    if (g.size() != dim) throw DomainError("lattice generator has wrong length");
    rows.push_back(g);
  }
  std::size_t r = 0;
  for (std::size_t c = 0; c < dim && r < rows.size(); ++c) {
    // gcd elimination in column c over rows r..end
    while (true) {
      std::size_t best = rows.size();
      for (std::size_t i = r; i < rows.size(); ++i) {
        if (rows[i][c] != 0 && (best == rows.size() || abs(rows[i][c]) < abs(rows[best][c]))) best = i;
      }
      if (best == rows.size()) break;
      std::swap(rows[r], rows[best]);
      bool done = true;
      for (std::size_t i = r + 1; i < rows.size(); ++i) {
        if (rows[i][c] == 0) continue;
        const Integer q = floor_div(rows[i][c], rows[r][c]);
        for (std::size_t j = c; j < dim; ++j) rows[i][j] -= q * rows[r][j];
        if (rows[i][c] != 0) done = false;
      }
      if (done) break;
    }
    if (rows[r][c] == 0) continue;
    if (rows[r][c] < 0) {
      for (auto& x : rows[r]) x = -x;
    }
    for (std::size_t i = 0; i < r; ++i) {
      const Integer q = floor_div(rows[i][c], rows[r][c]);
      if (q == 0) continue;
      for (std::size_t j = c; j < dim; ++j) rows[i][j] -= q * rows[r][j];
    }
    ++r;
  }
  rows.resize(r);
  basis_ = std::move(rows);
}

Integer IntLattice::index() const {
  if (rank() != dim_) throw DomainError("index of a lattice that is not full rank");
  Integer d = 1;
  for (std::size_t i = 0; i < dim_; ++i) d *= basis_[i][i];
  return abs(d);
}

bool IntLattice::contains(const std::vector<Integer>& v) const {
  std::vector<Integer> w = v;
  std::size_t c = 0;
  for (const auto& row : basis_) {
    while (c < dim_ && row[c] == 0) {
      if (w[c] != 0) return false;
      ++c;
    }
    if (w[c] % row[c] != 0) return false;
    const Integer q = w[c] / row[c];
    for (std::size_t j = c; j < dim_; ++j) w[j] -= q * row[j];
    ++c;
  }
  return std::all_of(w.begin(), w.end(), [](const Integer& x) { return x == 0; });
}

bool IntLattice::contains(const IntLattice& other) const {
  return std::all_of(other.basis_.begin(), other.basis_.end(),
                     [&](const auto& v) { return contains(v); });
}

IntLattice hnf(const std::vector<std::vector<Integer>>& rows, std::size_t dim) {
  return IntLattice(rows, dim);
}

}  // namespace ait
