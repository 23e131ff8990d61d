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

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <vector>

#include "ait/poly.hpp"
#include "ait/rational.hpp"

namespace ait {

/// Dense row-major matrix over Q.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  RatMatrix(std::initializer_list<std::initializer_list<Rational>> rows);
  static RatMatrix identity(std::size_t n);
  static RatMatrix from_rows(const std::vector<std::vector<Rational>>& rows);
  /// 1 on the antidiagonal.
  static RatMatrix antidiagonal(std::size_t n);
  static RatMatrix diagonal(const std::vector<Rational>& d);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::vector<Rational> row(std::size_t i) const;
  std::vector<Rational> col(std::size_t j) const;

  RatMatrix transpose() const;
  bool is_symmetric() const;
  bool is_skew_symmetric() const;
  bool is_integral() const;
  Rational trace() const;

  RatMatrix& operator+=(const RatMatrix& o);
  RatMatrix& operator-=(const RatMatrix& o);
  RatMatrix scaled(const Rational& c) const;

  friend RatMatrix operator+(RatMatrix a, const RatMatrix& b) { return a += b; }
  friend RatMatrix operator-(RatMatrix a, const RatMatrix& b) { return a -= b; }
  friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
  friend std::vector<Rational> operator*(const RatMatrix& a, const std::vector<Rational>& v);
  friend bool operator==(const RatMatrix& a, const RatMatrix& b) = default;

  /// Submatrix with the listed rows and columns removed.
  RatMatrix minor_without(const std::vector<std::size_t>& drop_rows,
                          const std::vector<std::size_t>& drop_cols) const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rational> data_;
};

std::ostream& operator<<(std::ostream& os, const RatMatrix& m);

Rational determinant(const RatMatrix& m);
std::size_t rank(const RatMatrix& m);
/// Throws DomainError when singular.
RatMatrix inverse(const RatMatrix& m);
/// Unique solution of m x = b; empty when m is singular.
std::optional<std::vector<Rational>> solve(const RatMatrix& m, const std::vector<Rational>& b);
/// Basis of the right kernel {x : m x = 0}.
std::vector<std::vector<Rational>> kernel(const RatMatrix& m);
RatMatrix power(const RatMatrix& m, unsigned e);
/// det(x I - m), monic of degree n.
RatPoly characteristic_polynomial(const RatMatrix& m);
/// p(m) for a polynomial p.
RatMatrix evaluate(const RatPoly& p, const RatMatrix& m);
/// Congruence P^T M P.
RatMatrix congruence(const RatMatrix& m, const RatMatrix& p);

/// Full-rank or not, a Z-lattice given by generating rows; always stored in
/// the unique row Hermite normal form (pivots positive, entries above each
/// pivot reduced into [0, pivot)).
class IntLattice {
 public:
  IntLattice() = default;
  /// Rows are arbitrary integer generators (need not be independent).
  explicit IntLattice(const std::vector<std::vector<Integer>>& generators, std::size_t dim);

  std::size_t dim() const { return dim_; }
  std::size_t rank() const { return basis_.size(); }
  const std::vector<std::vector<Integer>>& basis() const { return basis_; }
  /// |det| of the basis; only for full rank.
  Integer index() const;
  bool contains(const std::vector<Integer>& v) const;
  bool contains(const IntLattice& other) const;

  friend bool operator==(const IntLattice& a, const IntLattice& b) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<std::vector<Integer>> basis_;
};

/// Row Hermite normal form of the lattice spanned by the rows.
IntLattice hnf(const std::vector<std::vector<Integer>>& rows, std::size_t dim);
inline IntLattice hnf(const IntLattice& l) { return IntLattice(l.basis(), l.dim()); }

}  // namespace ait
