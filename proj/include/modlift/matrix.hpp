#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "modlift/field.hpp"

namespace modlift {

using Elem = PrimeField::Elem;
using Vec = std::vector<Elem>;

/// Dense row-major matrix of field residues. Vectors are rows; a linear map
/// V -> W is a dim(V) x dim(W) matrix applied as v * A.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<Elem> data);

  static Matrix identity(std::size_t n);
  static Matrix from_rows(std::size_t cols, const std::vector<Vec>& rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_ == 0; }

  Elem& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  Elem operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const Elem> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  std::span<Elem> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  Vec row_vec(std::size_t r) const { return {data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_}; }
  const std::vector<Elem>& data() const noexcept { return data_; }

  bool is_zero() const;
  Matrix transpose() const;

  friend bool operator==(const Matrix&, const Matrix&) = default;
  friend auto operator<=>(const Matrix& a, const Matrix& b) {
    if (auto c = a.rows_ <=> b.rows_; c != 0) return c;
    if (auto c = a.cols_ <=> b.cols_; c != 0) return c;
    return a.data_ <=> b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Elem> data_;
};

Matrix multiply(const PrimeField& f, const Matrix& a, const Matrix& b);
Matrix add(const PrimeField& f, const Matrix& a, const Matrix& b);
Matrix subtract(const PrimeField& f, const Matrix& a, const Matrix& b);
Matrix scale(const PrimeField& f, Elem s, const Matrix& a);
Vec apply(const PrimeField& f, std::span<const Elem> v, const Matrix& a);
/// Rows of `a` followed by rows of `b`.
Matrix vstack(const Matrix& a, const Matrix& b);
/// Block-diagonal [[a, 0], [0, b]].
Matrix block_diag(const Matrix& a, const Matrix& b);

/// Incrementally maintained reduced row-echelon basis of a subspace of F^n.
class Echelon {
 public:
  Echelon(const PrimeField& f, std::size_t n) : f_(f), n_(n) {}
  Echelon(const PrimeField& f, const Matrix& rows);

  /// Adds v to the span. Returns true when the rank grew.
  bool insert(std::span<const Elem> v);
  void insert_rows(const Matrix& m);
  bool contains(std::span<const Elem> v) const;
  bool contains_rows(const Matrix& m) const;
  /// v minus its projection along the pivot columns; zero iff v is in the span.
  Vec reduce(std::span<const Elem> v) const;

  std::size_t rank() const noexcept { return rows_.size(); }
  std::size_t ambient() const noexcept { return n_; }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }
  /// Canonical basis: RREF rows sorted by pivot column.
  Matrix basis() const;

 private:
  PrimeField f_;
  std::size_t n_;
  std::vector<Vec> rows_;
  std::vector<std::size_t> pivots_;
};

/// Canonical reduced row-echelon basis of the row space of `a`.
Matrix rref(const PrimeField& f, const Matrix& a);
std::size_t rank(const PrimeField& f, const Matrix& a);
bool is_invertible(const PrimeField& f, const Matrix& a);

/// Solves x * A = b for row vectors; also exposes the left null space.
class LeftSolver {
 public:
  LeftSolver(const PrimeField& f, const Matrix& a);
  std::optional<Vec> solve(std::span<const Elem> b) const;
  /// Canonical basis of {x : x * A = 0}.
  Matrix left_nullspace() const;

 private:
  PrimeField f_;
  std::size_t m_;
  std::size_t n_;
  std::vector<Vec> rows_;  // augmented [A-part | combination]
  std::vector<std::size_t> pivots_;
  std::vector<Vec> null_rows_;
};

Matrix left_nullspace(const PrimeField& f, const Matrix& a);
/// X with X * A = B, if one exists.
std::optional<Matrix> solve_left(const PrimeField& f, const Matrix& a, const Matrix& b);
/// Canonical basis of rowspace(a) ∩ rowspace(b).
Matrix intersect_rowspaces(const PrimeField& f, const Matrix& a, const Matrix& b);
/// Canonical basis of rowspace(a) + rowspace(b).
Matrix sum_rowspaces(const PrimeField& f, const Matrix& a, const Matrix& b);

/// Calls `visit` with every vector of F^n (p^n of them), in lexicographic order.
template <typename Visit>
void for_each_vector(const PrimeField& f, std::size_t n, Visit&& visit) {
  Vec v(n, 0);
  while (true) {
    visit(static_cast<const Vec&>(v));
    std::size_t i = n;
    while (i > 0) {
      --i;
      if (++v[i] < f.modulus()) break;
      v[i] = 0;
      if (i == 0) return;
    }
    if (n == 0) return;
  }
}

}  // namespace modlift
