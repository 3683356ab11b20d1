#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "modlift/field.hpp"
#include "modlift/matrix.hpp"

namespace modlift {

/// Position (row, col) of a matrix unit, zero-based.
using MatrixUnit = std::pair<std::size_t, std::size_t>;

/// Finite-dimensional associative unital algebra over a prime field, given
/// by structure constants e_i * e_j = sum_k c[i][j][k] e_k.
///
/// Construction validates associativity on all basis triples and that the
/// unity vector is a two-sided identity.
class Algebra {
 public:
  Algebra(PrimeField field, std::size_t dim, std::vector<Elem> constants, Vec unity);

  const PrimeField& field() const noexcept { return field_; }
  std::size_t dim() const noexcept { return dim_; }
  Elem constant(std::size_t i, std::size_t j, std::size_t k) const { return c_[(i * dim_ + j) * dim_ + k]; }
  const std::vector<Elem>& constants() const noexcept { return c_; }
  const Vec& unity() const noexcept { return unity_; }

  /// Coordinates of x * y.
  Vec multiply(std::span<const Elem> x, std::span<const Elem> y) const;

  /// Set when the algebra was built from a matrix shape: basis element i is
  /// the matrix unit units()[i] in size() x size() matrices.
  const std::optional<std::vector<MatrixUnit>>& matrix_units() const noexcept { return units_; }
  std::size_t matrix_size() const noexcept { return matrix_size_; }
  /// Shape used to build the algebra (empty if none).
  const std::vector<std::vector<bool>>& shape() const noexcept { return shape_; }

  friend bool operator==(const Algebra& a, const Algebra& b) {
    return a.field_ == b.field_ && a.dim_ == b.dim_ && a.c_ == b.c_ && a.unity_ == b.unity_;
  }

 private:
  friend Algebra shaped_matrix_algebra(const PrimeField& field, const std::vector<std::vector<bool>>& shape);

  PrimeField field_;
  std::size_t dim_;
  std::vector<Elem> c_;
  Vec unity_;
  std::optional<std::vector<MatrixUnit>> units_;
  std::size_t matrix_size_ = 0;
  std::vector<std::vector<bool>> shape_;
};

using AlgebraPtr = std::shared_ptr<const Algebra>;

/// Subalgebra of n x n matrices spanned by the matrix units at the true
/// entries of `shape`, basis in row-major order of those entries.
/// Throws NoUnity if the diagonal is not fully supported and NotClosed if the
/// span is not closed under multiplication.
Algebra shaped_matrix_algebra(const PrimeField& field, const std::vector<std::vector<bool>>& shape);

/// Throws NotAssociative / NotUnital.
Algebra algebra_from_structure_constants(const PrimeField& field, std::size_t dim, std::vector<Elem> constants,
                                         Vec unity);

/// F_p[x]/(x^k) with basis 1, x, ..., x^{k-1}.
Algebra truncated_polynomial_algebra(const PrimeField& field, std::size_t k);

}  // namespace modlift
