#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "modlift/algebra.hpp"
#include "modlift/matrix.hpp"

namespace modlift {

/// Enumeration bounds. Exceeding one is reported as Error{TooLarge}.
struct Limits {
  std::size_t max_dim = 8;
  std::uint64_t max_hom = std::uint64_t{1} << 20;
};

/// Right module given by one action matrix per algebra basis element; the
/// element e_i sends the row vector v to v * A_i.
class RepModule {
 public:
  /// Validates A_i A_j = sum_k c[i][j][k] A_k and that the unity acts as the identity.
  RepModule(AlgebraPtr algebra, std::size_t dim, std::vector<Matrix> actions);

  const Algebra& algebra() const noexcept { return *algebra_; }
  const AlgebraPtr& algebra_ptr() const noexcept { return algebra_; }
  const PrimeField& field() const noexcept { return algebra_->field(); }
  std::size_t dim() const noexcept { return dim_; }
  const std::vector<Matrix>& actions() const noexcept { return actions_; }
  const Matrix& action(std::size_t i) const { return actions_.at(i); }

  Vec act(std::span<const Elem> v, std::size_t basis_index) const { return apply(field(), v, actions_[basis_index]); }
  /// v * r for an algebra element r given in coordinates.
  Vec act_by(std::span<const Elem> v, std::span<const Elem> r) const;

  friend bool operator==(const RepModule& a, const RepModule& b) {
    return a.dim_ == b.dim_ && *a.algebra_ == *b.algebra_ && a.actions_ == b.actions_;
  }

 private:
  AlgebraPtr algebra_;
  std::size_t dim_;
  std::vector<Matrix> actions_;
};

using ModulePtr = std::shared_ptr<const RepModule>;

bool same_algebra(const RepModule& a, const RepModule& b);

/// A submodule, identified by the reduced row-echelon basis of its underlying
/// subspace. Equality and ordering are those of the canonical basis, ordered
/// first by dimension.
class Submodule {
 public:
  Submodule() = default;
  /// `canonical_basis` must already be in reduced row-echelon form.
  explicit Submodule(Matrix canonical_basis) : basis_(std::move(canonical_basis)) {}
  static Submodule zero(std::size_t ambient) { return Submodule(Matrix(0, ambient)); }
  static Submodule whole(std::size_t ambient) { return Submodule(Matrix::identity(ambient)); }

  const Matrix& basis() const noexcept { return basis_; }
  std::size_t dim() const noexcept { return basis_.rows(); }
  std::size_t ambient_dim() const noexcept { return basis_.cols(); }
  bool is_zero() const noexcept { return dim() == 0; }
  bool is_whole() const noexcept { return dim() == ambient_dim(); }

  bool contains(const PrimeField& f, std::span<const Elem> v) const;
  bool contains(const PrimeField& f, const Submodule& other) const;
  /// Coordinates of a member vector with respect to basis(): its entries at the pivot columns.
  Vec coordinates(std::span<const Elem> v) const;

  friend bool operator==(const Submodule&, const Submodule&) = default;
  friend auto operator<=>(const Submodule& a, const Submodule& b) { return a.basis_ <=> b.basis_; }

 private:
  Matrix basis_;
};

Submodule sum(const PrimeField& f, const Submodule& a, const Submodule& b);
Submodule intersection(const PrimeField& f, const Submodule& a, const Submodule& b);
/// a ∩ b = 0 and a + b = whole.
bool is_internal_direct_sum(const PrimeField& f, const Submodule& a, const Submodule& b);

/// Linear map commuting with the algebra action.
class ModuleHom {
 public:
  /// Throws ShapeMismatch on dimensions, AlgebraMismatch, NotWellDefined if
  /// the matrix does not commute with the actions.
  ModuleHom(ModulePtr source, ModulePtr target, Matrix matrix);

  const RepModule& source() const noexcept { return *source_; }
  const RepModule& target() const noexcept { return *target_; }
  const ModulePtr& source_ptr() const noexcept { return source_; }
  const ModulePtr& target_ptr() const noexcept { return target_; }
  const Matrix& matrix() const noexcept { return matrix_; }
  Vec operator()(std::span<const Elem> v) const { return apply(source_->field(), v, matrix_); }

 private:
  ModulePtr source_;
  ModulePtr target_;
  Matrix matrix_;
};

/// True iff `m` (source.dim x target.dim) commutes with every action pair.
bool commutes(const RepModule& source, const RepModule& target, const Matrix& m);

/// Row vectors K^k under right multiplication by the matrix units of a shaped algebra.
/// k = 0 gives the zero module; otherwise k must equal the matrix size.
RepModule row_module(const AlgebraPtr& algebra, std::size_t k);
/// The algebra as a right module over itself.
RepModule regular_module(const AlgebraPtr& algebra);
RepModule zero_module(const AlgebraPtr& algebra);

/// Smallest action-closed subspace containing `vectors`.
Submodule submodule_generated(const RepModule& m, const std::vector<Vec>& vectors);
/// Validates action closure of the row space of `rows` (NotClosed otherwise).
Submodule make_submodule(const RepModule& m, const Matrix& rows);

/// The submodule as a module in the coordinates of its canonical basis.
RepModule as_module(const RepModule& m, const Submodule& n);
/// Inclusion of `n` (in its basis coordinates) into `m`.
ModuleHom inclusion(const ModulePtr& m, const Submodule& n);

struct Quotient {
  ModulePtr module;
  ModuleHom projection;
  /// Ambient indices whose unit vectors form the complement basis used for M/X.
  std::vector<std::size_t> free_columns;
};
Quotient quotient_module(const ModulePtr& m, const Submodule& x);

struct DirectSum {
  ModulePtr module;
  ModuleHom inj1, inj2, proj1, proj2;
  /// Images of the injections as submodules of `module`.
  Submodule first() const;
  Submodule second() const;
};
/// Throws AlgebraMismatch.
DirectSum direct_sum(const ModulePtr& a, const ModulePtr& b);

/// Matrices of a basis of Hom(a, b), canonical (reduced echelon as vectors).
std::vector<Matrix> hom_basis(const RepModule& a, const RepModule& b);
std::vector<ModuleHom> hom_space(const ModulePtr& a, const ModulePtr& b);
/// Every element of the span of `basis`; TooLarge if p^|basis| > limits.max_hom.
std::vector<Matrix> enumerate_span(const PrimeField& f, const std::vector<Matrix>& basis, std::size_t rows,
                                   std::size_t cols, const Limits& limits);
/// Count p^k as a saturating 64-bit value.
std::uint64_t saturating_power(std::uint64_t p, std::size_t k);

Submodule kernel(const ModuleHom& h);
Submodule image(const ModuleHom& h);
/// g ∘ h (h applied first).
ModuleHom compose(const ModuleHom& g, const ModuleHom& h);
/// h restricted to the submodule n of its source.
ModuleHom restrict(const ModuleHom& h, const Submodule& n);
bool is_mono(const ModuleHom& h);
bool is_epi(const ModuleHom& h);

}  // namespace modlift
