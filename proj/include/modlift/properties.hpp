#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "modlift/lattice.hpp"
#include "modlift/module.hpp"

namespace modlift {

/// A module together with its submodule lattice, radical, socle and direct
/// summands. Everything in the property engine reads from here so the
/// lattice is enumerated once.
class Analysis {
 public:
  /// Throws TooLarge when the lattice cannot be enumerated under `limits`.
  explicit Analysis(ModulePtr module, const Limits& limits = {});

  const RepModule& module() const noexcept { return *module_; }
  const ModulePtr& module_ptr() const noexcept { return module_; }
  const PrimeField& field() const noexcept { return module_->field(); }
  const Limits& limits() const noexcept { return limits_; }
  const SubmoduleLattice& lattice() const noexcept { return lattice_; }
  std::size_t dim() const noexcept { return module_->dim(); }

  std::size_t radical_index() const noexcept { return radical_; }
  std::size_t socle_index() const noexcept { return socle_; }
  /// Indices of direct summands, canonical order (0 and M included).
  const std::vector<std::size_t>& summands() const noexcept { return summands_; }
  /// First complement (canonical order) of lattice member i, if it is a summand.
  std::optional<std::size_t> complement(std::size_t i) const { return complement_[i]; }
  /// dim(members[i] + members[j]).
  std::size_t sum_dim(std::size_t i, std::size_t j) const { return sum_dim_[i * lattice_.size() + j]; }

 private:
  ModulePtr module_;
  Limits limits_;
  SubmoduleLattice lattice_;
  std::size_t radical_ = 0;
  std::size_t socle_ = 0;
  std::vector<std::optional<std::size_t>> complement_;
  std::vector<std::size_t> summands_;
  std::vector<std::uint8_t> sum_dim_;
};

/// Intersection of maximal submodules.
Submodule radical(const Analysis& a);
/// Sum of minimal submodules.
Submodule socle(const Analysis& a);

/// N + X != M for every proper X (scan of the lattice).
bool is_small(const Analysis& a, const Submodule& n);
/// N ⊆ Rad(M).
bool is_small_via_radical(const Analysis& a, const Submodule& n);
/// N ∩ Y != 0 for every nonzero Y (scan of the lattice).
bool is_essential(const Analysis& a, const Submodule& n);
/// Soc(M) ⊆ N.
bool is_essential_via_socle(const Analysis& a, const Submodule& n);
/// K ⊆ N with N/K small in M/K, decided in the quotient module.
bool is_coessential(const Analysis& a, const Submodule& k, const Submodule& n);

/// Nonzero, and every proper submodule is small. ZeroModule on M = 0.
bool is_hollow(const Analysis& a);
/// Nonzero, and every nonzero submodule is essential. ZeroModule on M = 0.
bool is_uniform(const Analysis& a);
bool is_uniserial(const Analysis& a);
/// Nonzero with no summands besides 0 and M.
bool is_indecomposable(const Analysis& a);

std::optional<Submodule> is_direct_summand(const Analysis& a, const Submodule& x);
std::vector<Submodule> all_summands(const Analysis& a);

/// Ordered internal direct sum decomposition into nonzero parts.
struct Decomposition {
  std::vector<std::size_t> parts;  // lattice indices
};

/// All ordered decompositions of M into exactly n nonzero parts.
std::vector<Decomposition> all_decompositions(const Analysis& a, std::size_t n);
/// Number of such decompositions without materialising them.
std::uint64_t count_decompositions(const Analysis& a, std::size_t n);

enum class Method { Definitional, Structural };

/// For every N the chosen summand X (canonical-first), or the first N with none.
struct SearchResult {
  bool holds = false;
  std::vector<std::pair<std::size_t, std::size_t>> witnesses;  // (N, X)
  std::optional<std::size_t> violation;                        // N
};

/// Every N contains a summand X with N/X small in M/X. The definitional
/// method scans submodules Y ⊇ X of M; the structural one tests N ⊆ the
/// intersection of the maximal submodules containing X.
SearchResult is_lifting(const Analysis& a, Method method = Method::Definitional);
/// Every N is essential in some summand X. Structural: X ∩ Soc(M) ⊆ N.
SearchResult is_extending(const Analysis& a, Method method = Method::Definitional);

/// End(M) with its elements enumerated (bounded by limits.max_hom).
struct EndRing {
  PrimeField field{2};
  std::size_t module_dim = 0;
  std::vector<Matrix> basis;
  /// product[a][b] = coordinates of basis[a] ∘ basis[b].
  std::vector<std::vector<Vec>> product;
  std::vector<Matrix> elements;  // enumeration order of coefficient vectors
  std::vector<bool> unit;

  std::size_t unit_count() const;
  std::size_t index_of(const Vec& coeffs) const;
};

EndRing endomorphism_ring(const RepModule& m, const Limits& limits = {});

struct LocalityResult {
  bool local = false;
  /// When not local: two non-units whose sum is a unit (element indices).
  std::optional<std::pair<std::size_t, std::size_t>> witness;
};

/// Local iff the non-units are closed under addition. The zero ring is not local.
LocalityResult is_local(const EndRing& e);

struct FiepOptions {
  std::size_t n_max = 3;
  /// Arity up to which every decomposition is checked.
  std::size_t exhaustive_up_to = 2;
  std::uint64_t sample_threshold = 10000;
  std::uint64_t seed = 1;
};

struct FiepPairWitness {
  std::size_t summand;               // X
  std::vector<std::size_t> parts;    // M_i
  std::vector<std::size_t> chosen;   // M_i' (same length; empty for a violation)
};

/// Witnesses of one arity n, stored flat: each row is X, M_1..M_n, M_1'..M_n'.
struct FiepWitnessTable {
  std::size_t arity = 0;
  std::uint64_t decompositions_total = 0;
  std::uint64_t decompositions_checked = 0;
  bool sampled = false;
  std::vector<std::uint32_t> rows;

  std::size_t stride() const noexcept { return 1 + 2 * arity; }
  std::size_t size() const noexcept { return rows.size() / stride(); }
  FiepPairWitness row(std::size_t i) const;
};

struct FiepResult {
  bool holds = true;
  std::uint64_t pairs_checked = 0;
  std::uint64_t seed = 0;
  std::vector<FiepWitnessTable> tables;  // arity 1..n_max
  std::optional<FiepPairWitness> violation;
};

/// For every summand X and decomposition M = ⊕ M_i with at most n_max
/// parts, search M_i' ≤ M_i with M = X ⊕ (⊕ M_i').
FiepResult has_fiep(const Analysis& a, const FiepOptions& options = {});

}  // namespace modlift
