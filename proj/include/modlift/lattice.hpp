#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "modlift/module.hpp"

namespace modlift {

/// Every submodule of a finite module, in canonical order (dimension, then
/// lexicographic canonical basis), with the covering relation.
class SubmoduleLattice {
 public:
  SubmoduleLattice(const RepModule& module, std::vector<Submodule> members);

  const std::vector<Submodule>& members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }
  const Submodule& operator[](std::size_t i) const { return members_[i]; }
  /// Covering pairs (i, j): members[i] ⋖ members[j].
  const std::vector<std::pair<std::size_t, std::size_t>>& hasse_edges() const noexcept { return edges_; }
  const PrimeField& field() const noexcept { return field_; }
  std::size_t ambient_dim() const noexcept { return ambient_; }

  std::optional<std::size_t> index_of(const Submodule& s) const;
  /// Index of s; throws if s is not a member.
  std::size_t at(const Submodule& s) const;
  std::size_t zero_index() const noexcept { return 0; }
  std::size_t top_index() const noexcept { return members_.size() - 1; }

  /// members[i] ⊆ members[j]
  bool leq(std::size_t i, std::size_t j) const { return leq_[i * members_.size() + j]; }
  std::size_t join(std::size_t i, std::size_t j) const;
  std::size_t meet(std::size_t i, std::size_t j) const;
  /// Indices of members covered by the whole module.
  std::vector<std::size_t> maximal() const;
  /// Indices of members covering zero.
  std::vector<std::size_t> minimal() const;
  bool is_chain() const;

 private:
  PrimeField field_;
  std::size_t ambient_;
  std::vector<Submodule> members_;
  std::map<Matrix, std::size_t> index_;
  std::vector<bool> leq_;
  std::vector<std::pair<std::size_t, std::size_t>> edges_;
};

/// All submodules: cyclic closures of every nonzero vector, then closed under
/// sums. Throws TooLarge when dim(module) > limits.max_dim.
SubmoduleLattice enumerate_submodules(const RepModule& module, const Limits& limits = {});

/// Cyclic submodules only (deduplicated, canonical order).
std::vector<Submodule> cyclic_submodules(const RepModule& module, const Limits& limits = {});

}  // namespace modlift
