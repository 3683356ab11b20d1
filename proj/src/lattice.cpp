#include "modlift/lattice.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "modlift/error.hpp"

namespace modlift {

namespace {

void check_cap(const RepModule& m, const Limits& limits) {
  if (m.dim() > limits.max_dim) {
    throw Error(ErrorKind::TooLarge, "module dimension " + std::to_string(m.dim()) + " exceeds the enumeration cap " +
                                         std::to_string(limits.max_dim));
  }
}

bool normalized(const Vec& v) {
  for (Elem e : v) {
    if (e != 0) return e == 1;
  }
  return false;
}

}  // namespace

std::vector<Submodule> cyclic_submodules(const RepModule& module, const Limits& limits) {
  check_cap(module, limits);
  std::set<Submodule> found;
  // Scalar multiples generate the same cyclic submodule; visit one per line.
  for_each_vector(module.field(), module.dim(), [&](const Vec& v) {
    if (!normalized(v)) return;
    found.insert(submodule_generated(module, {v}));
  });
  return {found.begin(), found.end()};
}

SubmoduleLattice enumerate_submodules(const RepModule& module, const Limits& limits) {
  const auto cyclic = cyclic_submodules(module, limits);
  const PrimeField& f = module.field();
  std::set<Submodule> all;
  all.insert(Submodule::zero(module.dim()));
  std::vector<Submodule> queue;
  for (const auto& c : cyclic) {
    if (all.insert(c).second) queue.push_back(c);
  }
  // Every submodule is a sum of cyclic ones, so closing under "+ cyclic" suffices.
  while (!queue.empty()) {
    Submodule s = std::move(queue.back());
    queue.pop_back();
    for (const auto& c : cyclic) {
      if (s.contains(f, c)) continue;
      Submodule t = sum(f, s, c);
      if (all.insert(t).second) queue.push_back(std::move(t));
    }
  }
  return SubmoduleLattice(module, {all.begin(), all.end()});
}

SubmoduleLattice::SubmoduleLattice(const RepModule& module, std::vector<Submodule> members)
    : field_(module.field()), ambient_(module.dim()), members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  const std::size_t n = members_.size();
  for (std::size_t i = 0; i < n; ++i) index_.emplace(members_[i].basis(), i);
  leq_.assign(n * n, false);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (members_[i].dim() <= members_[j].dim()) leq_[i * n + j] = members_[j].contains(field_, members_[i]);
  // i ⋖ j iff i < j with nothing strictly between.
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<std::size_t> below;
    for (std::size_t i = 0; i < n; ++i)
      if (i != j && leq(i, j)) below.push_back(i);
    for (std::size_t i : below) {
      bool cover = true;
      for (std::size_t k : below) {
        if (k != i && members_[k].dim() > members_[i].dim() && leq(i, k)) {
          cover = false;
          break;
        }
      }
      if (cover) edges_.emplace_back(i, j);
    }
  }
  std::sort(edges_.begin(), edges_.end());
}

std::optional<std::size_t> SubmoduleLattice::index_of(const Submodule& s) const {
  auto it = index_.find(s.basis());
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t SubmoduleLattice::at(const Submodule& s) const {
  auto i = index_of(s);
  if (!i) throw Error(ErrorKind::NotClosed, "subspace is not a member of the lattice");
  return *i;
}

std::size_t SubmoduleLattice::join(std::size_t i, std::size_t j) const {
  return at(sum(field_, members_[i], members_[j]));
}

std::size_t SubmoduleLattice::meet(std::size_t i, std::size_t j) const {
  return at(intersection(field_, members_[i], members_[j]));
}

std::vector<std::size_t> SubmoduleLattice::maximal() const {
  std::vector<std::size_t> out;
  for (const auto& [i, j] : edges_)
    if (j == top_index()) out.push_back(i);
  return out;
}

std::vector<std::size_t> SubmoduleLattice::minimal() const {
  std::vector<std::size_t> out;
  for (const auto& [i, j] : edges_)
    if (i == zero_index() && j != zero_index()) out.push_back(j);
  std::sort(out.begin(), out.end());
  return out;
}

bool SubmoduleLattice::is_chain() const {
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t j = i + 1; j < size(); ++j)
      if (!leq(i, j) && !leq(j, i)) return false;
  return true;
}

}  // namespace modlift
