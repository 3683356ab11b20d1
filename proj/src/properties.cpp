#include "modlift/properties.hpp"

#include <algorithm>
#include <random>
#include <string>

#include "modlift/error.hpp"

namespace modlift {

// ---------------------------------------------------------------------------
// Analysis

Analysis::Analysis(ModulePtr module, const Limits& limits)
    : module_(std::move(module)), limits_(limits), lattice_(enumerate_submodules(*module_, limits)) {
  const std::size_t L = lattice_.size();
  const std::size_t n = module_->dim();
  const PrimeField& f = module_->field();
  sum_dim_.assign(L * L, 0);
  for (std::size_t i = 0; i < L; ++i) {
    for (std::size_t j = i; j < L; ++j) {
      std::uint8_t d;
      if (lattice_.leq(i, j)) {
        d = static_cast<std::uint8_t>(lattice_[j].dim());
      } else if (lattice_.leq(j, i)) {
        d = static_cast<std::uint8_t>(lattice_[i].dim());
      } else {
        d = static_cast<std::uint8_t>(rank(f, vstack(lattice_[i].basis(), lattice_[j].basis())));
      }
      sum_dim_[i * L + j] = sum_dim_[j * L + i] = d;
    }
  }

  radical_ = lattice_.top_index();
  for (std::size_t m : lattice_.maximal()) radical_ = lattice_.meet(radical_, m);
  if (n == 0) radical_ = 0;
  socle_ = lattice_.zero_index();
  for (std::size_t m : lattice_.minimal()) socle_ = lattice_.join(socle_, m);

  complement_.assign(L, std::nullopt);
  for (std::size_t i = 0; i < L; ++i) {
    const std::size_t want = n - lattice_[i].dim();
    for (std::size_t j = 0; j < L; ++j) {
      if (lattice_[j].dim() == want && sum_dim(i, j) == n) {
        complement_[i] = j;
        break;
      }
    }
    if (complement_[i]) summands_.push_back(i);
  }
}

Submodule radical(const Analysis& a) { return a.lattice()[a.radical_index()]; }
Submodule socle(const Analysis& a) { return a.lattice()[a.socle_index()]; }

bool is_small(const Analysis& a, const Submodule& n) {
  const std::size_t i = a.lattice().at(n);
  const std::size_t top = a.lattice().top_index();
  for (std::size_t x = 0; x < a.lattice().size(); ++x) {
    if (x != top && a.sum_dim(i, x) == a.dim()) return false;
  }
  return true;
}

bool is_small_via_radical(const Analysis& a, const Submodule& n) {
  return a.lattice().leq(a.lattice().at(n), a.radical_index());
}

bool is_essential(const Analysis& a, const Submodule& n) {
  const std::size_t i = a.lattice().at(n);
  const auto& lat = a.lattice();
  for (std::size_t y = 1; y < lat.size(); ++y) {
    if (a.sum_dim(i, y) == lat[i].dim() + lat[y].dim()) return false;  // N ∩ Y = 0
  }
  return true;
}

bool is_essential_via_socle(const Analysis& a, const Submodule& n) {
  return a.lattice().leq(a.socle_index(), a.lattice().at(n));
}

bool is_coessential(const Analysis& a, const Submodule& k, const Submodule& n) {
  const PrimeField& f = a.field();
  if (!n.contains(f, k)) throw Error(ErrorKind::ShapeMismatch, "is_coessential needs K ⊆ N");
  Quotient q = quotient_module(a.module_ptr(), k);
  Matrix image_rows = multiply(f, n.basis(), q.projection.matrix());
  Submodule image = image_rows.rows() == 0 || rank(f, image_rows) == 0
                        ? Submodule::zero(q.module->dim())
                        : Submodule(rref(f, image_rows));
  Analysis quotient(q.module, a.limits());
  return is_small(quotient, image);
}

bool is_hollow(const Analysis& a) {
  if (a.dim() == 0) throw Error(ErrorKind::ZeroModule, "hollow is defined for nonzero modules");
  const auto& lat = a.lattice();
  for (std::size_t i = 0; i < lat.top_index(); ++i)
    if (!is_small(a, lat[i])) return false;
  return true;
}

bool is_uniform(const Analysis& a) {
  if (a.dim() == 0) throw Error(ErrorKind::ZeroModule, "uniform is defined for nonzero modules");
  const auto& lat = a.lattice();
  for (std::size_t i = 1; i < lat.size(); ++i)
    if (!is_essential(a, lat[i])) return false;
  return true;
}

bool is_uniserial(const Analysis& a) { return a.lattice().is_chain(); }

bool is_indecomposable(const Analysis& a) { return a.dim() > 0 && a.summands().size() == 2; }

std::optional<Submodule> is_direct_summand(const Analysis& a, const Submodule& x) {
  auto c = a.complement(a.lattice().at(x));
  if (!c) return std::nullopt;
  return a.lattice()[*c];
}

std::vector<Submodule> all_summands(const Analysis& a) {
  std::vector<Submodule> out;
  for (std::size_t i : a.summands()) out.push_back(a.lattice()[i]);
  return out;
}

// ---------------------------------------------------------------------------
// Decompositions

namespace {

template <typename Visit>
void decompositions_rec(const Analysis& a, std::size_t parts_left, std::size_t dim_left, const Echelon& ech,
                        std::vector<std::size_t>& current, Visit& visit) {
  const auto& lat = a.lattice();
  if (parts_left == 0) {
    if (dim_left == 0) visit(current);
    return;
  }
  for (std::size_t i : a.summands()) {
    const std::size_t d = lat[i].dim();
    if (d == 0 || d + (parts_left - 1) > dim_left) continue;
    if (parts_left == 1 && d != dim_left) continue;
    Echelon next = ech;
    next.insert_rows(lat[i].basis());
    if (next.rank() != ech.rank() + d) continue;
    current.push_back(i);
    decompositions_rec(a, parts_left - 1, dim_left - d, next, current, visit);
    current.pop_back();
  }
}

template <typename Visit>
void for_each_decomposition(const Analysis& a, std::size_t n, Visit&& visit) {
  if (n == 0 || a.dim() == 0) return;
  std::vector<std::size_t> current;
  Echelon ech(a.field(), a.dim());
  decompositions_rec(a, n, a.dim(), ech, current, visit);
}

}  // namespace

std::vector<Decomposition> all_decompositions(const Analysis& a, std::size_t n) {
  std::vector<Decomposition> out;
  for_each_decomposition(a, n, [&](const std::vector<std::size_t>& parts) { out.push_back(Decomposition{parts}); });
  return out;
}

std::uint64_t count_decompositions(const Analysis& a, std::size_t n) {
  std::uint64_t count = 0;
  for_each_decomposition(a, n, [&](const std::vector<std::size_t>&) { ++count; });
  return count;
}

// ---------------------------------------------------------------------------
// Lifting / extending

SearchResult is_lifting(const Analysis& a, Method method) {
  const auto& lat = a.lattice();
  const std::size_t L = lat.size();
  const std::size_t top = lat.top_index();
  const std::size_t n = a.dim();
  SearchResult out;

  // Structural: pull back Rad(M/X) as the meet of the maximal submodules above X.
  std::vector<std::size_t> rad_above(L, top);
  if (method == Method::Structural) {
    const auto maximal = lat.maximal();
    for (std::size_t x : a.summands()) {
      std::size_t r = top;
      for (std::size_t m : maximal)
        if (lat.leq(x, m)) r = lat.meet(r, m);
      rad_above[x] = r;
    }
  }

  for (std::size_t N = 0; N < L; ++N) {
    // Proper Y with N + Y = M.
    std::vector<std::size_t> supplements;
    if (method == Method::Definitional) {
      for (std::size_t y = 0; y < top; ++y)
        if (a.sum_dim(N, y) == n) supplements.push_back(y);
    }
    std::optional<std::size_t> found;
    for (std::size_t x : a.summands()) {
      if (!lat.leq(x, N)) continue;
      bool coessential = true;
      if (method == Method::Definitional) {
        for (std::size_t y : supplements) {
          if (lat.leq(x, y)) {
            coessential = false;
            break;
          }
        }
      } else {
        coessential = lat.leq(N, rad_above[x]);
      }
      if (coessential) {
        found = x;
        break;
      }
    }
    if (!found) {
      out.violation = N;
      out.holds = false;
      return out;
    }
    out.witnesses.emplace_back(N, *found);
  }
  out.holds = true;
  return out;
}

SearchResult is_extending(const Analysis& a, Method method) {
  const auto& lat = a.lattice();
  const std::size_t L = lat.size();
  SearchResult out;
  for (std::size_t N = 0; N < L; ++N) {
    // Nonzero Y with N ∩ Y = 0.
    std::vector<std::size_t> independent;
    if (method == Method::Definitional) {
      for (std::size_t y = 1; y < L; ++y)
        if (a.sum_dim(N, y) == lat[N].dim() + lat[y].dim()) independent.push_back(y);
    }
    std::optional<std::size_t> found;
    for (std::size_t x : a.summands()) {
      if (!lat.leq(N, x)) continue;
      bool essential = true;
      if (method == Method::Definitional) {
        for (std::size_t y : independent) {
          if (lat.leq(y, x)) {
            essential = false;
            break;
          }
        }
      } else {
        essential = lat.leq(lat.meet(x, a.socle_index()), N);
      }
      if (essential) {
        found = x;
        break;
      }
    }
    if (!found) {
      out.violation = N;
      out.holds = false;
      return out;
    }
    out.witnesses.emplace_back(N, *found);
  }
  out.holds = true;
  return out;
}

// ---------------------------------------------------------------------------
// Endomorphism ring

std::size_t EndRing::unit_count() const { return static_cast<std::size_t>(std::count(unit.begin(), unit.end(), true)); }

std::size_t EndRing::index_of(const Vec& coeffs) const {
  std::size_t idx = 0;
  for (Elem c : coeffs) idx = idx * field.modulus() + c;
  return idx;
}

EndRing endomorphism_ring(const RepModule& m, const Limits& limits) {
  EndRing e;
  e.field = m.field();
  e.module_dim = m.dim();
  e.basis = hom_basis(m, m);
  e.elements = enumerate_span(e.field, e.basis, m.dim(), m.dim(), limits);
  e.unit.reserve(e.elements.size());
  for (const auto& el : e.elements) e.unit.push_back(m.dim() > 0 && is_invertible(e.field, el));
  // Coordinates of products: solve against the vectorised basis.
  const std::size_t k = e.basis.size();
  Matrix stacked(k, m.dim() * m.dim());
  for (std::size_t i = 0; i < k; ++i)
    std::copy(e.basis[i].data().begin(), e.basis[i].data().end(), stacked.row(i).begin());
  LeftSolver solver(e.field, stacked);
  e.product.assign(k, std::vector<Vec>(k));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      // a ∘ b applies b first: matrix b * a.
      Matrix prod = multiply(e.field, e.basis[j], e.basis[i]);
      auto coords = solver.solve(prod.data());
      if (!coords) throw Error(ErrorKind::NotClosed, "endomorphisms not closed under composition");
      e.product[i][j] = std::move(*coords);
    }
  }
  return e;
}

LocalityResult is_local(const EndRing& e) {
  LocalityResult out;
  if (e.module_dim == 0) return out;
  std::vector<std::size_t> nonunits;
  for (std::size_t i = 0; i < e.elements.size(); ++i)
    if (!e.unit[i]) nonunits.push_back(i);
  // Non-units closed under addition form an F_p-subspace; compare against their span.
  Echelon span(e.field, e.basis.size());
  std::vector<Vec> coeffs;
  coeffs.reserve(e.elements.size());
  for_each_vector(e.field, e.basis.size(), [&](const Vec& c) { coeffs.push_back(c); });
  for (std::size_t i : nonunits) span.insert(coeffs[i]);
  if (saturating_power(e.field.modulus(), span.rank()) == nonunits.size()) {
    out.local = true;
    return out;
  }
  for (std::size_t i : nonunits) {
    for (std::size_t j : nonunits) {
      Vec s(coeffs[i].size());
      for (std::size_t t = 0; t < s.size(); ++t) s[t] = e.field.add(coeffs[i][t], coeffs[j][t]);
      if (e.unit[e.index_of(s)]) {
        out.witness = std::make_pair(i, j);
        return out;
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// FIEP

FiepPairWitness FiepWitnessTable::row(std::size_t i) const {
  const std::uint32_t* r = rows.data() + i * stride();
  FiepPairWitness w;
  w.summand = r[0];
  w.parts.assign(r + 1, r + 1 + arity);
  w.chosen.assign(r + 1 + arity, r + 1 + 2 * arity);
  return w;
}

namespace {

struct ExchangeSearch {
  const Analysis& a;
  const std::vector<std::vector<std::size_t>>& below;  // members contained in each member
  std::vector<std::size_t> chosen;

  bool run(const std::vector<std::size_t>& parts, std::size_t x) {
    const auto& lat = a.lattice();
    chosen.assign(parts.size(), 0);
    Echelon ech(a.field(), lat[x].basis());
    std::size_t capacity = 0;
    for (std::size_t p : parts) capacity += lat[p].dim();
    return rec(parts, 0, ech, a.dim() - lat[x].dim(), capacity);
  }

  bool rec(const std::vector<std::size_t>& parts, std::size_t i, const Echelon& ech, std::size_t need,
           std::size_t capacity) {
    if (i == parts.size()) return need == 0;
    const auto& lat = a.lattice();
    const std::size_t cap_rest = capacity - lat[parts[i]].dim();
    for (std::size_t c : below[parts[i]]) {
      const std::size_t d = lat[c].dim();
      if (d > need || need - d > cap_rest) continue;
      Echelon next = ech;
      if (d > 0) {
        next.insert_rows(lat[c].basis());
        if (next.rank() != ech.rank() + d) continue;
      }
      chosen[i] = c;
      if (rec(parts, i + 1, next, need - d, cap_rest)) return true;
    }
    return false;
  }
};

}  // namespace

FiepResult has_fiep(const Analysis& a, const FiepOptions& options) {
  const auto& lat = a.lattice();
  FiepResult out;
  out.seed = options.seed;
  std::vector<std::vector<std::size_t>> below(lat.size());
  for (std::size_t j = 0; j < lat.size(); ++j)
    for (std::size_t i = 0; i < lat.size(); ++i)
      if (lat.leq(i, j)) below[j].push_back(i);
  ExchangeSearch search{a, below, {}};

  for (std::size_t n = 1; n <= options.n_max; ++n) {
    FiepWitnessTable table;
    table.arity = n;
    std::vector<std::vector<std::size_t>> decomps;
    const bool exhaustive = n <= options.exhaustive_up_to;
    if (exhaustive) {
      for_each_decomposition(a, n, [&](const std::vector<std::size_t>& p) { decomps.push_back(p); });
      table.decompositions_total = decomps.size();
    } else {
      // Reservoir sample of fixed size, kept in enumeration order.
      std::mt19937_64 rng(options.seed + n);
      std::vector<std::pair<std::uint64_t, std::vector<std::size_t>>> reservoir;
      std::uint64_t seen = 0;
      for_each_decomposition(a, n, [&](const std::vector<std::size_t>& p) {
        if (reservoir.size() < options.sample_threshold) {
          reservoir.emplace_back(seen, p);
        } else {
          std::uniform_int_distribution<std::uint64_t> d(0, seen);
          const std::uint64_t r = d(rng);
          if (r < options.sample_threshold) reservoir[r] = {seen, p};
        }
        ++seen;
      });
      table.decompositions_total = seen;
      table.sampled = seen > options.sample_threshold;
      std::sort(reservoir.begin(), reservoir.end());
      for (auto& [_, p] : reservoir) decomps.push_back(std::move(p));
    }
    table.decompositions_checked = decomps.size();
    for (std::size_t x : a.summands()) {
      for (const auto& parts : decomps) {
        ++out.pairs_checked;
        if (!search.run(parts, x)) {
          out.holds = false;
          out.violation = FiepPairWitness{x, parts, {}};
          out.tables.push_back(std::move(table));
          return out;
        }
        table.rows.push_back(static_cast<std::uint32_t>(x));
        for (std::size_t p : parts) table.rows.push_back(static_cast<std::uint32_t>(p));
        for (std::size_t c : search.chosen) table.rows.push_back(static_cast<std::uint32_t>(c));
      }
    }
    out.tables.push_back(std::move(table));
  }
  return out;
}

}  // namespace modlift
