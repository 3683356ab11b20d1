#include "modlift/module.hpp"

#include <algorithm>
#include <string>

#include "modlift/error.hpp"

namespace modlift {

RepModule::RepModule(AlgebraPtr algebra, std::size_t dim, std::vector<Matrix> actions)
    : algebra_(std::move(algebra)), dim_(dim), actions_(std::move(actions)) {
  const Algebra& alg = *algebra_;
  const PrimeField& f = alg.field();
  if (actions_.size() != alg.dim()) throw Error(ErrorKind::ShapeMismatch, "one action matrix per algebra basis element");
  for (const auto& a : actions_) {
    if (a.rows() != dim_ || a.cols() != dim_) throw Error(ErrorKind::ShapeMismatch, "action matrices must be n x n");
  }
  for (auto& a : actions_) {
    for (std::size_t r = 0; r < dim_; ++r)
      for (std::size_t c = 0; c < dim_; ++c) a(r, c) = static_cast<Elem>(a(r, c) % f.modulus());
  }
  const std::size_t d = alg.dim();
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      Matrix lhs = multiply(f, actions_[i], actions_[j]);
      Matrix rhs(dim_, dim_);
      for (std::size_t k = 0; k < d; ++k) {
        const Elem c = alg.constant(i, j, k);
        if (c != 0) rhs = add(f, rhs, scale(f, c, actions_[k]));
      }
      if (lhs != rhs) {
        throw Error(ErrorKind::NotClosed, "action is not multiplicative: A_" + std::to_string(i) + " A_" +
                                              std::to_string(j) + " differs from the action of e" + std::to_string(i) +
                                              " e" + std::to_string(j));
      }
    }
  }
  Matrix one(dim_, dim_);
  for (std::size_t k = 0; k < d; ++k) {
    if (alg.unity()[k] != 0) one = add(f, one, scale(f, alg.unity()[k], actions_[k]));
  }
  if (one != Matrix::identity(dim_)) throw Error(ErrorKind::NotUnital, "unity does not act as the identity");
}

Vec RepModule::act_by(std::span<const Elem> v, std::span<const Elem> r) const {
  const PrimeField& f = field();
  Vec out(dim_, 0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (r[i] == 0) continue;
    Vec part = act(v, i);
    for (std::size_t c = 0; c < dim_; ++c) out[c] = f.add(out[c], f.mul(r[i], part[c]));
  }
  return out;
}

bool same_algebra(const RepModule& a, const RepModule& b) {
  return a.algebra_ptr() == b.algebra_ptr() || a.algebra() == b.algebra();
}

// ---------------------------------------------------------------------------
// Submodule

bool Submodule::contains(const PrimeField& f, std::span<const Elem> v) const {
  // Basis is RREF: subtract along pivots.
  Vec r(v.begin(), v.end());
  for (std::size_t i = 0; i < basis_.rows(); ++i) {
    auto row = basis_.row(i);
    std::size_t pivot = 0;
    while (row[pivot] == 0) ++pivot;
    const Elem c = r[pivot];
    if (c == 0) continue;
    for (std::size_t j = pivot; j < r.size(); ++j) r[j] = f.sub(r[j], f.mul(c, row[j]));
  }
  return std::all_of(r.begin(), r.end(), [](Elem e) { return e == 0; });
}

bool Submodule::contains(const PrimeField& f, const Submodule& other) const {
  if (other.dim() > dim()) return false;
  for (std::size_t r = 0; r < other.basis_.rows(); ++r)
    if (!contains(f, other.basis_.row(r))) return false;
  return true;
}

Vec Submodule::coordinates(std::span<const Elem> v) const {
  Vec out(dim(), 0);
  for (std::size_t i = 0; i < basis_.rows(); ++i) {
    auto row = basis_.row(i);
    std::size_t pivot = 0;
    while (row[pivot] == 0) ++pivot;
    out[i] = v[pivot];
  }
  return out;
}

Submodule sum(const PrimeField& f, const Submodule& a, const Submodule& b) {
  return Submodule(sum_rowspaces(f, a.basis(), b.basis()));
}

Submodule intersection(const PrimeField& f, const Submodule& a, const Submodule& b) {
  Matrix m = intersect_rowspaces(f, a.basis(), b.basis());
  if (m.rows() == 0) return Submodule::zero(a.ambient_dim());
  return Submodule(std::move(m));
}

bool is_internal_direct_sum(const PrimeField& f, const Submodule& a, const Submodule& b) {
  return a.dim() + b.dim() == a.ambient_dim() && rank(f, vstack(a.basis(), b.basis())) == a.ambient_dim();
}

// ---------------------------------------------------------------------------
// ModuleHom

bool commutes(const RepModule& source, const RepModule& target, const Matrix& m) {
  const PrimeField& f = source.field();
  for (std::size_t i = 0; i < source.actions().size(); ++i) {
    if (multiply(f, source.action(i), m) != multiply(f, m, target.action(i))) return false;
  }
  return true;
}

ModuleHom::ModuleHom(ModulePtr source, ModulePtr target, Matrix matrix)
    : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(matrix)) {
  if (!same_algebra(*source_, *target_)) throw Error(ErrorKind::AlgebraMismatch, "hom between modules over different algebras");
  if (matrix_.rows() != source_->dim() || matrix_.cols() != target_->dim())
    throw Error(ErrorKind::ShapeMismatch, "hom matrix must be dim(source) x dim(target)");
  if (!commutes(*source_, *target_, matrix_)) throw Error(ErrorKind::NotWellDefined, "matrix does not commute with the action");
}

// ---------------------------------------------------------------------------
// Constructions

RepModule row_module(const AlgebraPtr& algebra, std::size_t k) {
  if (k == 0) return zero_module(algebra);
  const auto& units = algebra->matrix_units();
  if (!units) throw Error(ErrorKind::ShapeMismatch, "row_module needs an algebra built from a matrix shape");
  if (k != algebra->matrix_size())
    throw Error(ErrorKind::ShapeMismatch, "row width " + std::to_string(k) + " differs from matrix size " +
                                              std::to_string(algebra->matrix_size()));
  std::vector<Matrix> actions;
  actions.reserve(units->size());
  for (const auto& [r, c] : *units) {
    Matrix a(k, k);
    a(r, c) = 1;  // v * E_rc = v_r e_c
    actions.push_back(std::move(a));
  }
  return RepModule(algebra, k, std::move(actions));
}

RepModule regular_module(const AlgebraPtr& algebra) {
  const std::size_t d = algebra->dim();
  std::vector<Matrix> actions;
  for (std::size_t i = 0; i < d; ++i) {
    Matrix a(d, d);
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) a(j, k) = algebra->constant(j, i, k);  // e_j * e_i
    actions.push_back(std::move(a));
  }
  return RepModule(algebra, d, std::move(actions));
}

RepModule zero_module(const AlgebraPtr& algebra) {
  return RepModule(algebra, 0, std::vector<Matrix>(algebra->dim(), Matrix(0, 0)));
}

Submodule submodule_generated(const RepModule& m, const std::vector<Vec>& vectors) {
  const PrimeField& f = m.field();
  Echelon ech(f, m.dim());
  std::vector<Vec> queue;
  for (const auto& v : vectors) {
    if (v.size() != m.dim()) throw Error(ErrorKind::ShapeMismatch, "generator length differs from module dimension");
    if (ech.insert(v)) queue.push_back(v);
  }
  while (!queue.empty()) {
    Vec v = std::move(queue.back());
    queue.pop_back();
    for (std::size_t i = 0; i < m.actions().size(); ++i) {
      Vec w = m.act(v, i);
      if (ech.insert(w)) queue.push_back(std::move(w));
    }
  }
  return Submodule(ech.basis());
}

Submodule make_submodule(const RepModule& m, const Matrix& rows) {
  if (rows.rows() != 0 && rows.cols() != m.dim()) throw Error(ErrorKind::ShapeMismatch, "basis width differs from module dimension");
  Submodule s(rows.rows() == 0 ? Matrix(0, m.dim()) : rref(m.field(), rows));
  for (std::size_t r = 0; r < s.dim(); ++r)
    for (std::size_t i = 0; i < m.actions().size(); ++i)
      if (!s.contains(m.field(), m.act(s.basis().row(r), i)))
        throw Error(ErrorKind::NotClosed, "subspace is not closed under the action");
  return s;
}

RepModule as_module(const RepModule& m, const Submodule& n) {
  std::vector<Matrix> actions;
  for (std::size_t i = 0; i < m.actions().size(); ++i) {
    Matrix a(n.dim(), n.dim());
    for (std::size_t r = 0; r < n.dim(); ++r) {
      Vec image = m.act(n.basis().row(r), i);
      Vec coords = n.coordinates(image);
      std::copy(coords.begin(), coords.end(), a.row(r).begin());
    }
    actions.push_back(std::move(a));
  }
  return RepModule(m.algebra_ptr(), n.dim(), std::move(actions));
}

ModuleHom inclusion(const ModulePtr& m, const Submodule& n) {
  return ModuleHom(std::make_shared<const RepModule>(as_module(*m, n)), m, n.basis());
}

Quotient quotient_module(const ModulePtr& m, const Submodule& x) {
  const PrimeField& f = m->field();
  const std::size_t n = m->dim();
  std::vector<bool> is_pivot(n, false);
  for (std::size_t r = 0; r < x.dim(); ++r) {
    auto row = x.basis().row(r);
    std::size_t p = 0;
    while (row[p] == 0) ++p;
    is_pivot[p] = true;
  }
  std::vector<std::size_t> free;
  for (std::size_t c = 0; c < n; ++c)
    if (!is_pivot[c]) free.push_back(c);
  const std::size_t q = free.size();
  Echelon ech(f, x.basis());
  auto project = [&](std::span<const Elem> v) {
    Vec r = ech.reduce(v);
    Vec out(q);
    for (std::size_t j = 0; j < q; ++j) out[j] = r[free[j]];
    return out;
  };
  Matrix pi(n, q);
  for (std::size_t i = 0; i < n; ++i) {
    Vec e(n, 0);
    e[i] = 1;
    Vec row = project(e);
    std::copy(row.begin(), row.end(), pi.row(i).begin());
  }
  std::vector<Matrix> actions;
  for (std::size_t i = 0; i < m->actions().size(); ++i) {
    Matrix a(q, q);
    for (std::size_t j = 0; j < q; ++j) {
      Vec e(n, 0);
      e[free[j]] = 1;
      Vec row = project(m->act(e, i));
      std::copy(row.begin(), row.end(), a.row(j).begin());
    }
    actions.push_back(std::move(a));
  }
  auto qm = std::make_shared<const RepModule>(m->algebra_ptr(), q, std::move(actions));
  return Quotient{qm, ModuleHom(m, qm, std::move(pi)), std::move(free)};
}

Submodule DirectSum::first() const { return Submodule(rref(module->field(), inj1.matrix())); }
Submodule DirectSum::second() const { return Submodule(rref(module->field(), inj2.matrix())); }

DirectSum direct_sum(const ModulePtr& a, const ModulePtr& b) {
  if (!same_algebra(*a, *b)) throw Error(ErrorKind::AlgebraMismatch, "direct sum of modules over different algebras");
  std::vector<Matrix> actions;
  for (std::size_t i = 0; i < a->actions().size(); ++i) actions.push_back(block_diag(a->action(i), b->action(i)));
  const std::size_t n = a->dim() + b->dim();
  auto s = std::make_shared<const RepModule>(a->algebra_ptr(), n, std::move(actions));
  Matrix i1(a->dim(), n), i2(b->dim(), n), p1(n, a->dim()), p2(n, b->dim());
  for (std::size_t r = 0; r < a->dim(); ++r) {
    i1(r, r) = 1;
    p1(r, r) = 1;
  }
  for (std::size_t r = 0; r < b->dim(); ++r) {
    i2(r, a->dim() + r) = 1;
    p2(a->dim() + r, r) = 1;
  }
  return DirectSum{s, ModuleHom(a, s, std::move(i1)), ModuleHom(b, s, std::move(i2)), ModuleHom(s, a, std::move(p1)),
                   ModuleHom(s, b, std::move(p2))};
}

std::vector<Matrix> hom_basis(const RepModule& a, const RepModule& b) {
  if (!same_algebra(a, b)) throw Error(ErrorKind::AlgebraMismatch, "hom space between modules over different algebras");
  const PrimeField& f = a.field();
  const std::size_t da = a.dim(), db = b.dim(), d = a.actions().size();
  const std::size_t unknowns = da * db;
  if (unknowns == 0) return {};
  // Row h (vectorised H) times phi lists the entries of A_i H - H B_i.
  Matrix phi(unknowns, d * unknowns);
  for (std::size_t i = 0; i < d; ++i) {
    const Matrix& ai = a.action(i);
    const Matrix& bi = b.action(i);
    const std::size_t off = i * unknowns;
    for (std::size_t r = 0; r < da; ++r) {
      for (std::size_t c = 0; c < db; ++c) {
        const std::size_t out = off + r * db + c;
        for (std::size_t k = 0; k < da; ++k) phi(k * db + c, out) = f.add(phi(k * db + c, out), ai(r, k));
        for (std::size_t k = 0; k < db; ++k) phi(r * db + k, out) = f.sub(phi(r * db + k, out), bi(k, c));
      }
    }
  }
  Matrix null = left_nullspace(f, phi);
  std::vector<Matrix> out;
  for (std::size_t r = 0; r < null.rows(); ++r) out.emplace_back(da, db, null.row_vec(r));
  return out;
}

std::vector<ModuleHom> hom_space(const ModulePtr& a, const ModulePtr& b) {
  std::vector<ModuleHom> out;
  for (auto& m : hom_basis(*a, *b)) out.emplace_back(a, b, std::move(m));
  return out;
}

std::uint64_t saturating_power(std::uint64_t p, std::size_t k) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < k; ++i) {
    if (r > UINT64_MAX / p) return UINT64_MAX;
    r *= p;
  }
  return r;
}

std::vector<Matrix> enumerate_span(const PrimeField& f, const std::vector<Matrix>& basis, std::size_t rows,
                                   std::size_t cols, const Limits& limits) {
  const std::uint64_t count = saturating_power(f.modulus(), basis.size());
  if (count > limits.max_hom) {
    throw Error(ErrorKind::TooLarge, "span has " + std::to_string(f.modulus()) + "^" + std::to_string(basis.size()) +
                                         " elements, above the hom sweep bound " + std::to_string(limits.max_hom));
  }
  std::vector<Matrix> out;
  out.reserve(count);
  for_each_vector(f, basis.size(), [&](const Vec& coeffs) {
    Matrix m(rows, cols);
    for (std::size_t k = 0; k < basis.size(); ++k)
      if (coeffs[k] != 0) m = add(f, m, scale(f, coeffs[k], basis[k]));
    out.push_back(std::move(m));
  });
  return out;
}

Submodule kernel(const ModuleHom& h) {
  const PrimeField& f = h.source().field();
  if (h.target().dim() == 0) return Submodule::whole(h.source().dim());
  Matrix null = left_nullspace(f, h.matrix());
  if (null.rows() == 0) return Submodule::zero(h.source().dim());
  return Submodule(std::move(null));
}

Submodule image(const ModuleHom& h) {
  if (h.source().dim() == 0) return Submodule::zero(h.target().dim());
  Matrix r = rref(h.source().field(), h.matrix());
  if (r.rows() == 0) return Submodule::zero(h.target().dim());
  return Submodule(std::move(r));
}

ModuleHom compose(const ModuleHom& g, const ModuleHom& h) {
  if (h.target().dim() != g.source().dim() || !(h.target() == g.source()))
    throw Error(ErrorKind::ShapeMismatch, "compose: target of h differs from source of g");
  return ModuleHom(h.source_ptr(), g.target_ptr(), multiply(h.source().field(), h.matrix(), g.matrix()));
}

ModuleHom restrict(const ModuleHom& h, const Submodule& n) {
  if (n.ambient_dim() != h.source().dim()) throw Error(ErrorKind::ShapeMismatch, "restrict: submodule of another module");
  auto sub = std::make_shared<const RepModule>(as_module(h.source(), n));
  return ModuleHom(sub, h.target_ptr(), multiply(h.source().field(), n.basis(), h.matrix()));
}

bool is_mono(const ModuleHom& h) { return kernel(h).is_zero(); }

bool is_epi(const ModuleHom& h) { return image(h).dim() == h.target().dim(); }

}  // namespace modlift
