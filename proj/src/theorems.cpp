#include "modlift/theorems.hpp"

#include <functional>

#include "modlift/error.hpp"
#include "modlift/properties.hpp"

namespace modlift {
namespace {

Vec flatten(const Matrix& m) { return m.data(); }

Matrix combine(const PrimeField& f, const std::vector<Matrix>& basis, const Vec& c, std::size_t rows,
               std::size_t cols) {
  Matrix out(rows, cols);
  for (std::size_t k = 0; k < basis.size(); ++k)
    if (c[k] != 0) out = add(f, out, scale(f, c[k], basis[k]));
  return out;
}

/// Calls `accept` on each H = sum c_k B_k with sum c_k L(B_k) = T until it
/// returns true. `images` holds L(B_k).
bool search_affine(const PrimeField& f, const std::vector<Matrix>& basis, const std::vector<Matrix>& images,
                   const Matrix& target, std::size_t rows, std::size_t cols, const Limits& limits,
                   const std::function<bool(const Matrix&)>& accept) {
  const std::size_t k = basis.size();
  Vec particular(k, 0);
  Matrix null;
  const std::size_t len = target.data().size();
  if (k == 0) {
    if (!target.is_zero()) return false;
    return accept(Matrix(rows, cols));
  }
  if (len == 0) {
    null = Matrix::identity(k);
  } else {
    Matrix system(k, len);
    for (std::size_t i = 0; i < k; ++i) {
      Vec row = flatten(images[i]);
      std::copy(row.begin(), row.end(), system.row(i).begin());
    }
    LeftSolver solver(f, system);
    auto sol = solver.solve(flatten(target));
    if (!sol) return false;
    particular = *sol;
    null = solver.left_nullspace();
  }
  if (saturating_power(f.modulus(), null.rows()) > limits.max_hom)
    throw Error(ErrorKind::TooLarge, "solution space of a theorem clause exceeds the hom cap");
  bool found = false;
  for_each_vector(f, null.rows(), [&](const Vec& d) {
    if (found) return;
    Vec c = particular;
    for (std::size_t j = 0; j < d.size(); ++j)
      if (d[j] != 0)
        for (std::size_t i = 0; i < k; ++i) c[i] = f.add(c[i], f.mul(d[j], null(j, i)));
    if (accept(combine(f, basis, c, rows, cols))) found = true;
  });
  return found;
}

void require_hollow_uniform(const Analysis& a) {
  if (a.dim() == 0 || !is_hollow(a) || !is_uniform(a))
    throw Error(ErrorKind::NotHollowUniform, "theorem conditions are stated for hollow and uniform U");
}

/// Matrix of U/K' → U/K induced by the identity, for K' ⊆ K.
Matrix induced_projection(const Quotient& fine, const Quotient& coarse) {
  const Matrix& pi = coarse.projection.matrix();
  Matrix g(fine.free_columns.size(), pi.cols());
  for (std::size_t j = 0; j < fine.free_columns.size(); ++j) {
    auto src = pi.row(fine.free_columns[j]);
    std::copy(src.begin(), src.end(), g.row(j).begin());
  }
  return g;
}

TheoremResult finish(TheoremResult r) {
  r.holds = !r.violation.has_value();
  return r;
}

}  // namespace

TheoremResult thm_lifting_condition(const ModulePtr& u, Variant variant, const Limits& limits) {
  Analysis a(u, limits);
  require_hollow_uniform(a);
  const PrimeField& f = u->field();
  const SubmoduleLattice& lat = a.lattice();
  const std::size_t d = u->dim();
  const std::vector<Matrix> end_basis = hom_basis(*u, *u);

  std::vector<Quotient> quotients;
  quotients.reserve(lat.size());
  for (std::size_t i = 0; i < lat.size(); ++i) quotients.push_back(quotient_module(u, lat[i]));
  // Hom(N, U) for variant b, Hom(U, U/K') for variant c.
  std::vector<RepModule> sub_modules;
  std::vector<std::vector<Matrix>> aux_basis;
  for (std::size_t i = 0; i < lat.size(); ++i) {
    if (variant == Variant::B) {
      sub_modules.push_back(as_module(*u, lat[i]));
      aux_basis.push_back(hom_basis(sub_modules.back(), *u));
    } else {
      aux_basis.push_back(hom_basis(*u, *quotients[i].module));
    }
  }

  TheoremResult result;
  for (std::size_t ki = 0; ki < lat.size() && !result.violation; ++ki) {
    const Quotient& q = quotients[ki];
    const Matrix& pi = q.projection.matrix();
    const std::size_t dq = q.module->dim();
    for (const Matrix& fm : enumerate_span(f, hom_basis(*u, *q.module), d, dq, limits)) {
      ++result.triples;
      TripleWitness w{ki, fm, Clause::I, std::nullopt, {}};
      std::vector<Matrix> images;
      for (const Matrix& e : end_basis) images.push_back(multiply(f, e, pi));
      bool ok = search_affine(f, end_basis, images, fm, d, d, limits, [&](const Matrix& h) {
        w.h = h;
        return true;
      });
      if (!ok) {
        w.clause = Clause::II;
        for (std::size_t ai = 0; ai < lat.size() && !ok; ++ai) {
          const std::vector<Matrix>& basis = aux_basis[ai];
          if (variant == Variant::B) {
            // h : N → U epi with π|_N = h f.
            const Submodule& n = lat[ai];
            if (n.dim() < d) continue;
            images.clear();
            for (const Matrix& b : basis) images.push_back(multiply(f, b, fm));
            ok = search_affine(f, basis, images, multiply(f, n.basis(), pi), n.dim(), d, limits,
                               [&](const Matrix& h) {
                                 if (rank(f, h) != d) return false;
                                 w.h = h;
                                 return true;
                               });
          } else {
            // h : U → U/K' mono with g' h = f.
            if (!lat.leq(ai, ki)) continue;
            const Quotient& fine = quotients[ai];
            if (fine.module->dim() < d) continue;
            Matrix g = induced_projection(fine, q);
            images.clear();
            for (const Matrix& b : basis) images.push_back(multiply(f, b, g));
            ok = search_affine(f, basis, images, fm, d, fine.module->dim(), limits, [&](const Matrix& h) {
              if (rank(f, h) != d) return false;
              w.h = h;
              return true;
            });
          }
          if (ok) w.auxiliary = ai;
        }
      }
      if (!ok) {
        w.h = Matrix();
        result.violation = w;
        break;
      }
      result.witnesses.push_back(std::move(w));
    }
  }
  return finish(std::move(result));
}

TheoremResult thm_extending_condition(const ModulePtr& u, Variant variant, const Limits& limits) {
  Analysis a(u, limits);
  require_hollow_uniform(a);
  const PrimeField& f = u->field();
  const SubmoduleLattice& lat = a.lattice();
  const std::size_t d = u->dim();
  const std::vector<Matrix> end_basis = hom_basis(*u, *u);

  std::vector<RepModule> sub_modules;
  std::vector<Quotient> quotients;
  std::vector<std::vector<Matrix>> aux_basis;
  for (std::size_t i = 0; i < lat.size(); ++i) {
    sub_modules.push_back(as_module(*u, lat[i]));
    if (variant == Variant::B) {
      quotients.push_back(quotient_module(u, lat[i]));
      aux_basis.push_back(hom_basis(*u, *quotients.back().module));
    } else {
      aux_basis.push_back(hom_basis(sub_modules.back(), *u));
    }
  }

  TheoremResult result;
  for (std::size_t xi = 0; xi < lat.size() && !result.violation; ++xi) {
    const Submodule& x = lat[xi];
    const Matrix& g = x.basis();
    for (const Matrix& fm : enumerate_span(f, hom_basis(sub_modules[xi], *u), x.dim(), d, limits)) {
      ++result.triples;
      TripleWitness w{xi, fm, Clause::I, std::nullopt, {}};
      std::vector<Matrix> images;
      for (const Matrix& e : end_basis) images.push_back(multiply(f, g, e));
      bool ok = search_affine(f, end_basis, images, fm, d, d, limits, [&](const Matrix& h) {
        w.h = h;
        return true;
      });
      if (!ok) {
        w.clause = Clause::II;
        for (std::size_t ai = 0; ai < lat.size() && !ok; ++ai) {
          const std::vector<Matrix>& basis = aux_basis[ai];
          if (variant == Variant::B) {
            // h : U → U/K mono with h f = π|_X.
            const Quotient& q = quotients[ai];
            const std::size_t dq = q.module->dim();
            if (dq < d) continue;
            images.clear();
            for (const Matrix& b : basis) images.push_back(multiply(f, fm, b));
            ok = search_affine(f, basis, images, multiply(f, g, q.projection.matrix()), d, dq, limits,
                               [&](const Matrix& h) {
                                 if (rank(f, h) != d) return false;
                                 w.h = h;
                                 return true;
                               });
          } else {
            // h : N → U epi with f = h|_X.
            const Submodule& n = lat[ai];
            if (!lat.leq(xi, ai) || n.dim() < d) continue;
            Matrix g_in_n(x.dim(), n.dim());
            for (std::size_t r = 0; r < x.dim(); ++r) {
              Vec c = n.coordinates(x.basis().row(r));
              std::copy(c.begin(), c.end(), g_in_n.row(r).begin());
            }
            images.clear();
            for (const Matrix& b : basis) images.push_back(multiply(f, g_in_n, b));
            ok = search_affine(f, basis, images, fm, n.dim(), d, limits, [&](const Matrix& h) {
              if (rank(f, h) != d) return false;
              w.h = h;
              return true;
            });
          }
          if (ok) w.auxiliary = ai;
        }
      }
      if (!ok) {
        w.h = Matrix();
        result.violation = w;
        break;
      }
      result.witnesses.push_back(std::move(w));
    }
  }
  return finish(std::move(result));
}

}  // namespace modlift
