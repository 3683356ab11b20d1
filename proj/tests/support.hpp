#pragma once

// Small builders shared by the unit tests.

#include <memory>
#include <string>
#include <vector>

#include "modlift/algebra.hpp"
#include "modlift/module.hpp"

namespace modlift::testing {

// Upper-triangular 4x4 pattern with (2,3) and its transpose missing.
inline std::vector<std::vector<bool>> example_shape() {
  return {{true, true, true, true}, {false, true, false, true}, {false, false, true, true}, {false, false, false, true}};
}

inline std::vector<std::vector<bool>> diagonal_shape(std::size_t n) {
  std::vector<std::vector<bool>> s(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) s[i][i] = true;
  return s;
}

inline std::vector<std::vector<bool>> full_shape(std::size_t n) {
  return std::vector<std::vector<bool>>(n, std::vector<bool>(n, true));
}

inline std::vector<std::vector<bool>> upper_shape(std::size_t n) {
  std::vector<std::vector<bool>> s(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) s[i][j] = true;
  return s;
}

inline AlgebraPtr shaped(std::int64_t p, const std::vector<std::vector<bool>>& shape) {
  return std::make_shared<const Algebra>(shaped_matrix_algebra(PrimeField(p), shape));
}

inline ModulePtr example_module(std::int64_t p) {
  return std::make_shared<const RepModule>(row_module(shaped(p, example_shape()), 4));
}

inline ModulePtr chain_module(std::int64_t p, std::size_t k) {
  auto alg = std::make_shared<const Algebra>(truncated_polynomial_algebra(PrimeField(p), k));
  return std::make_shared<const RepModule>(regular_module(alg));
}

// K<x,y>/(x^2, y^2, yx) on the basis 1, x, y, xy.
inline AlgebraPtr kronecker_local(std::int64_t p) {
  std::vector<Elem> c(64, 0);
  auto set = [&](int i, int j, int k) { c[(i * 4 + j) * 4 + k] = 1; };
  for (int i = 0; i < 4; ++i) {
    set(0, i, i);
    if (i) set(i, 0, i);
  }
  set(1, 2, 3);
  return std::make_shared<const Algebra>(algebra_from_structure_constants(PrimeField(p), 4, c, {1, 0, 0, 0}));
}

// Regular module modulo yA: uniserial of length 3, its square is neither lifting nor extending.
inline ModulePtr kronecker_module(std::int64_t p) {
  auto reg = std::make_shared<const RepModule>(regular_module(kronecker_local(p)));
  return quotient_module(reg, submodule_generated(*reg, {Vec{0, 0, 1, 0}})).module;
}

inline ModulePtr simple_full_module(std::int64_t p) {
  return std::make_shared<const RepModule>(row_module(shaped(p, full_shape(2)), 2));
}

inline ModulePtr semisimple_module(std::int64_t p) {
  return std::make_shared<const RepModule>(regular_module(shaped(p, diagonal_shape(2))));
}

inline ModulePtr square(const ModulePtr& u) { return direct_sum(u, u).module; }

struct Named {
  std::string name;
  ModulePtr module;
};

// Hollow and uniform modules used by the theorem sweeps.
inline std::vector<Named> hollow_uniform_corpus() {
  std::vector<Named> out;
  for (std::int64_t p : {2, 3}) {
    std::string s = "_p" + std::to_string(p);
    out.push_back({"example" + s, example_module(p)});
    for (std::size_t k = 1; k <= 4; ++k) out.push_back({"chain" + std::to_string(k) + s, chain_module(p, k)});
    out.push_back({"full2" + s, simple_full_module(p)});
    out.push_back({"kronecker" + s, kronecker_module(p)});
  }
  return out;
}

inline Vec vec(std::initializer_list<Elem> v) { return Vec(v); }

inline Submodule span_of(const PrimeField& f, std::size_t n, const std::vector<Vec>& rows) {
  if (rows.empty()) return Submodule::zero(n);
  Matrix m = rref(f, Matrix::from_rows(n, rows));
  if (m.rows() == 0) return Submodule::zero(n);
  return Submodule(m);
}

}  // namespace modlift::testing
