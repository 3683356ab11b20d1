#include <gtest/gtest.h>

#include "modlift/error.hpp"
#include "modlift/module.hpp"
#include "support.hpp"

using namespace modlift;
using namespace modlift::testing;

namespace {

template <typename F>
ErrorKind error_of(F&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorKind::SchemaError;
}

// Independent realisation: multiply the basis matrices as actual n x n matrices.
Matrix unit_matrix(std::size_t n, MatrixUnit u) {
  Matrix m(n, n);
  m(u.first, u.second) = 1;
  return m;
}

}  // namespace

TEST(ShapedAlgebra, ExampleShapeIsNineDimensional) {
  auto alg = shaped(2, example_shape());
  EXPECT_EQ(alg->dim(), 9u);
  EXPECT_EQ(alg->matrix_size(), 4u);
}

TEST(ShapedAlgebra, DiagonalShapeIsCommutative) {
  auto alg = shaped(3, diagonal_shape(4));
  ASSERT_EQ(alg->dim(), 4u);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      for (std::size_t k = 0; k < 4; ++k) EXPECT_EQ(alg->constant(i, j, k), alg->constant(j, i, k));
}

TEST(ShapedAlgebra, StructureConstantsMatchMatrixProducts) {
  const PrimeField f(2);
  for (const auto& shape : {upper_shape(2), example_shape(), full_shape(2)}) {
    auto alg = shaped(2, shape);
    const auto& units = *alg->matrix_units();
    const std::size_t n = alg->matrix_size();
    for (std::size_t i = 0; i < alg->dim(); ++i) {
      for (std::size_t j = 0; j < alg->dim(); ++j) {
        Matrix prod = multiply(f, unit_matrix(n, units[i]), unit_matrix(n, units[j]));
        Matrix expect(n, n);
        for (std::size_t k = 0; k < alg->dim(); ++k)
          if (alg->constant(i, j, k)) expect(units[k].first, units[k].second) = 1;
        EXPECT_EQ(prod, expect);
      }
    }
  }
  EXPECT_EQ(shaped(2, upper_shape(2))->dim(), 3u);
}

TEST(ShapedAlgebra, RejectsBadShapes) {
  std::vector<std::vector<bool>> gap = {{true, true, false}, {false, true, true}, {false, false, true}};
  EXPECT_EQ(error_of([&] { shaped(2, gap); }), ErrorKind::NotClosed);
  std::vector<std::vector<bool>> no_diag = {{true, true}, {false, false}};
  EXPECT_EQ(error_of([&] { shaped(2, no_diag); }), ErrorKind::NoUnity);
}

TEST(StructureConstants, TruncatedPolynomialPassesBruteForceAssociativity) {
  const PrimeField f(2);
  Algebra alg = truncated_polynomial_algebra(f, 3);
  // Oracle: associativity on every triple of elements, not just basis triples.
  std::vector<Vec> elems;
  for_each_vector(f, 3, [&](const Vec& v) { elems.push_back(v); });
  for (const auto& x : elems)
    for (const auto& y : elems)
      for (const auto& z : elems) ASSERT_EQ(alg.multiply(alg.multiply(x, y), z), alg.multiply(x, alg.multiply(y, z)));
}

TEST(StructureConstants, DetectsNonAssociativeAndNonUnital) {
  const PrimeField f(2);
  // basis 1, a, b with ab = a and every other product of a, b zero: (ab)b = a but a(bb) = 0.
  std::vector<Elem> c(27, 0);
  auto set = [&](std::size_t i, std::size_t j, std::size_t k) { c[(i * 3 + j) * 3 + k] = 1; };
  for (std::size_t i = 0; i < 3; ++i) {
    set(0, i, i);
    if (i != 0) set(i, 0, i);
  }
  set(1, 2, 1);
  EXPECT_EQ(error_of([&] { algebra_from_structure_constants(f, 3, c, {1, 0, 0}); }), ErrorKind::NotAssociative);

  Algebra poly = truncated_polynomial_algebra(f, 2);
  EXPECT_EQ(error_of([&] { algebra_from_structure_constants(f, 2, poly.constants(), {0, 1}); }), ErrorKind::NotUnital);

  Algebra field = algebra_from_structure_constants(f, 1, {1}, {1});
  EXPECT_EQ(field.dim(), 1u);
}

TEST(RowModule, ExampleAndDegenerateCases) {
  auto alg = shaped(2, example_shape());
  RepModule m = row_module(alg, 4);
  EXPECT_EQ(m.dim(), 4u);
  EXPECT_EQ(row_module(alg, 0).dim(), 0u);
  EXPECT_EQ(error_of([&] { row_module(alg, 3); }), ErrorKind::ShapeMismatch);
  auto poly = std::make_shared<const Algebra>(truncated_polynomial_algebra(PrimeField(2), 2));
  EXPECT_EQ(error_of([&] { row_module(poly, 2); }), ErrorKind::ShapeMismatch);
}

TEST(RowModule, DiagonalAlgebraGivesSemisimpleModule) {
  auto alg = shaped(3, diagonal_shape(3));
  RepModule m = row_module(alg, 3);
  const PrimeField& f = m.field();
  // Every coordinate subspace is closed.
  for (unsigned mask = 0; mask < 8; ++mask) {
    std::vector<Vec> rows;
    for (std::size_t i = 0; i < 3; ++i)
      if (mask & (1u << i)) {
        Vec e(3, 0);
        e[i] = 1;
        rows.push_back(e);
      }
    Matrix basis = rows.empty() ? Matrix(0, 3) : Matrix::from_rows(3, rows);
    EXPECT_NO_THROW(make_submodule(m, basis));
  }
  (void)f;
}

TEST(RepModule, RejectsNonMultiplicativeActions) {
  auto alg = std::make_shared<const Algebra>(truncated_polynomial_algebra(PrimeField(2), 2));
  // x must act nilpotently; the identity does not square to zero.
  EXPECT_EQ(error_of([&] { RepModule(alg, 1, {Matrix::identity(1), Matrix::identity(1)}); }), ErrorKind::NotClosed);
  EXPECT_EQ(error_of([&] { RepModule(alg, 1, {Matrix(1, 1), Matrix(1, 1)}); }), ErrorKind::NotUnital);
}

TEST(SubmoduleGenerated, ExampleGenerators) {
  auto m = example_module(2);
  const PrimeField& f = m->field();
  EXPECT_TRUE(submodule_generated(*m, {}).is_zero());
  EXPECT_EQ(submodule_generated(*m, {vec({0, 0, 0, 1})}), span_of(f, 4, {vec({0, 0, 0, 1})}));
  EXPECT_TRUE(submodule_generated(*m, {vec({1, 0, 0, 0})}).is_whole());
  EXPECT_EQ(submodule_generated(*m, {vec({0, 1, 0, 0})}), span_of(f, 4, {vec({0, 1, 0, 0}), vec({0, 0, 0, 1})}));
}

TEST(SubmoduleGenerated, IdempotentAndGeneratorIndependent) {
  auto m = example_module(3);
  const PrimeField& f = m->field();
  for_each_vector(f, 4, [&](const Vec& v) {
    Submodule s = submodule_generated(*m, {v});
    std::vector<Vec> basis_rows;
    for (std::size_t r = 0; r < s.dim(); ++r) basis_rows.push_back(s.basis().row_vec(r));
    EXPECT_EQ(submodule_generated(*m, basis_rows), s);
    Vec twice(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) twice[i] = f.mul(2, v[i]);
    EXPECT_EQ(submodule_generated(*m, {twice, v}), s);
  });
}

TEST(Quotient, ZeroWholeAndSocle) {
  auto m = example_module(2);
  const PrimeField& f = m->field();
  auto q0 = quotient_module(m, Submodule::zero(4));
  EXPECT_EQ(q0.module->dim(), 4u);
  EXPECT_TRUE(is_mono(q0.projection));
  EXPECT_TRUE(is_epi(q0.projection));

  auto qm = quotient_module(m, Submodule::whole(4));
  EXPECT_EQ(qm.module->dim(), 0u);

  Submodule soc = span_of(f, 4, {vec({0, 0, 0, 1})});
  auto qs = quotient_module(m, soc);
  EXPECT_EQ(qs.module->dim(), 3u);
  EXPECT_TRUE(is_epi(qs.projection));
  EXPECT_EQ(kernel(qs.projection), soc);
}

TEST(DirectSum, BlockStructure) {
  auto u = example_module(2);
  const PrimeField& f = u->field();
  DirectSum ds = direct_sum(u, u);
  EXPECT_EQ(ds.module->dim(), 8u);
  EXPECT_TRUE(intersection(f, ds.first(), ds.second()).is_zero());
  EXPECT_EQ(compose(ds.proj1, ds.inj1).matrix(), Matrix::identity(4));
  EXPECT_EQ(compose(ds.proj2, ds.inj2).matrix(), Matrix::identity(4));
  Matrix total = add(f, compose(ds.inj1, ds.proj1).matrix(), compose(ds.inj2, ds.proj2).matrix());
  EXPECT_EQ(total, Matrix::identity(8));

  auto zero = std::make_shared<const RepModule>(zero_module(u->algebra_ptr()));
  DirectSum with_zero = direct_sum(u, zero);
  EXPECT_EQ(*with_zero.module, *u);

  auto other = chain_module(2, 2);
  EXPECT_EQ(error_of([&] { direct_sum(u, other); }), ErrorKind::AlgebraMismatch);
}

TEST(HomSpace, TrivialCases) {
  auto m = example_module(2);
  auto zero = std::make_shared<const RepModule>(zero_module(m->algebra_ptr()));
  EXPECT_TRUE(hom_space(m, zero).empty());
  auto basis = hom_space(m, m);
  ASSERT_FALSE(basis.empty());
  std::vector<Matrix> all = enumerate_span(m->field(), hom_basis(*m, *m), 4, 4, {});
  EXPECT_NE(std::find(all.begin(), all.end(), Matrix::identity(4)), all.end());
}

// Oracle: scan every matrix over F_2 and keep the commuting ones.
std::vector<Matrix> brute_force_homs(const RepModule& a, const RepModule& b) {
  const PrimeField f(2);
  std::vector<Matrix> out;
  for_each_vector(f, a.dim() * b.dim(), [&](const Vec& v) {
    Matrix m(a.dim(), b.dim(), v);
    if (commutes(a, b, m)) out.push_back(m);
  });
  std::sort(out.begin(), out.end());
  return out;
}

TEST(HomSpace, EndomorphismsOfExampleModuleMatchBruteForce) {
  auto m = example_module(2);
  auto brute = brute_force_homs(*m, *m);
  // 2^16 candidates; only the scalars commute.
  EXPECT_EQ(brute.size(), 2u);
  EXPECT_EQ(hom_basis(*m, *m).size(), 1u);
}

TEST(HomSpace, MatchesBruteForceScanOnSmallPairs) {
  auto m = example_module(2);
  const PrimeField& f = m->field();
  std::vector<ModulePtr> mods = {m};
  auto q = quotient_module(m, span_of(f, 4, {vec({0, 0, 0, 1})}));
  mods.push_back(q.module);
  mods.push_back(std::make_shared<const RepModule>(as_module(*m, span_of(f, 4, {vec({0, 1, 0, 0}), vec({0, 0, 1, 0}), vec({0, 0, 0, 1})}))));
  for (const auto& a : mods) {
    for (const auto& b : mods) {
      auto basis = hom_basis(*a, *b);
      auto span = enumerate_span(f, basis, a->dim(), b->dim(), {});
      std::sort(span.begin(), span.end());
      EXPECT_EQ(span, brute_force_homs(*a, *b));
    }
  }
}

TEST(HomOps, KernelImageComposeRestrict) {
  auto m = example_module(2);
  const PrimeField& f = m->field();
  ModuleHom id(m, m, Matrix::identity(4));
  EXPECT_TRUE(kernel(id).is_zero());
  EXPECT_TRUE(is_mono(id));
  EXPECT_TRUE(is_epi(id));
  ModuleHom zero(m, m, Matrix(4, 4));
  EXPECT_TRUE(image(zero).is_zero());
  EXPECT_FALSE(is_epi(zero));

  Submodule rad = span_of(f, 4, {vec({0, 1, 0, 0}), vec({0, 0, 1, 0}), vec({0, 0, 0, 1})});
  ModuleHom r = restrict(id, rad);
  EXPECT_EQ(r.source().dim(), 3u);
  EXPECT_EQ(image(r), rad);
  EXPECT_TRUE(is_mono(r));
  EXPECT_FALSE(is_epi(r));

  auto q = quotient_module(m, rad);
  ModuleHom composed = compose(q.projection, r);
  EXPECT_TRUE(image(composed).is_zero());
  EXPECT_EQ(error_of([&] { compose(r, q.projection); }), ErrorKind::ShapeMismatch);
  EXPECT_EQ(error_of([&] { ModuleHom(m, m, Matrix(4, 4, {0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0})); }),
            ErrorKind::NotWellDefined);
}
