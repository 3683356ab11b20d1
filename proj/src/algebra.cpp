#include "modlift/algebra.hpp"

#include <cstdint>
#include <string>

#include "modlift/error.hpp"

namespace modlift {

Algebra::Algebra(PrimeField field, std::size_t dim, std::vector<Elem> constants, Vec unity)
    : field_(field), dim_(dim), c_(std::move(constants)), unity_(std::move(unity)) {
  if (dim_ == 0) throw Error(ErrorKind::ShapeMismatch, "algebra dimension must be at least 1");
  if (c_.size() != dim_ * dim_ * dim_) throw Error(ErrorKind::ShapeMismatch, "structure constants must be d*d*d");
  if (unity_.size() != dim_) throw Error(ErrorKind::ShapeMismatch, "unity must have d coordinates");
  for (auto& e : c_) e = static_cast<Elem>(e % field_.modulus());
  for (auto& e : unity_) e = static_cast<Elem>(e % field_.modulus());

  const std::size_t d = dim_;
  // (e_i e_j) e_k == e_i (e_j e_k)
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      for (std::size_t k = 0; k < d; ++k) {
        for (std::size_t m = 0; m < d; ++m) {
          Elem lhs = 0, rhs = 0;
          for (std::size_t l = 0; l < d; ++l) {
            lhs = field_.add(lhs, field_.mul(constant(i, j, l), constant(l, k, m)));
            rhs = field_.add(rhs, field_.mul(constant(j, k, l), constant(i, l, m)));
          }
          if (lhs != rhs) {
            throw Error(ErrorKind::NotAssociative, "(e" + std::to_string(i) + " e" + std::to_string(j) + ") e" +
                                                       std::to_string(k) + " differs from e" + std::to_string(i) +
                                                       " (e" + std::to_string(j) + " e" + std::to_string(k) + ")");
          }
        }
      }
    }
  }
  for (std::size_t i = 0; i < d; ++i) {
    Vec ei(d, 0);
    ei[i] = 1;
    if (multiply(unity_, ei) != ei || multiply(ei, unity_) != ei) {
      throw Error(ErrorKind::NotUnital, "unity is not a two-sided identity on e" + std::to_string(i));
    }
  }
}

Vec Algebra::multiply(std::span<const Elem> x, std::span<const Elem> y) const {
  Vec out(dim_, 0);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (y[j] == 0) continue;
      const Elem s = field_.mul(x[i], y[j]);
      for (std::size_t k = 0; k < dim_; ++k) {
        const Elem c = constant(i, j, k);
        if (c != 0) out[k] = field_.add(out[k], field_.mul(s, c));
      }
    }
  }
  return out;
}

Algebra shaped_matrix_algebra(const PrimeField& field, const std::vector<std::vector<bool>>& shape) {
  const std::size_t n = shape.size();
  if (n == 0) throw Error(ErrorKind::ShapeMismatch, "shape must be a nonempty square matrix");
  for (const auto& row : shape) {
    if (row.size() != n) throw Error(ErrorKind::ShapeMismatch, "shape must be square");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!shape[i][i]) throw Error(ErrorKind::NoUnity, "diagonal entry (" + std::to_string(i + 1) + "," +
                                                          std::to_string(i + 1) + ") missing from shape");
  }
  std::vector<MatrixUnit> units;
  std::vector<std::vector<std::size_t>> index(n, std::vector<std::size_t>(n, SIZE_MAX));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      if (shape[r][c]) {
        index[r][c] = units.size();
        units.emplace_back(r, c);
      }
  const std::size_t d = units.size();
  std::vector<Elem> constants(d * d * d, 0);
  // E_ab E_cd = [b == c] E_ad
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      const auto [a, b] = units[i];
      const auto [c, e] = units[j];
      if (b != c) continue;
      if (!shape[a][e]) {
        throw Error(ErrorKind::NotClosed, "E(" + std::to_string(a + 1) + "," + std::to_string(b + 1) + ") E(" +
                                              std::to_string(c + 1) + "," + std::to_string(e + 1) +
                                              ") leaves the shape");
      }
      constants[(i * d + j) * d + index[a][e]] = 1;
    }
  }
  Vec unity(d, 0);
  for (std::size_t i = 0; i < n; ++i) unity[index[i][i]] = 1;
  Algebra alg(field, d, std::move(constants), std::move(unity));
  alg.units_ = std::move(units);
  alg.matrix_size_ = n;
  alg.shape_ = shape;
  return alg;
}

Algebra algebra_from_structure_constants(const PrimeField& field, std::size_t dim, std::vector<Elem> constants,
                                         Vec unity) {
  return Algebra(field, dim, std::move(constants), std::move(unity));
}

Algebra truncated_polynomial_algebra(const PrimeField& field, std::size_t k) {
  if (k == 0) throw Error(ErrorKind::ShapeMismatch, "F_p[x]/(x^0) is the zero ring");
  std::vector<Elem> constants(k * k * k, 0);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; i + j < k; ++j) constants[(i * k + j) * k + i + j] = 1;
  Vec unity(k, 0);
  unity[0] = 1;
  return Algebra(field, k, std::move(constants), std::move(unity));
}

}  // namespace modlift
