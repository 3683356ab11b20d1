#include "modlift/matrix.hpp"

#include <algorithm>
#include <numeric>

#include "modlift/error.hpp"

namespace modlift {

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<Elem> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
  if (data_.size() != rows_ * cols_) throw Error(ErrorKind::ShapeMismatch, "matrix data length");
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(std::size_t cols, const std::vector<Vec>& rows) {
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw Error(ErrorKind::ShapeMismatch, "row length differs from column count");
    std::copy(rows[r].begin(), rows[r].end(), m.row(r).begin());
  }
  return m;
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](Elem e) { return e == 0; });
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Matrix multiply(const PrimeField& f, const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw Error(ErrorKind::ShapeMismatch, "matrix product dimensions");
  Matrix out(a.rows(), b.cols());
  const std::uint64_t p = f.modulus();
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < b.cols(); ++c) {
      std::uint64_t acc = 0;
      for (std::size_t k = 0; k < a.cols(); ++k) {
        acc = (acc + std::uint64_t{a(r, k)} * b(k, c)) % p;
      }
      out(r, c) = static_cast<Elem>(acc);
    }
  }
  return out;
}

Matrix add(const PrimeField& f, const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw Error(ErrorKind::ShapeMismatch, "matrix sum dimensions");
  Matrix out(a.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = f.add(a(r, c), b(r, c));
  return out;
}

Matrix subtract(const PrimeField& f, const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw Error(ErrorKind::ShapeMismatch, "matrix difference dimensions");
  Matrix out(a.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = f.sub(a(r, c), b(r, c));
  return out;
}

Matrix scale(const PrimeField& f, Elem s, const Matrix& a) {
  Matrix out(a.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = f.mul(s, a(r, c));
  return out;
}

Vec apply(const PrimeField& f, std::span<const Elem> v, const Matrix& a) {
  if (v.size() != a.rows()) throw Error(ErrorKind::ShapeMismatch, "vector length differs from matrix rows");
  const std::uint64_t p = f.modulus();
  Vec out(a.cols(), 0);
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (v[k] == 0) continue;
    for (std::size_t c = 0; c < a.cols(); ++c) {
      out[c] = static_cast<Elem>((out[c] + std::uint64_t{v[k]} * a(k, c)) % p);
    }
  }
  return out;
}

Matrix vstack(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.cols() && a.rows() != 0 && b.rows() != 0)
    throw Error(ErrorKind::ShapeMismatch, "vstack column counts");
  const std::size_t cols = a.rows() != 0 ? a.cols() : b.cols();
  Matrix out(a.rows() + b.rows(), cols);
  for (std::size_t r = 0; r < a.rows(); ++r) std::copy(a.row(r).begin(), a.row(r).end(), out.row(r).begin());
  for (std::size_t r = 0; r < b.rows(); ++r)
    std::copy(b.row(r).begin(), b.row(r).end(), out.row(a.rows() + r).begin());
  return out;
}

Matrix block_diag(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = a(r, c);
  for (std::size_t r = 0; r < b.rows(); ++r)
    for (std::size_t c = 0; c < b.cols(); ++c) out(a.rows() + r, a.cols() + c) = b(r, c);
  return out;
}

// ---------------------------------------------------------------------------
// Echelon

Echelon::Echelon(const PrimeField& f, const Matrix& rows) : f_(f), n_(rows.cols()) { insert_rows(rows); }

Vec Echelon::reduce(std::span<const Elem> v) const {
  Vec out(v.begin(), v.end());
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const Elem c = out[pivots_[i]];
    if (c == 0) continue;
    const Vec& row = rows_[i];
    for (std::size_t j = 0; j < n_; ++j) {
      if (row[j] != 0) out[j] = f_.sub(out[j], f_.mul(c, row[j]));
    }
  }
  return out;
}

bool Echelon::insert(std::span<const Elem> v) {
  if (v.size() != n_) throw Error(ErrorKind::ShapeMismatch, "vector length differs from ambient dimension");
  Vec r = reduce(v);
  auto it = std::find_if(r.begin(), r.end(), [](Elem e) { return e != 0; });
  if (it == r.end()) return false;
  const std::size_t pivot = static_cast<std::size_t>(it - r.begin());
  const Elem inv = f_.inv(r[pivot]);
  for (auto& e : r) e = f_.mul(e, inv);
  for (auto& row : rows_) {
    const Elem c = row[pivot];
    if (c == 0) continue;
    for (std::size_t j = 0; j < n_; ++j) {
      if (r[j] != 0) row[j] = f_.sub(row[j], f_.mul(c, r[j]));
    }
  }
  rows_.push_back(std::move(r));
  pivots_.push_back(pivot);
  return true;
}

void Echelon::insert_rows(const Matrix& m) {
  for (std::size_t r = 0; r < m.rows(); ++r) insert(m.row(r));
}

bool Echelon::contains(std::span<const Elem> v) const {
  Vec r = reduce(v);
  return std::all_of(r.begin(), r.end(), [](Elem e) { return e == 0; });
}

bool Echelon::contains_rows(const Matrix& m) const {
  for (std::size_t r = 0; r < m.rows(); ++r)
    if (!contains(m.row(r))) return false;
  return true;
}

Matrix Echelon::basis() const {
  std::vector<std::size_t> order(rows_.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return pivots_[a] < pivots_[b]; });
  Matrix out(rows_.size(), n_);
  for (std::size_t i = 0; i < order.size(); ++i) std::copy(rows_[order[i]].begin(), rows_[order[i]].end(), out.row(i).begin());
  return out;
}

Matrix rref(const PrimeField& f, const Matrix& a) { return Echelon(f, a).basis(); }

std::size_t rank(const PrimeField& f, const Matrix& a) { return Echelon(f, a).rank(); }

bool is_invertible(const PrimeField& f, const Matrix& a) {
  return a.rows() == a.cols() && rank(f, a) == a.rows();
}

// ---------------------------------------------------------------------------
// LeftSolver: Gaussian elimination on [A | I].

LeftSolver::LeftSolver(const PrimeField& f, const Matrix& a) : f_(f), m_(a.rows()), n_(a.cols()) {
  const std::size_t width = n_ + m_;
  for (std::size_t r = 0; r < m_; ++r) {
    Vec v(width, 0);
    std::copy(a.row(r).begin(), a.row(r).end(), v.begin());
    v[n_ + r] = 1;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const Elem c = v[pivots_[i]];
      if (c == 0) continue;
      for (std::size_t j = 0; j < width; ++j) v[j] = f_.sub(v[j], f_.mul(c, rows_[i][j]));
    }
    std::size_t pivot = n_;
    for (std::size_t j = 0; j < n_; ++j) {
      if (v[j] != 0) {
        pivot = j;
        break;
      }
    }
    if (pivot == n_) {
      null_rows_.emplace_back(v.begin() + static_cast<std::ptrdiff_t>(n_), v.end());
      continue;
    }
    const Elem inv = f_.inv(v[pivot]);
    for (auto& e : v) e = f_.mul(e, inv);
    for (auto& row : rows_) {
      const Elem c = row[pivot];
      if (c == 0) continue;
      for (std::size_t j = 0; j < width; ++j) row[j] = f_.sub(row[j], f_.mul(c, v[j]));
    }
    rows_.push_back(std::move(v));
    pivots_.push_back(pivot);
  }
}

std::optional<Vec> LeftSolver::solve(std::span<const Elem> b) const {
  if (b.size() != n_) throw Error(ErrorKind::ShapeMismatch, "right-hand side length");
  Vec rest(b.begin(), b.end());
  Vec x(m_, 0);
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const Elem c = rest[pivots_[i]];
    if (c == 0) continue;
    for (std::size_t j = 0; j < n_; ++j) rest[j] = f_.sub(rest[j], f_.mul(c, rows_[i][j]));
    for (std::size_t j = 0; j < m_; ++j) x[j] = f_.add(x[j], f_.mul(c, rows_[i][n_ + j]));
  }
  if (std::any_of(rest.begin(), rest.end(), [](Elem e) { return e != 0; })) return std::nullopt;
  return x;
}

Matrix LeftSolver::left_nullspace() const { return rref(f_, Matrix::from_rows(m_, null_rows_)); }

Matrix left_nullspace(const PrimeField& f, const Matrix& a) { return LeftSolver(f, a).left_nullspace(); }

std::optional<Matrix> solve_left(const PrimeField& f, const Matrix& a, const Matrix& b) {
  LeftSolver solver(f, a);
  Matrix x(b.rows(), a.rows());
  for (std::size_t r = 0; r < b.rows(); ++r) {
    auto sol = solver.solve(b.row(r));
    if (!sol) return std::nullopt;
    std::copy(sol->begin(), sol->end(), x.row(r).begin());
  }
  return x;
}

Matrix intersect_rowspaces(const PrimeField& f, const Matrix& a, const Matrix& b) {
  const std::size_t n = a.rows() != 0 ? a.cols() : b.cols();
  if (a.rows() == 0 || b.rows() == 0) return Matrix(0, n);
  // (x, y) with x*A + y*B = 0 gives x*A in both row spaces.
  Matrix null = left_nullspace(f, vstack(a, b));
  Matrix xs(null.rows(), a.rows());
  for (std::size_t r = 0; r < null.rows(); ++r)
    for (std::size_t c = 0; c < a.rows(); ++c) xs(r, c) = null(r, c);
  return rref(f, multiply(f, xs, a));
}

Matrix sum_rowspaces(const PrimeField& f, const Matrix& a, const Matrix& b) { return rref(f, vstack(a, b)); }

}  // namespace modlift
