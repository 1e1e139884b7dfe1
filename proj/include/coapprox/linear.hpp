#pragma once

// Exact linear algebra over an ordered field. Every routine here assumes the
// scalar type performs exact arithmetic; no pivot tolerance is used.

#include "coapprox/rational.hpp"

#include <cassert>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace coapprox {

template <typename Derived>
typename Derived::Scalar l1_norm(const Eigen::MatrixBase<Derived>& v) {
  using Scalar = typename Derived::Scalar;
  Scalar total(0);
  for (Eigen::Index i = 0; i < v.size(); ++i) total += abs_value<Scalar>(v(i));
  return total;
}

template <typename Derived>
typename Derived::Scalar linf_norm(const Eigen::MatrixBase<Derived>& v) {
  using Scalar = typename Derived::Scalar;
  Scalar best(0);
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    Scalar a = abs_value<Scalar>(v(i));
    if (a > best) best = std::move(a);
  }
  return best;
}

template <typename Derived>
bool is_zero(const Eigen::MatrixBase<Derived>& v) {
  for (Eigen::Index i = 0; i < v.size(); ++i)
    if (v(i) != 0) return false;
  return true;
}

/// Reduced row echelon form together with the pivot column of each nonzero row.
template <typename Scalar>
struct EchelonForm {
  Matrix<Scalar> reduced;
  std::vector<Eigen::Index> pivot_columns;

  Eigen::Index rank() const { return static_cast<Eigen::Index>(pivot_columns.size()); }
};

/// Gauss-Jordan elimination. Only the first `active_columns` columns are used
/// as pivot candidates (defaults to all), which lets callers reduce an
/// augmented matrix without pivoting on the right-hand side.
template <typename Scalar>
EchelonForm<Scalar> row_reduce(Matrix<Scalar> a, Eigen::Index active_columns = -1) {
  if (active_columns < 0) active_columns = a.cols();
  EchelonForm<Scalar> out;
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < active_columns && row < a.rows(); ++col) {
    Eigen::Index pivot = row;
    while (pivot < a.rows() && a(pivot, col) == 0) ++pivot;
    if (pivot == a.rows()) continue;
    if (pivot != row) a.row(pivot).swap(a.row(row));

    const Scalar inv = Scalar(1) / a(row, col);
    for (Eigen::Index j = col; j < a.cols(); ++j) a(row, j) *= inv;
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
      if (i == row || a(i, col) == 0) continue;
      const Scalar factor = a(i, col);
      for (Eigen::Index j = col; j < a.cols(); ++j) a(i, j) -= factor * a(row, j);
    }
    out.pivot_columns.push_back(col);
    ++row;
  }
  out.reduced = std::move(a);
  return out;
}

template <typename Derived>
Eigen::Index rank(const Eigen::MatrixBase<Derived>& a) {
  using Scalar = typename Derived::Scalar;
  return row_reduce<Scalar>(Matrix<Scalar>(a)).rank();
}

/// Basis of {x : a x = 0}, one vector per free column.
template <typename Scalar>
std::vector<Vector<Scalar>> nullspace(const Matrix<Scalar>& a) {
  const auto ech = row_reduce<Scalar>(a);
  std::vector<bool> is_pivot(static_cast<std::size_t>(a.cols()), false);
  for (auto c : ech.pivot_columns) is_pivot[static_cast<std::size_t>(c)] = true;

  std::vector<Vector<Scalar>> basis;
  for (Eigen::Index free = 0; free < a.cols(); ++free) {
    if (is_pivot[static_cast<std::size_t>(free)]) continue;
    Vector<Scalar> v = Vector<Scalar>::Constant(a.cols(), Scalar(0));
    v[free] = Scalar(1);
    for (Eigen::Index r = 0; r < ech.rank(); ++r) v[ech.pivot_columns[r]] = -ech.reduced(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

enum class SystemStatus { NoSolution, UniqueSolution, AffineFamily };

template <typename Scalar>
struct LinearSystemResult {
  SystemStatus status = SystemStatus::NoSolution;
  /// A particular solution (free variables set to zero) when consistent.
  std::optional<Vector<Scalar>> solution;
  std::vector<Vector<Scalar>> nullspace_basis;
};

/// Solves coeffs * x = rhs exactly. Inconsistency is reported through the
/// status, never thrown.
template <typename Scalar>
LinearSystemResult<Scalar> solve_linear(const Matrix<Scalar>& coeffs, const Vector<Scalar>& rhs) {
  if (coeffs.rows() != rhs.size()) throw std::invalid_argument("solve_linear: row count mismatch");
  const Eigen::Index m = coeffs.cols();

  Matrix<Scalar> augmented(coeffs.rows(), m + 1);
  augmented.leftCols(m) = coeffs;
  augmented.col(m) = rhs;
  const auto ech = row_reduce<Scalar>(std::move(augmented), m);

  LinearSystemResult<Scalar> result;
  for (Eigen::Index r = ech.rank(); r < coeffs.rows(); ++r) {
    if (ech.reduced(r, m) != 0) return result;
  }

  Vector<Scalar> x = Vector<Scalar>::Constant(m, Scalar(0));
  for (Eigen::Index r = 0; r < ech.rank(); ++r) x[ech.pivot_columns[r]] = ech.reduced(r, m);
  result.solution = std::move(x);
  result.nullspace_basis = nullspace<Scalar>(coeffs);
  result.status = result.nullspace_basis.empty() ? SystemStatus::UniqueSolution
                                                 : SystemStatus::AffineFamily;
  return result;
}

/// Solves a square nonsingular system; returns nullopt when singular.
template <typename Scalar>
std::optional<Vector<Scalar>> solve_square(const Matrix<Scalar>& a, const Vector<Scalar>& b) {
  assert(a.rows() == a.cols());
  auto res = solve_linear<Scalar>(a, b);
  if (res.status != SystemStatus::UniqueSolution) return std::nullopt;
  return std::move(res.solution);
}

/// Inverse of a square matrix, or nullopt when singular.
template <typename Scalar>
std::optional<Matrix<Scalar>> inverse(const Matrix<Scalar>& a) {
  const Eigen::Index n = a.rows();
  if (a.cols() != n) throw std::invalid_argument("inverse: matrix not square");
  Matrix<Scalar> augmented(n, 2 * n);
  augmented.leftCols(n) = a;
  augmented.rightCols(n) = Matrix<Scalar>::Identity(n, n);
  auto ech = row_reduce<Scalar>(std::move(augmented), n);
  if (ech.rank() != n) return std::nullopt;
  return Matrix<Scalar>(ech.reduced.rightCols(n));
}

}  // namespace coapprox
