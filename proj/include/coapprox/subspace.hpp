#pragma once

#include "coapprox/rational.hpp"

#include <cstddef>
#include <vector>

namespace coapprox {

/// A checked basis of a subspace Y of l1^n: the n x m matrix whose k-th
/// column is the k-th basis vector. Columns are linearly independent.
class SubspaceBasis {
 public:
  /// Validates and wraps the matrix. Throws DimensionError or RankDeficientError.
  explicit SubspaceBasis(MatrixQ columns);

  Eigen::Index ambient_dim() const { return matrix_.rows(); }
  Eigen::Index dim() const { return matrix_.cols(); }
  const MatrixQ& matrix() const { return matrix_; }

  /// The element sum_k coeffs_k a_k of Y.
  VectorQ combine(const VectorQ& coeffs) const { return matrix_ * coeffs; }

 private:
  MatrixQ matrix_;
};

SubspaceBasis validate_basis(MatrixQ matrix);

/// Rows of the basis matrix that are nonzero multiples of each other.
struct ComponentClass {
  std::size_t representative = 0;       // smallest member index
  std::vector<std::size_t> members;     // ascending, includes representative
  std::vector<Rational> constants;      // row_member = constant * row_representative
};

struct ComponentProfile {
  std::vector<ComponentClass> classes;  // ordered by representative
  std::vector<std::size_t> zero_set;    // ascending, 0-based
  /// For every coordinate: index into `classes`, or -1 for zero-set members.
  std::vector<int> class_of;

  std::size_t d() const { return classes.size(); }
  bool zero_set_empty() const { return zero_set.empty(); }
  /// Proportionality constant of coordinate i relative to its representative.
  const Rational& constant_of(std::size_t i) const;
};

ComponentProfile build_profile(const SubspaceBasis& basis);

/// The basis restricted to the coordinates outside the zero set.
struct ReducedInstance {
  std::vector<std::size_t> kept_indices;
  SubspaceBasis reduced_basis;
  std::vector<std::size_t> zero_set;
  Eigen::Index original_dim = 0;

  /// Drops the zero-set coordinates of an ambient vector.
  VectorQ sigma(const VectorQ& v) const;
  /// Re-inserts zeros at the zero-set coordinates.
  VectorQ embed(const VectorQ& reduced) const;
};

ReducedInstance reduce_sigma(const SubspaceBasis& basis, const ComponentProfile& profile);

/// Zeroes exactly the zero-set coordinates.
VectorQ apply_rho(const VectorQ& v, const ComponentProfile& profile);

/// Drops the zero-set coordinates, keeping the order of the rest.
VectorQ apply_sigma(const VectorQ& v, const ComponentProfile& profile);

}  // namespace coapprox
