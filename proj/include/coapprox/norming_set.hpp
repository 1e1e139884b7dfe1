#pragma once

#include "coapprox/subspace.hpp"

#include <cstddef>
#include <vector>

namespace coapprox {

/// Central hyperplane arrangement in coefficient space R^m: one hyperplane
/// {beta : normal . beta = 0} per component class of the reduced basis.
struct Arrangement {
  /// Primitive integer normals, each a positive multiple of its class
  /// representative row.
  std::vector<VectorQ> normals;
  /// Per reduced coordinate: the hyperplane of its class and the sign of its
  /// proportionality constant.
  std::vector<std::size_t> hyperplane_of;
  std::vector<int> orientation;

  std::size_t r() const { return normals.size(); }
  Eigen::Index m() const { return normals.empty() ? 0 : normals.front().size(); }
};

/// An open cell: strict signs on every hyperplane plus an interior point.
struct SignCell {
  std::vector<int> signs;
  VectorQ witness;
};

/// Minimal norming set, stored as one representative per +/- pair.
struct NormingSet {
  /// Sign vectors over the reduced coordinates; first entry is +1.
  std::vector<std::vector<int>> representatives;
  /// Index of the SignCell each representative came from.
  std::vector<std::size_t> cell_index;
  /// q = dim span of the representatives.
  Eigen::Index span_dim = 0;
  /// Indices of q representatives forming a basis of the span. Cells are
  /// scanned by number of sign changes along the hyperplane order, then
  /// lexicographically, and kept whenever they raise the rank.
  std::vector<std::size_t> basis_indices;

  std::size_t size() const { return representatives.size(); }
  /// Representatives as the rows of a (size x k) matrix.
  MatrixQ as_matrix() const;
  /// The span basis as the rows of a (q x k) matrix.
  MatrixQ basis_matrix() const;
};

inline constexpr std::size_t kMaxHyperplanes = 20;

Arrangement build_arrangement(const ReducedInstance& reduced, const ComponentProfile& profile);

/// Exactly one cell per antipodal pair of nonempty open cells, with +1 on
/// hyperplane 0, in lexicographic order (+ before -). Throws
/// CapacityExceeded when r > 20.
std::vector<SignCell> enumerate_cells(const Arrangement& arr);

NormingSet minimal_norming_set(const Arrangement& arr, const std::vector<SignCell>& cells,
                               const ReducedInstance& reduced);

/// Lifts a reduced sign vector to l_inf^n, with 0 on the zero set.
VectorQ ambient_sign_vector(const std::vector<int>& reduced_signs, const ReducedInstance& reduced);

/// Profile, reduction, arrangement, cells and norming set of a basis.
struct NormingAnalysis {
  ComponentProfile profile;
  ReducedInstance reduced;
  Arrangement arrangement;
  std::vector<SignCell> cells;
  NormingSet norming;
};

NormingAnalysis analyze_norming(const SubspaceBasis& basis);

}  // namespace coapprox
