#include "coapprox/subspace.hpp"

#include "coapprox/errors.hpp"
#include "coapprox/linear.hpp"

#include <string>

namespace coapprox {

namespace {

// row(i) == c * row(j) for some c != 0; returns c.
std::optional<Rational> proportionality(const MatrixQ& a, Eigen::Index i, Eigen::Index j) {
  Eigen::Index lead = 0;
  while (lead < a.cols() && a(j, lead) == 0) ++lead;
  if (lead == a.cols()) return std::nullopt;
  Rational c = a(i, lead) / a(j, lead);
  if (c == 0) return std::nullopt;
  for (Eigen::Index k = 0; k < a.cols(); ++k)
    if (a(i, k) != c * a(j, k)) return std::nullopt;
  return c;
}

}  // namespace

SubspaceBasis::SubspaceBasis(MatrixQ columns) : matrix_(std::move(columns)) {
  if (matrix_.rows() < 1 || matrix_.cols() < 1)
    throw DimensionError("basis must have n >= 1 coordinates and m >= 1 vectors");
  if (matrix_.cols() > matrix_.rows())
    throw DimensionError("basis has m = " + std::to_string(matrix_.cols()) +
                         " vectors in dimension n = " + std::to_string(matrix_.rows()));
  const auto r = rank(matrix_);
  if (r != matrix_.cols())
    throw RankDeficientError("basis vectors are linearly dependent (rank " + std::to_string(r) +
                             " < m = " + std::to_string(matrix_.cols()) + ")");
}

SubspaceBasis validate_basis(MatrixQ matrix) { return SubspaceBasis(std::move(matrix)); }

const Rational& ComponentProfile::constant_of(std::size_t i) const {
  const int c = class_of.at(i);
  if (c < 0) throw std::out_of_range("coordinate belongs to the zero set");
  const auto& cls = classes[static_cast<std::size_t>(c)];
  for (std::size_t k = 0; k < cls.members.size(); ++k)
    if (cls.members[k] == i) return cls.constants[k];
  throw InternalInconsistency("coordinate missing from its component class");
}

ComponentProfile build_profile(const SubspaceBasis& basis) {
  const MatrixQ& a = basis.matrix();
  ComponentProfile profile;
  profile.class_of.assign(static_cast<std::size_t>(a.rows()), -1);

  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    if (is_zero(a.row(i))) {
      profile.zero_set.push_back(static_cast<std::size_t>(i));
      continue;
    }
    bool placed = false;
    for (std::size_t c = 0; c < profile.classes.size() && !placed; ++c) {
      auto& cls = profile.classes[c];
      if (auto k = proportionality(a, i, static_cast<Eigen::Index>(cls.representative))) {
        cls.members.push_back(static_cast<std::size_t>(i));
        cls.constants.push_back(std::move(*k));
        profile.class_of[static_cast<std::size_t>(i)] = static_cast<int>(c);
        placed = true;
      }
    }
    if (!placed) {
      profile.class_of[static_cast<std::size_t>(i)] = static_cast<int>(profile.classes.size());
      profile.classes.push_back({static_cast<std::size_t>(i), {static_cast<std::size_t>(i)}, {Rational(1)}});
    }
  }
  return profile;
}

VectorQ ReducedInstance::sigma(const VectorQ& v) const {
  if (v.size() != original_dim) throw std::invalid_argument("sigma: vector length mismatch");
  VectorQ out(static_cast<Eigen::Index>(kept_indices.size()));
  for (std::size_t k = 0; k < kept_indices.size(); ++k)
    out[static_cast<Eigen::Index>(k)] = v[static_cast<Eigen::Index>(kept_indices[k])];
  return out;
}

VectorQ ReducedInstance::embed(const VectorQ& reduced) const {
  if (reduced.size() != static_cast<Eigen::Index>(kept_indices.size()))
    throw std::invalid_argument("embed: vector length mismatch");
  VectorQ out = VectorQ::Constant(original_dim, Rational(0));
  for (std::size_t k = 0; k < kept_indices.size(); ++k)
    out[static_cast<Eigen::Index>(kept_indices[k])] = reduced[static_cast<Eigen::Index>(k)];
  return out;
}

ReducedInstance reduce_sigma(const SubspaceBasis& basis, const ComponentProfile& profile) {
  const MatrixQ& a = basis.matrix();
  if (profile.zero_set.size() == static_cast<std::size_t>(a.rows()))
    throw ZeroSubspaceError("every coordinate lies in the zero set");

  std::vector<std::size_t> kept;
  for (std::size_t i = 0; i < static_cast<std::size_t>(a.rows()); ++i)
    if (profile.class_of.at(i) >= 0) kept.push_back(i);

  MatrixQ reduced(static_cast<Eigen::Index>(kept.size()), a.cols());
  for (std::size_t k = 0; k < kept.size(); ++k)
    reduced.row(static_cast<Eigen::Index>(k)) = a.row(static_cast<Eigen::Index>(kept[k]));

  return ReducedInstance{std::move(kept), SubspaceBasis(std::move(reduced)), profile.zero_set, a.rows()};
}

VectorQ apply_rho(const VectorQ& v, const ComponentProfile& profile) {
  if (static_cast<std::size_t>(v.size()) != profile.class_of.size())
    throw std::invalid_argument("rho: vector length mismatch");
  VectorQ out = v;
  for (auto i : profile.zero_set) out[static_cast<Eigen::Index>(i)] = 0;
  return out;
}

VectorQ apply_sigma(const VectorQ& v, const ComponentProfile& profile) {
  if (static_cast<std::size_t>(v.size()) != profile.class_of.size())
    throw std::invalid_argument("sigma: vector length mismatch");
  VectorQ out(v.size() - static_cast<Eigen::Index>(profile.zero_set.size()));
  Eigen::Index k = 0;
  for (std::size_t i = 0; i < profile.class_of.size(); ++i)
    if (profile.class_of[i] >= 0) out[k++] = v[static_cast<Eigen::Index>(i)];
  return out;
}

}  // namespace coapprox
