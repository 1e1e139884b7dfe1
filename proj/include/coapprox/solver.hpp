#pragma once

#include "coapprox/norming_set.hpp"
#include "coapprox/subspace.hpp"

#include <optional>
#include <string>
#include <vector>

namespace coapprox {

using CoefficientVector = VectorQ;

enum class OutcomeKind { NotExists, Unique, Polytope };

const char* to_string(OutcomeKind kind);

/// |row . alpha - rhs| <= slack
struct SlackConstraint {
  VectorQ row;
  Rational rhs;
  Rational slack;
};

/// Result of a best-coapproximation query for one target b.
///
/// Over the reduced coordinates, alpha is a best coapproximation exactly when
/// |x_p . (sigma(b) - sigma(A) alpha)| <= sum_{i in Z} |b_i| for every
/// norming-set representative x_p. With an empty zero set the slack is zero
/// and the inequalities are the linear system of the characterization.
struct CoapproxOutcome {
  OutcomeKind kind = OutcomeKind::NotExists;
  std::optional<CoefficientVector> coefficients;  // Unique
  std::optional<CoefficientVector> witness;       // Polytope
  std::optional<VectorQ> vector;                  // A * alpha for the chosen alpha

  /// The assembled system (rows x_p . sigma(A), rhs x_p . sigma(b)); empty
  /// when the target was recognised as a member of Y.
  MatrixQ system_rows;
  VectorQ system_rhs;
  Rational slack{0};
  /// Smallest achievable max_p |residual_p|; present when it was computed.
  std::optional<Rational> min_residual;

  std::vector<std::string> rationale;

  /// The chosen coefficient vector: the unique solution or the witness.
  const CoefficientVector* chosen() const;
  std::vector<SlackConstraint> constraints() const;
  /// True when alpha belongs to the solution set described by this outcome.
  bool contains(const CoefficientVector& alpha) const;

  bool operator==(const CoapproxOutcome& other) const;
};

/// Characterization for bases with an empty zero set: solves the q x m
/// system exactly. Throws InternalInconsistency on an underdetermined system.
CoapproxOutcome solve_empty_zero_set(const SubspaceBasis& basis, const NormingSet& norming, const VectorQ& b);

CoapproxOutcome solve_general(const SubspaceBasis& basis, const NormingAnalysis& analysis, const VectorQ& b);
CoapproxOutcome solve_general(const SubspaceBasis& basis, const ComponentProfile& profile, const VectorQ& b);

struct ExistenceThreshold {
  Rational delta0{0};
  CoefficientVector minimizing_alpha;
  /// ||rho(b)||_1, an upper bound for delta0.
  Rational rho_norm{0};
};

/// Smallest zero-set mass at which a target of the family
/// { y : y_i = b_i for i outside Z } has a best coapproximation.
/// Throws EmptyZeroSetError when Z is empty.
ExistenceThreshold existence_threshold(const SubspaceBasis& basis, const NormingAnalysis& analysis,
                                       const VectorQ& b);
ExistenceThreshold existence_threshold(const SubspaceBasis& basis, const ComponentProfile& profile,
                                       const VectorQ& b);

/// Norm-one projection from span{b, Y} onto Y sending b to A alpha.
class NormOneProjection {
 public:
  NormOneProjection(SubspaceBasis basis, VectorQ target, CoefficientVector alpha);

  const VectorQ& image_of_target() const { return image_; }
  const CoefficientVector& coefficients() const { return alpha_; }

  /// P(A beta + gamma b) = A beta + gamma A alpha.
  VectorQ evaluate(const VectorQ& beta, const Rational& gamma) const;
  /// P(v) for v in span{b, Y}; nullopt when v lies outside that span.
  std::optional<VectorQ> apply(const VectorQ& v) const;

 private:
  SubspaceBasis basis_;
  VectorQ target_;
  CoefficientVector alpha_;
  VectorQ image_;
};

/// Throws NoCoapproximationError for NotExists outcomes.
NormOneProjection projection_map(const SubspaceBasis& basis, const VectorQ& b, const CoapproxOutcome& outcome);

}  // namespace coapprox
