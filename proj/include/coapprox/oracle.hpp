#pragma once

// Independent verification of best-coapproximation claims. Nothing here uses
// the norming-set construction: claims are checked against the definition
// ||A beta - A alpha|| <= ||A beta - b|| through the l1 Birkhoff-James test.

#include "coapprox/subspace.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace coapprox {

/// y is Birkhoff-James orthogonal to z in l1:
/// |sum_{y_i != 0} sgn(y_i) z_i| <= sum_{y_i = 0} |z_i|.
bool bj_orthogonal_l1(const VectorQ& y, const VectorQ& z);

enum class Verdict { Confirmed, Refuted };

struct Counterexample {
  /// beta with ||A beta - A alpha||_1 > ||A beta - b||_1.
  VectorQ beta;
  Rational lhs;  // ||A beta - A alpha||_1
  Rational rhs;  // ||A beta - b||_1
};

struct VerificationVerdict {
  Verdict verdict = Verdict::Confirmed;
  std::optional<Counterexample> counterexample;
  std::uint64_t seed = 0;
  std::size_t directions_checked = 0;
};

inline constexpr std::uint64_t kDefaultSeed = 20240611;

/// Sweeps every beta in {-2,...,2}^m, then one integer beta per sign pattern
/// of A beta found on a wide box, then `trials` random rational beta.
VerificationVerdict verify_best_coapprox(const SubspaceBasis& basis, const VectorQ& b, const VectorQ& alpha,
                                         std::size_t trials, std::uint64_t seed = kDefaultSeed);

struct BruteForceResult {
  bool exists = false;
  std::vector<VectorQ> passing;
  std::size_t candidates_scanned = 0;
};

inline constexpr Eigen::Index kMaxBruteForceDim = 3;

/// Scans alpha over the grid {-radius, -radius + step, ...}^m and keeps the
/// candidates that survive both deterministic sweeps. m <= 3.
BruteForceResult brute_force_existence(const SubspaceBasis& basis, const VectorQ& b, const Rational& grid_radius,
                                       const Rational& grid_step);

}  // namespace coapprox
