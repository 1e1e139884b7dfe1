#include "coapprox/oracle.hpp"

#include "coapprox/errors.hpp"
#include "coapprox/linear.hpp"
#include "coapprox/optimize.hpp"

#include <cmath>
#include <limits>
#include <map>
#include <random>

namespace coapprox {

namespace {

constexpr int kSweepRadius = 2;

std::vector<VectorQ> small_integer_directions(Eigen::Index m) {
  std::vector<VectorQ> out;
  std::vector<int> digits(static_cast<std::size_t>(m), -kSweepRadius);
  for (;;) {
    bool nonzero = false;
    VectorQ beta(m);
    for (Eigen::Index k = 0; k < m; ++k) {
      beta[k] = digits[static_cast<std::size_t>(k)];
      nonzero = nonzero || digits[static_cast<std::size_t>(k)] != 0;
    }
    if (nonzero) out.push_back(std::move(beta));

    std::size_t k = 0;
    while (k < digits.size() && digits[k] == kSweepRadius) digits[k++] = -kSweepRadius;
    if (k == digits.size()) break;
    ++digits[k];
  }
  return out;
}

// Integer points visited by the pattern sweep, across the whole box.
constexpr double kPatternBudget = 600000;

// One integer direction per distinct sign pattern of A beta over a box in
// coefficient space. Thin cones of the row arrangement only contain integer
// points with large coordinates, so the box is as wide as the point budget
// allows. Rows are scaled to integers; signs are unchanged by that.
std::vector<VectorQ> pattern_directions(const SubspaceBasis& basis) {
  const MatrixQ& a = basis.matrix();
  const Eigen::Index n = a.rows();
  const Eigen::Index m = a.cols();
  const long radius =
      std::max(1L, static_cast<long>((std::pow(kPatternBudget, 1.0 / static_cast<double>(m)) - 1) / 2));

  std::vector<std::vector<long long>> rows;
  const Integer limit(std::numeric_limits<long long>::max() / (4 * radius * m));
  for (Eigen::Index i = 0; i < n; ++i) {
    Integer lcm_den(1);
    for (Eigen::Index k = 0; k < m; ++k)
      lcm_den = boost::multiprecision::lcm(lcm_den, Integer(boost::multiprecision::denominator(a(i, k))));
    std::vector<long long> row;
    for (Eigen::Index k = 0; k < m; ++k) {
      const Integer v(boost::multiprecision::numerator(a(i, k) * Rational(lcm_den)));
      if (boost::multiprecision::abs(v) > limit) return {};  // too large for the fast sweep
      row.push_back(v.convert_to<long long>());
    }
    rows.push_back(std::move(row));
  }

  std::map<std::vector<signed char>, std::vector<long>> seen;
  std::vector<long> beta(static_cast<std::size_t>(m), -radius);
  std::vector<signed char> pattern(static_cast<std::size_t>(n));
  for (;;) {
    for (std::size_t i = 0; i < rows.size(); ++i) {
      __int128 dot = 0;
      for (std::size_t k = 0; k < beta.size(); ++k) dot += static_cast<__int128>(rows[i][k]) * beta[k];
      pattern[i] = static_cast<signed char>(dot > 0 ? 1 : (dot < 0 ? -1 : 0));
    }
    seen.emplace(pattern, beta);

    std::size_t k = 0;
    while (k < beta.size() && beta[k] == radius) beta[k++] = -radius;
    if (k == beta.size()) break;
    ++beta[k];
  }

  std::vector<VectorQ> out;
  for (const auto& [signs, point] : seen) {
    VectorQ v(m);
    for (Eigen::Index k = 0; k < m; ++k) v[k] = point[static_cast<std::size_t>(k)];
    if (!is_zero(v)) out.push_back(std::move(v));
  }
  return out;
}

// Small-integer directions followed by the pattern sweep.
std::vector<VectorQ> deterministic_directions(const SubspaceBasis& basis) {
  auto out = small_integer_directions(basis.dim());
  auto more = pattern_directions(basis);
  out.insert(out.end(), std::make_move_iterator(more.begin()), std::make_move_iterator(more.end()));
  return out;
}

VectorQ random_direction(Eigen::Index m, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-20, 20);
  std::uniform_int_distribution<long> den(1, 10);
  VectorQ beta(m);
  for (Eigen::Index k = 0; k < m; ++k) beta[k] = Rational(num(rng), den(rng));
  return beta;
}

// Turns a direction beta with A beta not orthogonal to r = b - A alpha into a
// violation of the defining inequality.
Counterexample to_counterexample(const SubspaceBasis& basis, const VectorQ& b, const VectorQ& alpha,
                                 const VectorQ& beta, const VectorQ& residual) {
  const VectorQ y = basis.combine(beta);
  const auto best = minimize_1d_l1<Rational>(y, residual);
  const Rational lambda = best.minimizers.point();
  if (lambda == 0) throw InternalInconsistency("non-orthogonal pair minimized at lambda = 0");

  Counterexample ce;
  ce.beta = alpha - beta / lambda;
  const VectorQ image = basis.combine(ce.beta);
  ce.lhs = l1_norm(VectorQ(image - basis.combine(alpha)));
  ce.rhs = l1_norm(VectorQ(image - b));
  if (!(ce.lhs > ce.rhs)) throw InternalInconsistency("counterexample does not violate the inequality");
  return ce;
}

}  // namespace

bool bj_orthogonal_l1(const VectorQ& y, const VectorQ& z) {
  if (y.size() != z.size()) throw std::invalid_argument("bj_orthogonal_l1: length mismatch");
  Rational signed_sum(0);
  Rational free_mass(0);
  for (Eigen::Index i = 0; i < y.size(); ++i) {
    const int s = sign(y[i]);
    if (s > 0) {
      signed_sum += z[i];
    } else if (s < 0) {
      signed_sum -= z[i];
    } else {
      free_mass += abs_value(z[i]);
    }
  }
  return abs_value(signed_sum) <= free_mass;
}

VerificationVerdict verify_best_coapprox(const SubspaceBasis& basis, const VectorQ& b, const VectorQ& alpha,
                                         std::size_t trials, std::uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("verify_best_coapprox: trials must be >= 1");
  if (alpha.size() != basis.dim() || b.size() != basis.ambient_dim())
    throw DimensionError("verify_best_coapprox: dimension mismatch");

  VerificationVerdict out;
  out.seed = seed;
  const VectorQ residual = b - basis.combine(alpha);

  auto check = [&](const VectorQ& beta) {
    ++out.directions_checked;
    if (bj_orthogonal_l1(basis.combine(beta), residual)) return true;
    out.verdict = Verdict::Refuted;
    out.counterexample = to_counterexample(basis, b, alpha, beta, residual);
    return false;
  };

  for (const auto& beta : deterministic_directions(basis))
    if (!check(beta)) return out;

  std::mt19937_64 rng(seed);
  for (std::size_t t = 0; t < trials; ++t)
    if (!check(random_direction(basis.dim(), rng))) return out;
  return out;
}

BruteForceResult brute_force_existence(const SubspaceBasis& basis, const VectorQ& b, const Rational& grid_radius,
                                       const Rational& grid_step) {
  const Eigen::Index m = basis.dim();
  if (m > kMaxBruteForceDim)
    throw CapacityExceeded("brute-force scan supports m <= 3, got m = " + std::to_string(m));
  if (grid_step <= 0) throw std::invalid_argument("grid step must be positive");
  if (grid_radius < 0) throw std::invalid_argument("grid radius must be non-negative");
  if (b.size() != basis.ambient_dim()) throw DimensionError("target length does not match n");

  std::vector<VectorQ> images;
  for (const auto& beta : deterministic_directions(basis)) images.push_back(basis.combine(beta));

  std::vector<Rational> axis;
  for (Rational x = -grid_radius; x <= grid_radius; x += grid_step) axis.push_back(x);

  BruteForceResult out;
  std::vector<std::size_t> idx(static_cast<std::size_t>(m), 0);
  for (;;) {
    VectorQ alpha(m);
    for (Eigen::Index k = 0; k < m; ++k) alpha[k] = axis[idx[static_cast<std::size_t>(k)]];
    ++out.candidates_scanned;

    const VectorQ residual = b - basis.combine(alpha);
    bool passes = true;
    for (const auto& y : images) {
      if (!bj_orthogonal_l1(y, residual)) {
        passes = false;
        break;
      }
    }
    if (passes) out.passing.push_back(std::move(alpha));

    std::size_t k = 0;
    while (k < idx.size() && idx[k] + 1 == axis.size()) idx[k++] = 0;
    if (k == idx.size()) break;
    ++idx[k];
  }
  out.exists = !out.passing.empty();
  return out;
}

}  // namespace coapprox
