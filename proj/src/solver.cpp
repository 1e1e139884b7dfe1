#include "coapprox/solver.hpp"

#include "coapprox/errors.hpp"
#include "coapprox/linear.hpp"
#include "coapprox/optimize.hpp"

namespace coapprox {

namespace {

struct AssembledSystem {
  MatrixQ rows;
  VectorQ rhs;
};

// Row p is (x_p . a_1, ..., x_p . a_m), right-hand side x_p . b.
AssembledSystem assemble(const MatrixQ& signs, const MatrixQ& a, const VectorQ& b) {
  return {signs * a, signs * b};
}

CoapproxOutcome member_outcome(const SubspaceBasis& basis, const VectorQ& b) {
  auto res = solve_linear<Rational>(basis.matrix(), b);
  if (res.status == SystemStatus::NoSolution) return {};
  if (res.status != SystemStatus::UniqueSolution)
    throw InternalInconsistency("independent basis produced a non-unique representation");
  CoapproxOutcome out;
  out.kind = OutcomeKind::Unique;
  out.coefficients = std::move(res.solution);
  out.vector = b;
  out.rationale = {"target-in-subspace"};
  return out;
}

Rational zero_set_mass(const VectorQ& b, const std::vector<std::size_t>& zero_set) {
  Rational mass(0);
  for (auto i : zero_set) mass += abs_value(b[static_cast<Eigen::Index>(i)]);
  return mass;
}

// Does the polytope |rows alpha - rhs| <= slack reduce to the single point
// `inside`? Checked by maximizing and minimizing every coordinate.
bool is_single_point(const MatrixQ& rows, const VectorQ& rhs, const Rational& slack, const VectorQ& inside) {
  const Eigen::Index q = rows.rows();
  const Eigen::Index m = rows.cols();
  MatrixQ a(2 * q, m);
  VectorQ bounds(2 * q);
  a.topRows(q) = rows;
  a.bottomRows(q) = -rows;
  bounds.head(q) = rhs + VectorQ::Constant(q, slack);
  bounds.tail(q) = VectorQ::Constant(q, slack) - rhs;
  for (Eigen::Index j = 0; j < m; ++j) {
    for (int dir : {1, -1}) {
      VectorQ objective = VectorQ::Constant(m, Rational(0));
      objective[j] = dir;
      const auto lp = maximize_lp<Rational>(objective, a, bounds, inside);
      if (lp.status != LpStatus::Optimal) return false;
      if (lp.x[j] != inside[j]) return false;
    }
  }
  return true;
}

}  // namespace

const char* to_string(OutcomeKind kind) {
  switch (kind) {
    case OutcomeKind::NotExists: return "NotExists";
    case OutcomeKind::Unique: return "Unique";
    case OutcomeKind::Polytope: return "Polytope";
  }
  return "?";
}

const CoefficientVector* CoapproxOutcome::chosen() const {
  if (coefficients) return &*coefficients;
  if (witness) return &*witness;
  return nullptr;
}

std::vector<SlackConstraint> CoapproxOutcome::constraints() const {
  std::vector<SlackConstraint> out;
  for (Eigen::Index p = 0; p < system_rows.rows(); ++p)
    out.push_back({system_rows.row(p).transpose(), system_rhs[p], slack});
  return out;
}

bool CoapproxOutcome::contains(const CoefficientVector& alpha) const {
  switch (kind) {
    case OutcomeKind::NotExists: return false;
    case OutcomeKind::Unique: return coefficients && *coefficients == alpha;
    case OutcomeKind::Polytope: {
      if (alpha.size() != system_rows.cols()) return false;
      const VectorQ residual = system_rhs - system_rows * alpha;
      return linf_norm(residual) <= slack;
    }
  }
  return false;
}

bool CoapproxOutcome::operator==(const CoapproxOutcome& other) const {
  return kind == other.kind && coefficients == other.coefficients && witness == other.witness &&
         vector == other.vector;
}

CoapproxOutcome solve_empty_zero_set(const SubspaceBasis& basis, const NormingSet& norming, const VectorQ& b) {
  const MatrixQ& a = basis.matrix();
  if (b.size() != a.rows()) throw DimensionError("target length does not match the ambient dimension");
  // The equalities for the remaining representatives are linear combinations
  // of those for a basis of span N, so the basis rows give an equivalent system.
  const MatrixQ signs = norming.basis_matrix();
  if (signs.cols() != a.rows()) throw PreconditionError("norming set does not live in the ambient space");

  auto system = assemble(signs, a, b);
  auto res = solve_linear<Rational>(system.rows, system.rhs);

  CoapproxOutcome out;
  out.system_rows = std::move(system.rows);
  out.system_rhs = std::move(system.rhs);
  out.rationale = {"characterization-linear-system"};
  switch (res.status) {
    case SystemStatus::NoSolution:
      out.kind = OutcomeKind::NotExists;
      break;
    case SystemStatus::UniqueSolution:
      out.kind = OutcomeKind::Unique;
      out.vector = VectorQ(a * *res.solution);
      out.coefficients = std::move(res.solution);
      out.rationale.emplace_back("uniqueness-empty-zero-set");
      break;
    case SystemStatus::AffineFamily:
      throw InternalInconsistency("characterization system is underdetermined for an empty zero set");
  }
  return out;
}

CoapproxOutcome solve_general(const SubspaceBasis& basis, const NormingAnalysis& analysis, const VectorQ& b) {
  const MatrixQ& a = basis.matrix();
  if (b.size() != a.rows()) throw DimensionError("target length does not match the ambient dimension");

  if (auto member = member_outcome(basis, b); member.kind == OutcomeKind::Unique) return member;
  if (analysis.profile.zero_set_empty()) return solve_empty_zero_set(basis, analysis.norming, b);

  const ReducedInstance& reduced = analysis.reduced;
  auto system = assemble(analysis.norming.as_matrix(), reduced.reduced_basis.matrix(), reduced.sigma(b));

  CoapproxOutcome out;
  out.slack = zero_set_mass(b, reduced.zero_set);
  out.rationale = {"sigma-reduction", "zero-set-slack-criterion"};

  const auto minimax = solve_minimax_lp<Rational>(system.rows, system.rhs);
  out.min_residual = minimax.t_star;
  out.system_rows = std::move(system.rows);
  out.system_rhs = std::move(system.rhs);

  if (minimax.t_star > out.slack) {
    out.kind = OutcomeKind::NotExists;
    return out;
  }
  if (out.slack == 0 ||
      (minimax.t_star == out.slack && is_single_point(out.system_rows, out.system_rhs, out.slack, minimax.alpha))) {
    out.kind = OutcomeKind::Unique;
    out.coefficients = minimax.alpha;
    out.vector = VectorQ(a * minimax.alpha);
    return out;
  }
  out.kind = OutcomeKind::Polytope;
  out.witness = minimax.alpha;
  out.vector = VectorQ(a * minimax.alpha);
  return out;
}

CoapproxOutcome solve_general(const SubspaceBasis& basis, const ComponentProfile& profile, const VectorQ& b) {
  if (auto member = member_outcome(basis, b); member.kind == OutcomeKind::Unique) return member;
  auto reduced = reduce_sigma(basis, profile);
  auto arrangement = build_arrangement(reduced, profile);
  auto cells = enumerate_cells(arrangement);
  auto norming = minimal_norming_set(arrangement, cells, reduced);
  const NormingAnalysis analysis{profile, std::move(reduced), std::move(arrangement), std::move(cells),
                                 std::move(norming)};
  return solve_general(basis, analysis, b);
}

ExistenceThreshold existence_threshold(const SubspaceBasis& basis, const NormingAnalysis& analysis,
                                       const VectorQ& b) {
  if (b.size() != basis.ambient_dim()) throw DimensionError("target length does not match the ambient dimension");
  if (analysis.profile.zero_set_empty())
    throw EmptyZeroSetError("existence threshold is defined only for subspaces with a non-empty zero set");

  const ReducedInstance& reduced = analysis.reduced;
  const auto system = assemble(analysis.norming.as_matrix(), reduced.reduced_basis.matrix(), reduced.sigma(b));
  auto minimax = solve_minimax_lp<Rational>(system.rows, system.rhs);

  ExistenceThreshold out;
  out.delta0 = minimax.t_star;
  out.minimizing_alpha = std::move(minimax.alpha);
  out.rho_norm = l1_norm(apply_rho(b, analysis.profile));
  if (out.delta0 > out.rho_norm) throw InternalInconsistency("existence threshold exceeds ||rho(b)||_1");
  return out;
}

ExistenceThreshold existence_threshold(const SubspaceBasis& basis, const ComponentProfile& profile,
                                       const VectorQ& b) {
  if (profile.zero_set_empty())
    throw EmptyZeroSetError("existence threshold is defined only for subspaces with a non-empty zero set");
  return existence_threshold(basis, analyze_norming(basis), b);
}

NormOneProjection::NormOneProjection(SubspaceBasis basis, VectorQ target, CoefficientVector alpha)
    : basis_(std::move(basis)), target_(std::move(target)), alpha_(std::move(alpha)) {
  if (alpha_.size() != basis_.dim()) throw DimensionError("coefficient vector length does not match m");
  if (target_.size() != basis_.ambient_dim()) throw DimensionError("target length does not match n");
  image_ = basis_.combine(alpha_);
}

VectorQ NormOneProjection::evaluate(const VectorQ& beta, const Rational& gamma) const {
  return basis_.combine(beta) + gamma * image_;
}

std::optional<VectorQ> NormOneProjection::apply(const VectorQ& v) const {
  const Eigen::Index m = basis_.dim();
  MatrixQ span(basis_.ambient_dim(), m + 1);
  span.leftCols(m) = basis_.matrix();
  span.col(m) = target_;
  auto res = solve_linear<Rational>(span, v);
  if (res.status == SystemStatus::NoSolution) return std::nullopt;
  return evaluate(res.solution->head(m), (*res.solution)[m]);
}

NormOneProjection projection_map(const SubspaceBasis& basis, const VectorQ& b, const CoapproxOutcome& outcome) {
  const CoefficientVector* alpha = outcome.chosen();
  if (outcome.kind == OutcomeKind::NotExists || alpha == nullptr)
    throw NoCoapproximationError("no best coapproximation exists, so no norm-one projection does either");
  return NormOneProjection(basis, b, *alpha);
}

}  // namespace coapprox
