#pragma once

// Small exact optimization kernels: a dense simplex method with Bland's rule,
// the one-dimensional l1 minimizer and the min-max (Chebyshev) residual
// problem built on top of the simplex.

#include "coapprox/errors.hpp"
#include "coapprox/linear.hpp"

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

namespace coapprox {

enum class LpStatus { Optimal, Unbounded };

template <typename Scalar>
struct LpResult {
  LpStatus status = LpStatus::Optimal;
  Vector<Scalar> x;
  Scalar value{0};
};

/// maximize objective . x  subject to  constraints * x <= bounds, x free.
///
/// `feasible` must satisfy every constraint; the problem is shifted so the
/// simplex starts from it and no phase-one is needed. Bland's rule is used
/// for both the entering and leaving choice, so degenerate pivots terminate.
template <typename Scalar>
LpResult<Scalar> maximize_lp(const Vector<Scalar>& objective, const Matrix<Scalar>& constraints,
                             const Vector<Scalar>& bounds, const Vector<Scalar>& feasible) {
  const Eigen::Index rows = constraints.rows();
  const Eigen::Index n = constraints.cols();
  if (objective.size() != n || bounds.size() != rows || feasible.size() != n)
    throw std::invalid_argument("maximize_lp: dimension mismatch");

  const Vector<Scalar> slack = bounds - constraints * feasible;
  for (Eigen::Index i = 0; i < rows; ++i)
    if (slack[i] < 0) throw std::invalid_argument("maximize_lp: starting point is infeasible");

  // Columns: y+ (n), y- (n), slacks (rows), then the right-hand side.
  const Eigen::Index vars = 2 * n + rows;
  Matrix<Scalar> tab = Matrix<Scalar>::Constant(rows, vars + 1, Scalar(0));
  tab.leftCols(n) = constraints;
  tab.middleCols(n, n) = -constraints;
  tab.middleCols(2 * n, rows) = Matrix<Scalar>::Identity(rows, rows);
  tab.col(vars) = slack;

  Vector<Scalar> cost = Vector<Scalar>::Constant(vars, Scalar(0));
  cost.head(n) = objective;
  cost.segment(n, n) = -objective;

  std::vector<Eigen::Index> basis(static_cast<std::size_t>(rows));
  for (Eigen::Index i = 0; i < rows; ++i) basis[static_cast<std::size_t>(i)] = 2 * n + i;

  // Reduced costs for the slack basis are just the costs themselves.
  Vector<Scalar> reduced = cost;

  LpResult<Scalar> result;
  for (;;) {
    Eigen::Index entering = -1;
    for (Eigen::Index j = 0; j < vars; ++j) {
      if (reduced[j] > 0) {
        entering = j;
        break;
      }
    }
    if (entering < 0) break;

    Eigen::Index leaving = -1;
    Scalar best_ratio(0);
    for (Eigen::Index i = 0; i < rows; ++i) {
      if (tab(i, entering) <= 0) continue;
      Scalar ratio = tab(i, vars) / tab(i, entering);
      if (leaving < 0 || ratio < best_ratio ||
          (ratio == best_ratio && basis[static_cast<std::size_t>(i)] < basis[static_cast<std::size_t>(leaving)])) {
        leaving = i;
        best_ratio = std::move(ratio);
      }
    }
    if (leaving < 0) {
      result.status = LpStatus::Unbounded;
      return result;
    }

    const Scalar inv = Scalar(1) / tab(leaving, entering);
    tab.row(leaving) *= inv;
    for (Eigen::Index i = 0; i < rows; ++i) {
      if (i == leaving || tab(i, entering) == 0) continue;
      const Scalar factor = tab(i, entering);
      tab.row(i) -= factor * tab.row(leaving);
    }
    const Scalar rc = reduced[entering];
    reduced -= rc * tab.row(leaving).head(vars).transpose();
    basis[static_cast<std::size_t>(leaving)] = entering;
  }

  Vector<Scalar> y = Vector<Scalar>::Constant(vars, Scalar(0));
  for (Eigen::Index i = 0; i < rows; ++i) y[basis[static_cast<std::size_t>(i)]] = tab(i, vars);
  result.x = feasible + y.head(n) - y.segment(n, n);
  result.value = objective.dot(result.x);
  return result;
}

/// Closed minimizer set of a convex piecewise-linear function of one variable.
template <typename Scalar>
struct MinimizerInterval {
  bool all_reals = false;
  Scalar lower{0};
  Scalar upper{0};

  bool contains(const Scalar& x) const { return all_reals || (lower <= x && x <= upper); }
  /// A representative point (the left endpoint, or 0 for the whole line).
  Scalar point() const { return all_reals ? Scalar(0) : lower; }
};

template <typename Scalar>
struct OneDimMinimum {
  Scalar value{0};
  MinimizerInterval<Scalar> minimizers;
};

/// Global minimum of lambda -> ||y + lambda z||_1 by a weighted median over
/// the breakpoints -y_i / z_i with weights |z_i|.
template <typename Scalar>
OneDimMinimum<Scalar> minimize_1d_l1(const Vector<Scalar>& y, const Vector<Scalar>& z) {
  if (y.size() != z.size()) throw std::invalid_argument("minimize_1d_l1: length mismatch");

  struct Breakpoint {
    Scalar at;
    Scalar weight;
  };
  std::vector<Breakpoint> points;
  Scalar total(0);
  for (Eigen::Index i = 0; i < z.size(); ++i) {
    if (z[i] == 0) continue;
    Scalar w = abs_value<Scalar>(z[i]);
    total += w;
    points.push_back({Scalar(-y[i] / z[i]), std::move(w)});
  }

  OneDimMinimum<Scalar> out;
  if (points.empty()) {
    out.value = l1_norm(y);
    out.minimizers.all_reals = true;
    return out;
  }

  std::sort(points.begin(), points.end(), [](const Breakpoint& a, const Breakpoint& b) { return a.at < b.at; });
  // Merge coincident breakpoints.
  std::vector<Breakpoint> merged;
  for (auto& p : points) {
    if (!merged.empty() && merged.back().at == p.at) {
      merged.back().weight += p.weight;
    } else {
      merged.push_back(std::move(p));
    }
  }

  // The slope just right of the k-th breakpoint is 2 C_k - W.
  Scalar cumulative(0);
  for (std::size_t k = 0; k < merged.size(); ++k) {
    cumulative += merged[k].weight;
    const Scalar slope = Scalar(2) * cumulative - total;
    if (slope < 0) continue;
    out.minimizers.lower = merged[k].at;
    out.minimizers.upper = (slope == 0) ? merged[k + 1].at : merged[k].at;
    break;
  }
  out.value = l1_norm(Vector<Scalar>(y + out.minimizers.lower * z));
  return out;
}

template <typename Scalar>
struct MinimaxSolution {
  Scalar t_star{0};
  Vector<Scalar> alpha;
};

inline constexpr Eigen::Index kMaxMinimaxRows = 64;

/// min over alpha of max_p |rhs_p - rows_p . alpha|, solved exactly as the
/// linear program  min t  s.t.  -t <= rhs_p - rows_p . alpha <= t.
template <typename Scalar>
MinimaxSolution<Scalar> solve_minimax_lp(const Matrix<Scalar>& rows, const Vector<Scalar>& rhs) {
  const Eigen::Index q = rows.rows();
  const Eigen::Index m = rows.cols();
  if (q < 1 || m < 1) throw std::invalid_argument("solve_minimax_lp: empty system");
  if (rhs.size() != q) throw std::invalid_argument("solve_minimax_lp: rhs length mismatch");
  if (q > kMaxMinimaxRows)
    throw CapacityExceeded("min-max system has " + std::to_string(q) + " rows; limit is " +
                           std::to_string(kMaxMinimaxRows));

  // Variables (alpha, t); maximize -t.
  Matrix<Scalar> a(2 * q, m + 1);
  Vector<Scalar> b(2 * q);
  a.topLeftCorner(q, m) = rows;
  a.bottomLeftCorner(q, m) = -rows;
  a.col(m).setConstant(Scalar(-1));
  b.head(q) = rhs;
  b.tail(q) = -rhs;

  Vector<Scalar> objective = Vector<Scalar>::Constant(m + 1, Scalar(0));
  objective[m] = Scalar(-1);
  Vector<Scalar> start = Vector<Scalar>::Constant(m + 1, Scalar(0));
  start[m] = linf_norm(rhs);

  const auto lp = maximize_lp<Scalar>(objective, a, b, start);
  if (lp.status != LpStatus::Optimal)
    throw InternalInconsistency("min-max program reported unbounded");

  MinimaxSolution<Scalar> out;
  out.alpha = lp.x.head(m);
  out.t_star = linf_norm(Vector<Scalar>(rhs - rows * out.alpha));
  if (out.t_star != lp.x[m]) throw InternalInconsistency("min-max optimum does not match its residual");
  return out;
}

}  // namespace coapprox
