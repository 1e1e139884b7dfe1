#pragma once

// Random instance generators and independent reference computations shared by
// the unit suites and the acceptance runner. Nothing here calls into the
// norming-set or solver code.

#include "coapprox/linear.hpp"
#include "coapprox/rational.hpp"
#include "coapprox/subspace.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <vector>

namespace testsupport {

using coapprox::MatrixQ;
using coapprox::Rational;
using coapprox::VectorQ;

using Rng = std::mt19937_64;

inline long uniform_int(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

inline Rational random_rational(Rng& rng, long num_bound = 10, long den_max = 6) {
  return Rational(uniform_int(rng, -num_bound, num_bound), uniform_int(rng, 1, den_max));
}

inline VectorQ random_int_vector(Rng& rng, Eigen::Index n, long lo = -5, long hi = 5) {
  VectorQ v(n);
  for (Eigen::Index i = 0; i < n; ++i) v[i] = uniform_int(rng, lo, hi);
  return v;
}

inline VectorQ random_rational_vector(Rng& rng, Eigen::Index n, long num_bound = 10, long den_max = 6) {
  VectorQ v(n);
  for (Eigen::Index i = 0; i < n; ++i) v[i] = random_rational(rng, num_bound, den_max);
  return v;
}

/// Invertible m x m matrix with small rational entries.
inline MatrixQ random_invertible(Rng& rng, Eigen::Index m) {
  for (;;) {
    MatrixQ c(m, m);
    for (Eigen::Index i = 0; i < m; ++i)
      for (Eigen::Index j = 0; j < m; ++j) c(i, j) = random_rational(rng, 4, 3);
    if (coapprox::rank(c) == m) return c;
  }
}

struct BasisShape {
  Eigen::Index n = 4;
  Eigen::Index m = 2;
  /// Number of all-zero rows, placed at random positions.
  Eigen::Index zero_rows = 0;
  /// When positive, nonzero rows are multiples of this many random directions,
  /// which produces nontrivial component classes.
  Eigen::Index direction_pool = 0;
  long lo = -5;
  long hi = 5;
};

/// A random basis of the given shape with entries in [lo, hi]. Rows outside
/// the requested zero rows are nonzero.
inline coapprox::SubspaceBasis random_basis(Rng& rng, const BasisShape& shape) {
  const Eigen::Index n = shape.n;
  const Eigen::Index m = shape.m;
  for (;;) {
    std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
    for (Eigen::Index i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i;
    std::shuffle(order.begin(), order.end(), rng);
    std::vector<bool> zero(static_cast<std::size_t>(n), false);
    for (Eigen::Index k = 0; k < shape.zero_rows; ++k) zero[static_cast<std::size_t>(order[static_cast<std::size_t>(k)])] = true;

    std::vector<VectorQ> pool;
    for (Eigen::Index p = 0; p < shape.direction_pool; ++p) {
      VectorQ dir;
      do dir = random_int_vector(rng, m, -3, 3);
      while (coapprox::is_zero(dir));
      pool.push_back(dir);
    }

    MatrixQ a = MatrixQ::Constant(n, m, Rational(0));
    for (Eigen::Index i = 0; i < n; ++i) {
      if (zero[static_cast<std::size_t>(i)]) continue;
      VectorQ row;
      if (pool.empty()) {
        do row = random_int_vector(rng, m, shape.lo, shape.hi);
        while (coapprox::is_zero(row));
      } else {
        long c = 0;
        while (c == 0) c = uniform_int(rng, -2, 2);
        row = pool[static_cast<std::size_t>(uniform_int(rng, 0, static_cast<long>(pool.size()) - 1))] * Rational(c);
      }
      a.row(i) = row.transpose();
    }
    if (coapprox::rank(a) == m) return coapprox::SubspaceBasis(a);
  }
}

/// A basis whose nonzero rows take exactly m independent directions, so the
/// subspace has d = m components.
inline coapprox::SubspaceBasis random_few_direction_basis(Rng& rng, Eigen::Index n, Eigen::Index m,
                                                         Eigen::Index zero_rows) {
  for (;;) {
    MatrixQ dirs(m, m);
    for (Eigen::Index i = 0; i < m; ++i) dirs.row(i) = random_int_vector(rng, m, -3, 3).transpose();
    if (coapprox::rank(dirs) != m) continue;

    std::vector<Eigen::Index> slots;
    for (Eigen::Index i = 0; i < n - zero_rows; ++i) slots.push_back(i < m ? i : uniform_int(rng, 0, m - 1));
    std::shuffle(slots.begin(), slots.end(), rng);
    for (Eigen::Index k = 0; k < zero_rows; ++k)
      slots.insert(slots.begin() + uniform_int(rng, 0, static_cast<long>(slots.size())), -1);

    MatrixQ a = MatrixQ::Constant(n, m, Rational(0));
    for (Eigen::Index i = 0; i < n; ++i) {
      const Eigen::Index s = slots[static_cast<std::size_t>(i)];
      if (s < 0) continue;
      long c = 0;
      while (c == 0) c = uniform_int(rng, -3, 3);
      a.row(i) = dirs.row(s) * Rational(c);
    }
    return coapprox::SubspaceBasis(a);
  }
}

/// Zero-set coordinates read directly off the matrix.
inline std::vector<std::size_t> zero_rows_of(const MatrixQ& a) {
  std::vector<std::size_t> z;
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    if (coapprox::is_zero(VectorQ(a.row(i).transpose()))) z.push_back(static_cast<std::size_t>(i));
  return z;
}

/// ||A beta - A alpha||_1 <= ||A beta - b||_1 checked for one beta.
inline bool coapprox_inequality_holds(const MatrixQ& a, const VectorQ& b, const VectorQ& alpha, const VectorQ& beta) {
  const VectorQ ab = a * beta;
  return coapprox::l1_norm(VectorQ(ab - a * alpha)) <= coapprox::l1_norm(VectorQ(ab - b));
}

/// Reference min-max: min over alpha of max_p |rhs_p - rows_p . alpha| by
/// enumerating vertices of the epigraph polyhedron. Columns of `rows` are first
/// cut down to a pivot set so the polyhedron is pointed; the value is
/// unchanged because only rows * alpha matters.
inline Rational minimax_by_enumeration(const MatrixQ& rows, const VectorQ& rhs) {
  const auto col_ech = coapprox::row_reduce<Rational>(rows);
  MatrixQ r(rows.rows(), col_ech.rank());
  for (Eigen::Index j = 0; j < col_ech.rank(); ++j) r.col(j) = rows.col(col_ech.pivot_columns[static_cast<std::size_t>(j)]);

  const Eigen::Index q = r.rows();
  const Eigen::Index k = r.cols();
  // Constraint s: sign * (rhs_p - r_p . alpha) <= t, written as
  // (-sign * r_p, -1) . (alpha, t) <= -sign * rhs_p.
  std::vector<std::pair<VectorQ, Rational>> cons;
  for (Eigen::Index p = 0; p < q; ++p)
    for (int s : {1, -1}) {
      VectorQ g(k + 1);
      g.head(k) = -Rational(s) * r.row(p).transpose();
      g[k] = -1;
      cons.emplace_back(g, -Rational(s) * rhs[p]);
    }

  const auto total = static_cast<std::size_t>(2 * q);
  const auto pick = static_cast<std::size_t>(k + 1);
  std::optional<Rational> best;
  std::vector<bool> mask(total, false);
  std::fill(mask.begin(), mask.begin() + static_cast<std::ptrdiff_t>(pick), true);
  do {
    MatrixQ lhs(k + 1, k + 1);
    VectorQ val(k + 1);
    Eigen::Index row = 0;
    for (std::size_t c = 0; c < total; ++c) {
      if (!mask[c]) continue;
      lhs.row(row) = cons[c].first.transpose();
      val[row] = cons[c].second;
      ++row;
    }
    const auto x = coapprox::solve_square<Rational>(lhs, val);
    if (!x) continue;
    bool feasible = true;
    for (const auto& [g, h] : cons)
      if (g.dot(*x) > h) {
        feasible = false;
        break;
      }
    if (feasible && (!best || (*x)[k] < *best)) best = (*x)[k];
  } while (std::prev_permutation(mask.begin(), mask.end()));
  return best.value_or(Rational(0));
}

/// Value of the min-max objective at a given alpha.
inline Rational max_residual(const MatrixQ& rows, const VectorQ& rhs, const VectorQ& alpha) {
  return coapprox::linf_norm(VectorQ(rhs - rows * alpha));
}

/// Canonical set of +/- pairs (first nonzero entry +1) for comparisons.
inline std::set<std::vector<int>> as_pair_set(const std::vector<std::vector<int>>& reps) {
  std::set<std::vector<int>> out;
  for (auto v : reps) {
    const auto lead = std::find_if(v.begin(), v.end(), [](int x) { return x != 0; });
    if (lead != v.end() && *lead < 0)
      for (int& x : v) x = -x;
    out.insert(v);
  }
  return out;
}

/// Partition of {0..n-1} \ Z by exact row proportionality, computed by a
/// pairwise rank test.
inline std::set<std::vector<std::size_t>> proportionality_partition(const MatrixQ& a) {
  const auto n = static_cast<std::size_t>(a.rows());
  std::vector<bool> used(n, false);
  std::set<std::vector<std::size_t>> parts;
  for (std::size_t i = 0; i < n; ++i) {
    if (used[i] || coapprox::is_zero(VectorQ(a.row(static_cast<Eigen::Index>(i)).transpose()))) continue;
    std::vector<std::size_t> part{i};
    used[i] = true;
    for (std::size_t j = i + 1; j < n; ++j) {
      if (used[j] || coapprox::is_zero(VectorQ(a.row(static_cast<Eigen::Index>(j)).transpose()))) continue;
      MatrixQ pair(2, a.cols());
      pair.row(0) = a.row(static_cast<Eigen::Index>(i));
      pair.row(1) = a.row(static_cast<Eigen::Index>(j));
      if (coapprox::rank(pair) == 1) {
        part.push_back(j);
        used[j] = true;
      }
    }
    parts.insert(part);
  }
  return parts;
}

}  // namespace testsupport
