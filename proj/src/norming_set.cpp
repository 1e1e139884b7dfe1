#include "coapprox/norming_set.hpp"

#include "coapprox/errors.hpp"
#include "coapprox/linear.hpp"
#include "coapprox/optimize.hpp"

#include <algorithm>
#include <optional>
#include <string>

namespace coapprox {

namespace {

VectorQ primitive_positive_multiple(const VectorQ& row) {
  Integer lcm_den(1);
  for (Eigen::Index k = 0; k < row.size(); ++k)
    lcm_den = boost::multiprecision::lcm(lcm_den, Integer(boost::multiprecision::denominator(row[k])));
  Integer g(0);
  for (Eigen::Index k = 0; k < row.size(); ++k) {
    const Integer scaled = Integer(boost::multiprecision::numerator(row[k] * Rational(lcm_den)));
    g = boost::multiprecision::gcd(g, scaled);
  }
  return row * Rational(lcm_den, g);
}

// Interior point of the open cell with the given signs, or nullopt when the
// cell is empty. Maximizes the smallest signed margin over the unit box.
std::optional<VectorQ> cell_witness(const std::vector<VectorQ>& normals, const std::vector<int>& signs) {
  const Eigen::Index m = normals.front().size();
  const auto count = static_cast<Eigen::Index>(signs.size());

  MatrixQ a = MatrixQ::Constant(count + 2 * m, m + 1, Rational(0));
  VectorQ b = VectorQ::Constant(count + 2 * m, Rational(0));
  for (Eigen::Index j = 0; j < count; ++j) {
    a.row(j).head(m) = -Rational(signs[static_cast<std::size_t>(j)]) * normals[static_cast<std::size_t>(j)].transpose();
    a(j, m) = 1;
  }
  for (Eigen::Index k = 0; k < m; ++k) {
    a(count + 2 * k, k) = 1;
    a(count + 2 * k + 1, k) = -1;
    b[count + 2 * k] = 1;
    b[count + 2 * k + 1] = 1;
  }
  VectorQ objective = VectorQ::Constant(m + 1, Rational(0));
  objective[m] = 1;

  const auto lp = maximize_lp<Rational>(objective, a, b, VectorQ::Constant(m + 1, Rational(0)));
  if (lp.status != LpStatus::Optimal) throw InternalInconsistency("cell margin program is unbounded");
  if (lp.x[m] <= 0) return std::nullopt;
  return VectorQ(lp.x.head(m));
}

int sign_changes(const std::vector<int>& signs) {
  int changes = 0;
  for (std::size_t j = 1; j < signs.size(); ++j) changes += signs[j] != signs[j - 1] ? 1 : 0;
  return changes;
}

}  // namespace

MatrixQ NormingSet::basis_matrix() const {
  const auto cols = representatives.empty() ? 0 : static_cast<Eigen::Index>(representatives.front().size());
  MatrixQ x(static_cast<Eigen::Index>(basis_indices.size()), cols);
  for (std::size_t s = 0; s < basis_indices.size(); ++s)
    for (Eigen::Index i = 0; i < cols; ++i)
      x(static_cast<Eigen::Index>(s), i) = representatives[basis_indices[s]][static_cast<std::size_t>(i)];
  return x;
}

MatrixQ NormingSet::as_matrix() const {
  const auto rows = static_cast<Eigen::Index>(representatives.size());
  const auto cols = rows == 0 ? 0 : static_cast<Eigen::Index>(representatives.front().size());
  MatrixQ x(rows, cols);
  for (Eigen::Index s = 0; s < rows; ++s)
    for (Eigen::Index i = 0; i < cols; ++i)
      x(s, i) = representatives[static_cast<std::size_t>(s)][static_cast<std::size_t>(i)];
  return x;
}

Arrangement build_arrangement(const ReducedInstance& reduced, const ComponentProfile& profile) {
  const MatrixQ& a = reduced.reduced_basis.matrix();
  Arrangement arr;
  for (const auto& cls : profile.classes)
    arr.normals.push_back(primitive_positive_multiple(a.row(static_cast<Eigen::Index>(
        std::find(reduced.kept_indices.begin(), reduced.kept_indices.end(), cls.representative) -
        reduced.kept_indices.begin())).transpose()));

  for (std::size_t i : reduced.kept_indices) {
    const int c = profile.class_of.at(i);
    if (c < 0) throw InternalInconsistency("zero-set coordinate reached the arrangement");
    arr.hyperplane_of.push_back(static_cast<std::size_t>(c));
    arr.orientation.push_back(sign(profile.constant_of(i)));
  }
  return arr;
}

std::vector<SignCell> enumerate_cells(const Arrangement& arr) {
  const std::size_t r = arr.r();
  if (r == 0) throw std::invalid_argument("arrangement has no hyperplanes");
  if (r > kMaxHyperplanes)
    throw CapacityExceeded("arrangement has " + std::to_string(r) + " distinct hyperplanes; limit is " +
                           std::to_string(kMaxHyperplanes));

  // A nonempty cell of the first j+1 hyperplanes restricts to a nonempty cell
  // of the first j, so patterns are grown one hyperplane at a time.
  std::vector<SignCell> frontier;
  {
    std::vector<VectorQ> first{arr.normals.front()};
    auto w = cell_witness(first, {1});
    if (!w) throw InternalInconsistency("half-space reported empty");
    frontier.push_back({{1}, std::move(*w)});
  }
  for (std::size_t j = 1; j < r; ++j) {
    const std::vector<VectorQ> prefix(arr.normals.begin(), arr.normals.begin() + static_cast<std::ptrdiff_t>(j + 1));
    std::vector<SignCell> next;
    for (const auto& cell : frontier) {
      for (int s : {1, -1}) {
        auto signs = cell.signs;
        signs.push_back(s);
        if (auto w = cell_witness(prefix, signs)) next.push_back({std::move(signs), std::move(*w)});
      }
    }
    frontier = std::move(next);
  }

  std::sort(frontier.begin(), frontier.end(), [](const SignCell& x, const SignCell& y) {
    // + sorts before -.
    return std::lexicographical_compare(x.signs.begin(), x.signs.end(), y.signs.begin(), y.signs.end(),
                                        [](int u, int v) { return u > v; });
  });
  return frontier;
}

NormingSet minimal_norming_set(const Arrangement& arr, const std::vector<SignCell>& cells,
                               const ReducedInstance& reduced) {
  const std::size_t k = reduced.kept_indices.size();
  if (arr.hyperplane_of.size() != k) throw std::invalid_argument("arrangement does not match reduced instance");

  NormingSet ns;
  for (std::size_t c = 0; c < cells.size(); ++c) {
    std::vector<int> x(k);
    for (std::size_t i = 0; i < k; ++i) x[i] = cells[c].signs.at(arr.hyperplane_of[i]) * arr.orientation[i];
    const auto lead = std::find_if(x.begin(), x.end(), [](int v) { return v != 0; });
    if (lead != x.end() && *lead < 0)
      for (int& v : x) v = -v;
    ns.representatives.push_back(std::move(x));
    ns.cell_index.push_back(c);
  }
  ns.span_dim = ns.representatives.empty() ? 0 : rank(ns.as_matrix());

  // cells arrive in lexicographic order, so a stable sort keeps it as the tie-break
  std::vector<std::size_t> order(cells.size());
  for (std::size_t c = 0; c < order.size(); ++c) order[c] = c;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return sign_changes(cells[x].signs) < sign_changes(cells[y].signs);
  });
  MatrixQ chosen(0, static_cast<Eigen::Index>(k));
  for (std::size_t c : order) {
    if (static_cast<Eigen::Index>(ns.basis_indices.size()) == ns.span_dim) break;
    MatrixQ trial(chosen.rows() + 1, chosen.cols());
    trial.topRows(chosen.rows()) = chosen;
    for (std::size_t i = 0; i < k; ++i)
      trial(chosen.rows(), static_cast<Eigen::Index>(i)) = ns.representatives[c][i];
    if (rank(trial) == trial.rows()) {
      chosen = std::move(trial);
      ns.basis_indices.push_back(c);
    }
  }
  return ns;
}

VectorQ ambient_sign_vector(const std::vector<int>& reduced_signs, const ReducedInstance& reduced) {
  VectorQ v(static_cast<Eigen::Index>(reduced_signs.size()));
  for (std::size_t i = 0; i < reduced_signs.size(); ++i) v[static_cast<Eigen::Index>(i)] = reduced_signs[i];
  return reduced.embed(v);
}

NormingAnalysis analyze_norming(const SubspaceBasis& basis) {
  auto profile = build_profile(basis);
  auto reduced = reduce_sigma(basis, profile);
  auto arrangement = build_arrangement(reduced, profile);
  auto cells = enumerate_cells(arrangement);
  auto norming = minimal_norming_set(arrangement, cells, reduced);
  return NormingAnalysis{std::move(profile), std::move(reduced), std::move(arrangement), std::move(cells),
                         std::move(norming)};
}

}  // namespace coapprox
