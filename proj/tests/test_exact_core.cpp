#include "coapprox/errors.hpp"
#include "coapprox/linear.hpp"
#include "coapprox/optimize.hpp"
#include "coapprox/rational.hpp"

#include "support.hpp"

#include <doctest.h>

using namespace coapprox;
using testsupport::Rng;

namespace {

MatrixQ rows_of(std::initializer_list<std::initializer_list<long>> rows) {
  MatrixQ a(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(rows.begin()->size()));
  Eigen::Index i = 0;
  for (const auto& r : rows) {
    Eigen::Index j = 0;
    for (long v : r) a(i, j++) = v;
    ++i;
  }
  return a;
}

const MatrixQ kExampleRows = rows_of({{14, 14, 17}, {16, 10, 15}, {14, 0, 11}, {2, -18, -13}});

}  // namespace

TEST_CASE("rational text round-trips") {
  CHECK(to_string(parse_rational("-3/7")) == "-3/7");
  CHECK(to_string(parse_rational("6/4")) == "3/2");
  CHECK(to_string(parse_rational(" 13 ")) == "13");
  CHECK(to_string(parse_rational("0/5")) == "0");
  CHECK(parse_rational("\xE2\x88\x92" "2/3") == Rational(-2, 3));
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1.5"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("--1"), std::invalid_argument);

  Rng rng(11);
  for (int k = 0; k < 200; ++k) {
    const Rational x = testsupport::random_rational(rng, 1000, 97);
    CHECK(parse_rational(to_string(x)) == x);
  }
}

TEST_CASE("l1 norm") {
  CHECK(l1_norm(vector_from_ints({0, 0, 0})) == 0);
  CHECK(l1_norm(vector_from_ints({2, 3, 0, 0, -2, 6})) == 13);
  CHECK(l1_norm(vector_from_ints({1, -2})) == 3);

  Rng rng(12);
  for (int k = 0; k < 200; ++k) {
    const VectorQ v = testsupport::random_rational_vector(rng, 5);
    CHECK(l1_norm(v) >= 0);
    CHECK((l1_norm(v) == 0) == is_zero(v));
  }
}

TEST_CASE("solve_linear on the worked system") {
  auto unique = solve_linear<Rational>(kExampleRows, vector_from_ints({13, 13, 13, -5}));
  REQUIRE(unique.status == SystemStatus::UniqueSolution);
  CHECK(*unique.solution == (VectorQ(3) << Rational(1, 7), Rational(-3, 7), Rational(1)).finished());

  auto none = solve_linear<Rational>(kExampleRows, vector_from_ints({11, 3, -3, -19}));
  CHECK(none.status == SystemStatus::NoSolution);
  CHECK_FALSE(none.solution.has_value());

  auto id = solve_linear<Rational>(MatrixQ::Identity(2, 2), vector_from_ints({5, 7}));
  REQUIRE(id.status == SystemStatus::UniqueSolution);
  CHECK(*id.solution == vector_from_ints({5, 7}));

  auto family = solve_linear<Rational>(rows_of({{1, 1}, {2, 2}}), vector_from_ints({1, 2}));
  CHECK(family.status == SystemStatus::AffineFamily);
  CHECK(family.nullspace_basis.size() == 1);
}

TEST_CASE("solve_linear solutions reproduce the right-hand side") {
  Rng rng(13);
  for (int k = 0; k < 150; ++k) {
    const auto rows = testsupport::uniform_int(rng, 1, 5);
    const auto cols = testsupport::uniform_int(rng, 1, 4);
    MatrixQ a(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i) a.row(i) = testsupport::random_int_vector(rng, cols, -3, 3).transpose();
    // Half of the right-hand sides are consistent by construction.
    const VectorQ rhs = k % 2 == 0 ? VectorQ(a * testsupport::random_rational_vector(rng, cols))
                                   : testsupport::random_rational_vector(rng, rows);
    const auto res = solve_linear<Rational>(a, rhs);
    if (k % 2 == 0) CHECK(res.status != SystemStatus::NoSolution);
    if (res.solution) {
      CHECK(VectorQ(a * *res.solution) == rhs);
      for (const auto& v : res.nullspace_basis) CHECK(is_zero(VectorQ(a * v)));
      CHECK(static_cast<Eigen::Index>(res.nullspace_basis.size()) == cols - rank(a));
    }
  }
}

TEST_CASE("inverse and rank") {
  CHECK(rank(kExampleRows) == 3);
  CHECK(rank(rows_of({{1, 2}, {2, 4}})) == 1);
  CHECK_FALSE(inverse<Rational>(rows_of({{1, 2}, {2, 4}})).has_value());

  Rng rng(14);
  for (int k = 0; k < 50; ++k) {
    const MatrixQ c = testsupport::random_invertible(rng, 3);
    const auto inv = inverse<Rational>(c);
    REQUIRE(inv.has_value());
    CHECK(MatrixQ(c * *inv) == MatrixQ::Identity(3, 3));
  }
}

TEST_CASE("minimize_1d_l1 examples") {
  auto flat = minimize_1d_l1<Rational>(vector_from_ints({1, -2}), vector_from_ints({0, 0}));
  CHECK(flat.value == 3);
  CHECK(flat.minimizers.all_reals);

  auto wide = minimize_1d_l1<Rational>(vector_from_ints({1, -2}), vector_from_ints({1, 1}));
  CHECK(wide.value == 3);
  CHECK_FALSE(wide.minimizers.all_reals);
  CHECK(wide.minimizers.lower == -1);
  CHECK(wide.minimizers.upper == 2);

  auto sym = minimize_1d_l1<Rational>(vector_from_ints({1, 1}), vector_from_ints({1, -1}));
  CHECK(sym.value == 2);
  CHECK(sym.minimizers.lower == -1);
  CHECK(sym.minimizers.upper == 1);

  auto point = minimize_1d_l1<Rational>(vector_from_ints({1, 0}), vector_from_ints({1, 0}));
  CHECK(point.value == 0);
  CHECK(point.minimizers.lower == -1);
  CHECK(point.minimizers.upper == -1);
}

TEST_CASE("minimize_1d_l1 is a global minimum") {
  Rng rng(15);
  for (int k = 0; k < 100; ++k) {
    const auto n = testsupport::uniform_int(rng, 1, 6);
    const VectorQ y = testsupport::random_rational_vector(rng, n);
    VectorQ z = testsupport::random_int_vector(rng, n, -3, 3);
    const auto res = minimize_1d_l1<Rational>(y, z);
    for (int s = 0; s < 100; ++s) {
      const Rational lambda(testsupport::uniform_int(rng, -100, 100), 10);
      CHECK(l1_norm(VectorQ(y + lambda * z)) >= res.value);
    }
    if (!res.minimizers.all_reals) {
      const Rational mid = (res.minimizers.lower + res.minimizers.upper) / 2;
      CHECK(l1_norm(VectorQ(y + mid * z)) == res.value);
      CHECK(l1_norm(VectorQ(y + res.minimizers.upper * z)) == res.value);
      // Just outside the interval the value is strictly larger.
      CHECK(l1_norm(VectorQ(y + (res.minimizers.lower - Rational(1, 1000)) * z)) > res.value);
      CHECK(l1_norm(VectorQ(y + (res.minimizers.upper + Rational(1, 1000)) * z)) > res.value);
    }
  }
}

TEST_CASE("solve_minimax_lp examples") {
  auto exact = solve_minimax_lp<Rational>(MatrixQ::Identity(2, 2), vector_from_ints({4, -6}));
  CHECK(exact.t_star == 0);
  CHECK(exact.alpha == vector_from_ints({4, -6}));

  auto balanced = solve_minimax_lp<Rational>(rows_of({{1}, {1}}), vector_from_ints({0, 2}));
  CHECK(balanced.t_star == 1);
  CHECK(balanced.alpha == vector_from_ints({1}));

  auto symmetric = solve_minimax_lp<Rational>(rows_of({{1}, {-1}}), vector_from_ints({1, 1}));
  CHECK(symmetric.t_star == 1);
  CHECK(symmetric.alpha == vector_from_ints({0}));

  CHECK_THROWS_AS(solve_minimax_lp<Rational>(MatrixQ::Constant(65, 1, Rational(1)), VectorQ::Zero(65)),
                  CapacityExceeded);
}

TEST_CASE("solve_minimax_lp matches vertex enumeration") {
  auto worked = solve_minimax_lp<Rational>(kExampleRows, vector_from_ints({11, 3, -3, -19}));
  CHECK(worked.t_star > 0);
  CHECK(worked.t_star == testsupport::minimax_by_enumeration(kExampleRows, vector_from_ints({11, 3, -3, -19})));

  Rng rng(16);
  for (int k = 0; k < 120; ++k) {
    const auto q = testsupport::uniform_int(rng, 1, 6);
    const auto m = testsupport::uniform_int(rng, 1, 3);
    MatrixQ rows(q, m);
    for (Eigen::Index i = 0; i < q; ++i) rows.row(i) = testsupport::random_int_vector(rng, m, -4, 4).transpose();
    const VectorQ rhs = testsupport::random_rational_vector(rng, q);

    const auto sol = solve_minimax_lp<Rational>(rows, rhs);
    CHECK(sol.t_star == testsupport::max_residual(rows, rhs, sol.alpha));
    CHECK(sol.t_star == testsupport::minimax_by_enumeration(rows, rhs));
    CHECK(sol.t_star <= linf_norm(rhs));
    for (int s = 0; s < 100; ++s)
      CHECK(testsupport::max_residual(rows, rhs, testsupport::random_rational_vector(rng, m)) >= sol.t_star);
  }
}

TEST_CASE("maximize_lp reports unbounded programs") {
  // maximize x subject to -x <= 0
  MatrixQ a(1, 1);
  a(0, 0) = -1;
  const auto res = maximize_lp<Rational>(vector_from_ints({1}), a, vector_from_ints({0}), vector_from_ints({0}));
  CHECK(res.status == LpStatus::Unbounded);

  // maximize x + y subject to x + 2y <= 4, 3x + y <= 6
  const MatrixQ box = rows_of({{1, 2}, {3, 1}});
  const auto opt = maximize_lp<Rational>(vector_from_ints({1, 1}), box, vector_from_ints({4, 6}), vector_from_ints({0, 0}));
  REQUIRE(opt.status == LpStatus::Optimal);
  CHECK(opt.value == Rational(14, 5));
  CHECK(opt.x == (VectorQ(2) << Rational(8, 5), Rational(6, 5)).finished());
}
