#pragma once

#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>

#include <Eigen/Core>

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace coapprox {

/// Exact rational scalar. GMP keeps every value in lowest terms with a
/// positive denominator; expression templates are off so the type behaves
/// as a plain value inside Eigen expressions.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;

template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using VectorQ = Vector<Rational>;
using MatrixQ = Matrix<Rational>;

/// Sign of an exact value as -1, 0 or +1.
template <typename Scalar>
int sign(const Scalar& x) {
  if (x > 0) return 1;
  if (x < 0) return -1;
  return 0;
}

template <typename Scalar>
Scalar abs_value(const Scalar& x) {
  return x < 0 ? Scalar(-x) : x;
}

/// Parses "-3/7", "13", "0/5". Accepts an ASCII '-' or U+2212 as the sign.
/// Throws std::invalid_argument on anything else, including a zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical text form: "p/q" in lowest terms, or "p" when q = 1.
std::string to_string(const Rational& x);

std::vector<std::string> to_strings(const VectorQ& v);

VectorQ vector_from_ints(std::initializer_list<long> values);

/// Builds a matrix whose columns are the given vectors (all of equal length).
MatrixQ matrix_from_columns(const std::vector<VectorQ>& columns);

}  // namespace coapprox
