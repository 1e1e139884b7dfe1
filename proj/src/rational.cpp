#include "coapprox/rational.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace coapprox {

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() &&
         std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c) != 0; });
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::string original(text);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);

  bool negative = false;
  if (text.starts_with('-')) {
    negative = true;
    text.remove_prefix(1);
  } else if (text.starts_with("−")) {
    negative = true;
    text.remove_prefix(std::string_view("−").size());
  }

  std::string_view num = text;
  std::string_view den = "1";
  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    num = text.substr(0, slash);
    den = text.substr(slash + 1);
  }
  if (!all_digits(num) || !all_digits(den)) {
    throw std::invalid_argument("malformed rational \"" + original + "\"");
  }
  Integer p{std::string(num)};
  Integer q{std::string(den)};
  if (q == 0) throw std::invalid_argument("zero denominator in rational \"" + original + "\"");
  if (negative) p = -p;
  return Rational(p, q);
}

std::string to_string(const Rational& x) {
  const Integer p = boost::multiprecision::numerator(x);
  const Integer q = boost::multiprecision::denominator(x);
  if (q == 1) return p.str();
  return p.str() + "/" + q.str();
}

std::vector<std::string> to_strings(const VectorQ& v) {
  std::vector<std::string> out;
  out.reserve(static_cast<std::size_t>(v.size()));
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(to_string(v[i]));
  return out;
}

VectorQ vector_from_ints(std::initializer_list<long> values) {
  VectorQ v(static_cast<Eigen::Index>(values.size()));
  Eigen::Index i = 0;
  for (long x : values) v[i++] = Rational(x);
  return v;
}

MatrixQ matrix_from_columns(const std::vector<VectorQ>& columns) {
  if (columns.empty()) return MatrixQ(0, 0);
  const Eigen::Index n = columns.front().size();
  MatrixQ a(n, static_cast<Eigen::Index>(columns.size()));
  for (std::size_t k = 0; k < columns.size(); ++k) {
    if (columns[k].size() != n) throw std::invalid_argument("columns of unequal length");
    a.col(static_cast<Eigen::Index>(k)) = columns[k];
  }
  return a;
}

}  // namespace coapprox
