#pragma once

#include "coapprox/subspace.hpp"

#include <string>
#include <vector>

namespace coapprox {

struct ClassificationReport {
  bool coproximinal = false;
  bool co_chebyshev = false;
  Eigen::Index m = 0;
  Eigen::Index q = 0;
  std::size_t d = 0;
  std::size_t zero_set_size = 0;
  /// Machine-readable tags of the facts applied, in order.
  std::vector<std::string> rationale;
};

/// Coproximinal iff the reduced norming set spans an m-dimensional space;
/// co-Chebyshev iff additionally the zero set is empty.
ClassificationReport classify(const SubspaceBasis& basis);

}  // namespace coapprox
