#pragma once

#include "coapprox/subspace.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace coapprox {

inline constexpr const char* kToolName = "coapprox";
inline constexpr const char* kToolVersion = "1.0.0";

struct NamedTarget {
  std::string name;
  VectorQ vector;
};

struct RunOptions {
  std::optional<std::size_t> trials;
  std::optional<std::uint64_t> seed;
  std::optional<Rational> grid_radius;
  std::optional<Rational> grid_step;
};

/// Input document:
///   { "n": 6,
///     "basis": [["4","2","1","-1","-4","4"], ...],
///     "targets": [{"name": "b1", "vector": ["1","2","3","4","5","6"]}],
///     "options": {"trials": 200, "seed": 7, "grid_radius": "5", "grid_step": "1/2"} }
/// Rationals are strings ("-3/7"); plain JSON integers are accepted too.
struct ProblemFile {
  Eigen::Index n = 0;
  std::vector<VectorQ> basis;
  std::vector<NamedTarget> targets;
  RunOptions options;

  SubspaceBasis subspace() const;
};

/// Throws ValidationError naming the offending field.
ProblemFile parse_problem(const std::string& text);
ProblemFile load_problem(const std::string& path);

using Report = nlohmann::ordered_json;

Report analyze_report(const ProblemFile& problem);
Report norming_set_report(const ProblemFile& problem);
Report solve_report(const ProblemFile& problem, const RunOptions& options);
Report classify_report(const ProblemFile& problem);
Report threshold_report(const ProblemFile& problem);

/// Options given on the command line win over those in the file.
RunOptions merge_options(const RunOptions& file, const RunOptions& cli);

}  // namespace coapprox
