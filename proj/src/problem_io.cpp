#include "coapprox/problem_io.hpp"

#include "coapprox/classify.hpp"
#include "coapprox/errors.hpp"
#include "coapprox/linear.hpp"
#include "coapprox/norming_set.hpp"
#include "coapprox/oracle.hpp"
#include "coapprox/solver.hpp"

#include <fstream>
#include <sstream>

namespace coapprox {

namespace {

using json = nlohmann::ordered_json;

constexpr std::size_t kDefaultTrials = 200;
const Rational kDefaultGridRadius{5};
const Rational kDefaultGridStep{1, 2};

Rational parse_entry(const json& value, const std::string& field) {
  if (value.is_string()) {
    try {
      return parse_rational(value.get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw ValidationError(field + ": " + e.what());
    }
  }
  if (value.is_number_integer()) return Rational(value.get<long long>());
  throw ValidationError(field + ": expected a rational string such as \"-3/7\"");
}

VectorQ parse_vector(const json& value, Eigen::Index n, const std::string& field) {
  if (!value.is_array()) throw ValidationError(field + ": expected an array");
  if (static_cast<Eigen::Index>(value.size()) != n)
    throw ValidationError(field + ": expected " + std::to_string(n) + " entries, got " +
                          std::to_string(value.size()));
  VectorQ v(n);
  for (Eigen::Index i = 0; i < n; ++i)
    v[i] = parse_entry(value[static_cast<std::size_t>(i)], field + "[" + std::to_string(i) + "]");
  return v;
}

std::uint64_t parse_unsigned(const json& value, const std::string& field) {
  if (!value.is_number_unsigned() && !(value.is_number_integer() && value.get<long long>() >= 0))
    throw ValidationError(field + ": expected a non-negative integer");
  return value.get<std::uint64_t>();
}

json strings(const VectorQ& v) { return to_strings(v); }

json one_based(const std::vector<std::size_t>& indices) {
  json out = json::array();
  for (auto i : indices) out.push_back(i + 1);
  return out;
}

json sign_list(const std::vector<int>& signs) { return signs; }

json matrix_rows(const MatrixQ& a) {
  json rows = json::array();
  for (Eigen::Index p = 0; p < a.rows(); ++p) rows.push_back(strings(a.row(p).transpose()));
  return rows;
}

Report header(const char* command) {
  Report r;
  r["tool"] = kToolName;
  r["version"] = kToolVersion;
  r["command"] = command;
  return r;
}

void require_targets(const ProblemFile& problem) {
  if (problem.targets.empty()) throw ValidationError("targets: at least one target is required");
}

Report verdict_json(const VerificationVerdict& v) {
  Report out;
  out["verdict"] = v.verdict == Verdict::Confirmed ? "Confirmed" : "Refuted";
  out["seed"] = v.seed;
  out["directions_checked"] = v.directions_checked;
  if (v.counterexample) {
    out["counterexample"] = {{"beta", strings(v.counterexample->beta)},
                             {"distance_to_candidate", to_string(v.counterexample->lhs)},
                             {"distance_to_target", to_string(v.counterexample->rhs)}};
  }
  return out;
}

}  // namespace

SubspaceBasis ProblemFile::subspace() const { return SubspaceBasis(matrix_from_columns(basis)); }

ProblemFile parse_problem(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ValidationError(std::string("input is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ValidationError("input: expected a JSON object");

  ProblemFile problem;
  if (!doc.contains("n")) throw ValidationError("n: missing");
  const auto n = parse_unsigned(doc["n"], "n");
  if (n < 1) throw ValidationError("n: must be at least 1");
  problem.n = static_cast<Eigen::Index>(n);

  if (!doc.contains("basis") || !doc["basis"].is_array() || doc["basis"].empty())
    throw ValidationError("basis: expected a non-empty array of vectors");
  for (std::size_t k = 0; k < doc["basis"].size(); ++k)
    problem.basis.push_back(parse_vector(doc["basis"][k], problem.n, "basis[" + std::to_string(k) + "]"));

  if (doc.contains("targets")) {
    const json& targets = doc["targets"];
    if (!targets.is_array()) throw ValidationError("targets: expected an array");
    for (std::size_t t = 0; t < targets.size(); ++t) {
      const std::string field = "targets[" + std::to_string(t) + "]";
      const json& entry = targets[t];
      NamedTarget target;
      if (entry.is_object()) {
        if (!entry.contains("vector")) throw ValidationError(field + ".vector: missing");
        target.name = entry.value("name", "b" + std::to_string(t + 1));
        target.vector = parse_vector(entry["vector"], problem.n, field + ".vector");
      } else {
        target.name = "b" + std::to_string(t + 1);
        target.vector = parse_vector(entry, problem.n, field);
      }
      problem.targets.push_back(std::move(target));
    }
  }

  if (doc.contains("options")) {
    const json& opts = doc["options"];
    if (!opts.is_object()) throw ValidationError("options: expected an object");
    if (opts.contains("trials")) problem.options.trials = parse_unsigned(opts["trials"], "options.trials");
    if (opts.contains("seed")) problem.options.seed = parse_unsigned(opts["seed"], "options.seed");
    if (opts.contains("grid_radius"))
      problem.options.grid_radius = parse_entry(opts["grid_radius"], "options.grid_radius");
    if (opts.contains("grid_step")) problem.options.grid_step = parse_entry(opts["grid_step"], "options.grid_step");
  }
  return problem;
}

ProblemFile load_problem(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("input: cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_problem(buf.str());
}

RunOptions merge_options(const RunOptions& file, const RunOptions& cli) {
  RunOptions out = file;
  if (cli.trials) out.trials = cli.trials;
  if (cli.seed) out.seed = cli.seed;
  if (cli.grid_radius) out.grid_radius = cli.grid_radius;
  if (cli.grid_step) out.grid_step = cli.grid_step;
  return out;
}

Report analyze_report(const ProblemFile& problem) {
  const auto basis = problem.subspace();
  const auto profile = build_profile(basis);

  Report r = header("analyze");
  r["n"] = basis.ambient_dim();
  r["m"] = basis.dim();
  r["zero_set"] = one_based(profile.zero_set);
  r["d"] = profile.d();
  json classes = json::array();
  for (const auto& cls : profile.classes) {
    json members = json::array();
    for (std::size_t k = 0; k < cls.members.size(); ++k)
      members.push_back({{"index", cls.members[k] + 1}, {"constant", to_string(cls.constants[k])}});
    classes.push_back({{"representative", cls.representative + 1}, {"members", members}});
  }
  r["classes"] = classes;
  r["rationale"] = json::array({"component-profile"});
  return r;
}

Report norming_set_report(const ProblemFile& problem) {
  const auto basis = problem.subspace();
  const auto an = analyze_norming(basis);

  Report r = header("norming-set");
  r["n"] = basis.ambient_dim();
  r["m"] = basis.dim();
  r["zero_set"] = one_based(an.profile.zero_set);
  r["kept_indices"] = one_based(an.reduced.kept_indices);

  json hyperplanes = json::array();
  for (std::size_t h = 0; h < an.arrangement.r(); ++h) {
    std::vector<std::size_t> members;
    json orientation = json::array();
    for (std::size_t i = 0; i < an.arrangement.hyperplane_of.size(); ++i) {
      if (an.arrangement.hyperplane_of[i] != h) continue;
      members.push_back(an.reduced.kept_indices[i]);
      orientation.push_back(an.arrangement.orientation[i]);
    }
    hyperplanes.push_back(
        {{"normal", strings(an.arrangement.normals[h])}, {"coordinates", one_based(members)}, {"orientation", orientation}});
  }
  r["hyperplanes"] = hyperplanes;

  json cells = json::array();
  for (const auto& c : an.cells) cells.push_back({{"signs", sign_list(c.signs)}, {"witness", strings(c.witness)}});
  r["cells"] = cells;

  const bool ambient = an.profile.zero_set_empty();
  auto pair_json = [&](std::size_t s) {
    Report p;
    p["reduced"] = sign_list(an.norming.representatives[s]);
    if (ambient) p["ambient"] = strings(ambient_sign_vector(an.norming.representatives[s], an.reduced));
    p["cell"] = an.norming.cell_index[s];
    return p;
  };
  json pairs = json::array();
  for (std::size_t s = 0; s < an.norming.size(); ++s) pairs.push_back(pair_json(s));
  json basis_pairs = json::array();
  for (auto s : an.norming.basis_indices) basis_pairs.push_back(pair_json(s));

  r["norming_set"] = pairs;
  r["span_basis"] = basis_pairs;
  r["q"] = an.norming.span_dim;
  r["rationale"] = json::array({"arrangement-sign-cells", "minimal-norming-set"});
  if (!ambient) r["rationale"].insert(r["rationale"].begin(), "sigma-reduction");
  return r;
}

Report solve_report(const ProblemFile& problem, const RunOptions& options) {
  require_targets(problem);
  const auto basis = problem.subspace();
  const auto an = analyze_norming(basis);
  const std::size_t trials = options.trials.value_or(kDefaultTrials);
  const std::uint64_t seed = options.seed.value_or(kDefaultSeed);

  Report r = header("solve");
  r["n"] = basis.ambient_dim();
  r["m"] = basis.dim();
  r["zero_set"] = one_based(an.profile.zero_set);
  json results = json::array();
  for (const auto& target : problem.targets) {
    const auto outcome = solve_general(basis, an, target.vector);
    Report t;
    t["name"] = target.name;
    t["target"] = strings(target.vector);
    t["outcome"] = to_string(outcome.kind);
    if (outcome.coefficients) t["coefficients"] = strings(*outcome.coefficients);
    if (outcome.witness) t["witness"] = strings(*outcome.witness);
    if (outcome.vector) t["vector"] = strings(*outcome.vector);
    if (outcome.system_rows.rows() > 0) {
      t["system"] = {{"rows", matrix_rows(outcome.system_rows)}, {"rhs", strings(outcome.system_rhs)}};
      t["slack"] = to_string(outcome.slack);
    }
    if (outcome.min_residual) t["min_residual"] = to_string(*outcome.min_residual);
    if (outcome.kind == OutcomeKind::Polytope) {
      json constraints = json::array();
      for (const auto& c : outcome.constraints())
        constraints.push_back({{"row", strings(c.row)}, {"rhs", to_string(c.rhs)}, {"slack", to_string(c.slack)}});
      t["constraints"] = constraints;
    }
    if (const auto* alpha = outcome.chosen()) {
      const auto projection = projection_map(basis, target.vector, outcome);
      t["projection"] = {{"image_of_target", strings(projection.image_of_target())}, {"fixes", "Y"}};
      t["oracle"] = verdict_json(verify_best_coapprox(basis, target.vector, *alpha, trials, seed));
    } else if (basis.dim() <= kMaxBruteForceDim) {
      // Independent corroboration of non-existence on a finite grid.
      const Rational radius = options.grid_radius.value_or(kDefaultGridRadius);
      const Rational step = options.grid_step.value_or(kDefaultGridStep);
      const auto scan = brute_force_existence(basis, target.vector, radius, step);
      json passing = json::array();
      for (const auto& alpha : scan.passing) passing.push_back(strings(alpha));
      t["brute_force"] = {{"grid_radius", to_string(radius)},
                          {"grid_step", to_string(step)},
                          {"candidates_scanned", scan.candidates_scanned},
                          {"passing", passing},
                          {"corroborated", !scan.exists}};
    }
    t["rationale"] = outcome.rationale;
    results.push_back(t);
  }
  r["targets"] = results;
  return r;
}

Report classify_report(const ProblemFile& problem) {
  const auto basis = problem.subspace();
  const auto report = classify(basis);
  Report r = header("classify");
  r["n"] = basis.ambient_dim();
  r["coproximinal"] = report.coproximinal;
  r["co_chebyshev"] = report.co_chebyshev;
  r["m"] = report.m;
  r["q"] = report.q;
  r["d"] = report.d;
  r["zero_set_size"] = report.zero_set_size;
  r["rationale"] = report.rationale;
  return r;
}

Report threshold_report(const ProblemFile& problem) {
  const auto basis = problem.subspace();
  const auto profile = build_profile(basis);
  if (profile.zero_set_empty())
    throw EmptyZeroSetError("threshold: the basis has an empty zero set; the threshold is undefined");
  require_targets(problem);
  const auto an = analyze_norming(basis);

  Report r = header("threshold");
  r["n"] = basis.ambient_dim();
  r["m"] = basis.dim();
  r["zero_set"] = one_based(an.profile.zero_set);
  json results = json::array();
  for (const auto& target : problem.targets) {
    const auto th = existence_threshold(basis, an, target.vector);
    results.push_back({{"name", target.name},
                       {"delta0", to_string(th.delta0)},
                       {"minimizing_alpha", strings(th.minimizing_alpha)},
                       {"rho_norm", to_string(th.rho_norm)},
                       {"bound_holds", th.delta0 <= th.rho_norm}});
  }
  r["targets"] = results;
  r["rationale"] = json::array({"sigma-reduction", "existence-threshold"});
  return r;
}

}  // namespace coapprox
