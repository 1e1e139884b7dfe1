// coapprox: best coapproximation in l1^n from the command line.
//
//   coapprox <analyze|norming-set|solve|classify|threshold> --input <path>
//            [--trials N] [--seed S] [--grid-radius R] [--grid-step T] [--output <path>]
//
// Exit codes: 0 success, 2 validation, 3 capacity, 4 precondition, 1 other.

#include "coapprox/errors.hpp"
#include "coapprox/problem_io.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace {

enum ExitCode { kOk = 0, kOther = 1, kValidation = 2, kCapacity = 3, kPrecondition = 4 };

coapprox::Report run(const std::string& command, const coapprox::ProblemFile& problem,
                     const coapprox::RunOptions& options) {
  if (command == "analyze") return coapprox::analyze_report(problem);
  if (command == "norming-set") return coapprox::norming_set_report(problem);
  if (command == "solve") return coapprox::solve_report(problem, options);
  if (command == "classify") return coapprox::classify_report(problem);
  return coapprox::threshold_report(problem);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Best coapproximation in l1^n with exact rational arithmetic"};
  app.require_subcommand(1);

  std::string input;
  std::string output;
  std::optional<std::size_t> trials;
  std::optional<std::uint64_t> seed;
  std::string grid_radius;
  std::string grid_step;

  for (const char* name : {"analyze", "norming-set", "solve", "classify", "threshold"}) {
    auto* sub = app.add_subcommand(name);
    sub->add_option("--input", input, "problem file (JSON)")->required();
    sub->add_option("--output", output, "write the report here instead of stdout");
    sub->add_option("--trials", trials, "random directions for the oracle");
    sub->add_option("--seed", seed, "seed for the oracle's random directions");
    sub->add_option("--grid-radius", grid_radius, "brute-force grid radius (rational)");
    sub->add_option("--grid-step", grid_step, "brute-force grid step (rational)");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kValidation;
  }
  const std::string command = app.get_subcommands().front()->get_name();

  try {
    coapprox::RunOptions cli;
    cli.trials = trials;
    cli.seed = seed;
    if (!grid_radius.empty()) cli.grid_radius = coapprox::parse_rational(grid_radius);
    if (!grid_step.empty()) cli.grid_step = coapprox::parse_rational(grid_step);

    const auto problem = coapprox::load_problem(input);
    const auto report = run(command, problem, coapprox::merge_options(problem.options, cli));
    const std::string text = report.dump(2) + "\n";
    if (output.empty()) {
      std::cout << text;
    } else {
      std::ofstream out(output);
      if (!out) {
        std::cerr << "error: cannot write " << output << "\n";
        return kOther;
      }
      out << text;
    }
    return kOk;
  } catch (const coapprox::ValidationError& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return kValidation;
  } catch (const std::invalid_argument& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return kValidation;
  } catch (const coapprox::CapacityExceeded& e) {
    std::cerr << "capacity exceeded: " << e.what() << "\n";
    return kCapacity;
  } catch (const coapprox::PreconditionError& e) {
    std::cerr << "precondition failed: " << e.what() << "\n";
    return kPrecondition;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kOther;
  }
}
