#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "hbim/problem.hpp"

namespace hbim::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,        ///< bad flags or invalid spec
  kCalibration = 2,  ///< root bracketing failed
  kPositivity = 3,   ///< a temperature dropped to or below 0 K
  kNumeric = 4,      ///< quadrature did not converge
};

struct RunConfig {
  std::string subcommand;
  std::string kind = "pt";
  double t_inf = 300.0;
  double t_s = 400.0;
  double flux = 1e4;
  double lambda = 1.0;
  double alpha = 1e-5;
  std::optional<double> n;
  std::vector<double> times = {100.0};
  int grid = 256;
  std::optional<double> x_max;
  std::string output;
  std::string format;  ///< empty means the subcommand default
  // sweep
  double n_min = 1.2;
  double n_max = 8.0;
  int steps = 100;
  // errors
  std::string domain = "layer";
  // teg-field
  std::string source = "exact";
  // gnuplot-script
  std::string plot = "profile";
  std::string input = "hbim.csv";
  int precision = 15;

  ProblemSpec spec() const;
};

/// Parses argv and runs one subcommand. Data goes to `out` (or the -o file),
/// diagnostics to `err`. Returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hbim::cli
