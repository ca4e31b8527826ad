#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "hbim/calibration.hpp"
#include "hbim/entropy.hpp"
#include "hbim/error_metrics.hpp"
#include "hbim/problem.hpp"

namespace hbim::io {

inline constexpr int kDefaultPrecision = 15;

/// Shortest general-format rendering with `significant` digits; locale independent.
/// Non-finite values print as inf, -inf or nan.
std::string format_number(double value, int significant = kDefaultPrecision);

/// Minimal CSV table writer: one header row, comma separated, `#` comment lines allowed
/// before the header.
class CsvWriter {
public:
  CsvWriter(std::ostream& out, int precision = kDefaultPrecision);

  void comment(std::string_view text);
  void header(std::span<const std::string_view> columns);
  void row(std::span<const double> values);
  /// Numeric cells followed by trailing text cells.
  void row(std::span<const double> values, std::span<const std::string_view> text);

private:
  std::ostream& out_;
  int precision_;
};

nlohmann::json to_json(const ProblemSpec& spec);
nlohmann::json to_json(const CalibrationResult& result);
nlohmann::json to_json(const ErrorReport& report);
nlohmann::json to_json(const MatchReport& report);

/// Columns: x, eta, sigma, source.
void write_entropy_field_csv(std::ostream& out, const EntropyField& field,
                             const ProblemSpec& spec, int precision = kDefaultPrecision);

/// Columns: x, eta, theta_exact, theta_approx, diff (diff = exact - approx).
void write_error_grid_csv(std::ostream& out, const ProblemSpec& spec, double n, double t,
                          std::span<const double> grid, int precision = kDefaultPrecision);

/// n uniformly spaced points on [0, x_max], the last one exactly x_max.
std::vector<double> uniform_grid(double x_max, int points);

}  // namespace hbim::io
