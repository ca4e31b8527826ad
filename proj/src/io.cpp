#include "hbim/io.hpp"

#include <charconv>
#include <cmath>
#include <ostream>
#include <system_error>

#include "hbim/errors.hpp"

namespace hbim::io {

std::string format_number(double value, int significant) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  if (value == 0.0) value = 0.0;  // drop the sign of -0
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), value, std::chars_format::general,
                                 significant);
  if (res.ec != std::errc()) throw NumericError("format_number: buffer too small");
  return std::string(buf, res.ptr);
}

CsvWriter::CsvWriter(std::ostream& out, int precision) : out_(out), precision_(precision) {}

void CsvWriter::comment(std::string_view text) { out_ << "# " << text << '\n'; }

void CsvWriter::header(std::span<const std::string_view> columns) {
  for (std::size_t i = 0; i < columns.size(); ++i) out_ << (i ? "," : "") << columns[i];
  out_ << '\n';
}

void CsvWriter::row(std::span<const double> values) { row(values, {}); }

void CsvWriter::row(std::span<const double> values, std::span<const std::string_view> text) {
  bool first = true;
  for (double v : values) {
    out_ << (first ? "" : ",") << format_number(v, precision_);
    first = false;
  }
  for (std::string_view s : text) {
    out_ << (first ? "" : ",") << s;
    first = false;
  }
  out_ << '\n';
}

nlohmann::json to_json(const ProblemSpec& spec) {
  nlohmann::json j;
  j["kind"] = std::string(to_string(spec.kind));
  j["t_inf"] = spec.ambient_temperature;
  if (spec.kind == ProblemKind::PrescribedTemperature) {
    j["t_s"] = spec.surface_temperature;
  } else {
    j["flux"] = spec.surface_flux;
  }
  j["lambda"] = spec.conductivity;
  j["alpha"] = spec.diffusivity;
  return j;
}

nlohmann::json to_json(const CalibrationResult& result) {
  return {{"kind", std::string(to_string(result.kind))},
          {"n_star", result.n_star},
          {"delta_coeff", result.delta_coeff},
          {"method", std::string(to_string(result.method))},
          {"residual", result.residual}};
}

nlohmann::json to_json(const ErrorReport& report) {
  return {{"kind", std::string(to_string(report.kind))},
          {"n", report.n},
          {"t", report.t},
          {"avg_error", report.avg_error},
          {"max_abs_error", report.max_abs_error},
          {"langford", report.langford},
          {"integration_domain", std::string(to_string(report.integration_domain))},
          {"domain_extent", report.domain_extent}};
}

nlohmann::json to_json(const MatchReport& report) {
  nlohmann::json samples = nlohmann::json::array();
  for (const MatchSample& s : report.samples) {
    samples.push_back({{"t", s.t},
                       {"approx", s.approx},
                       {"exact", s.exact},
                       {"relative_difference", s.relative_difference}});
  }
  return {{"passed", report.passed},
          {"tolerance", report.tolerance},
          {"max_relative_difference", report.max_relative_difference},
          {"samples", samples}};
}

void write_entropy_field_csv(std::ostream& out, const EntropyField& field,
                             const ProblemSpec& spec, int precision) {
  CsvWriter csv(out, precision);
  constexpr std::string_view cols[] = {"x", "eta", "sigma", "source"};
  csv.header(cols);
  const double root_at = std::sqrt(spec.diffusivity * field.t);
  const std::string_view source[] = {to_string(field.source)};
  for (std::size_t i = 0; i < field.grid.size(); ++i) {
    const double values[] = {field.grid[i], field.grid[i] / root_at, field.sigma[i]};
    csv.row(values, source);
  }
}

void write_error_grid_csv(std::ostream& out, const ProblemSpec& spec, double n, double t,
                          std::span<const double> grid, int precision) {
  CsvWriter csv(out, precision);
  constexpr std::string_view cols[] = {"x", "eta", "theta_exact", "theta_approx", "diff"};
  csv.header(cols);
  const double root_at = std::sqrt(spec.diffusivity * t);
  for (double x : grid) {
    const double te = theta_exact(spec, x, t);
    const double ta = theta_approx(spec, n, x, t);
    const double values[] = {x, x / root_at, te, ta, te - ta};
    csv.row(values);
  }
}

std::vector<double> uniform_grid(double x_max, int points) {
  if (points < 2) throw DomainError("grid needs at least 2 points");
  if (!(x_max > 0.0) || !std::isfinite(x_max)) throw DomainError("grid extent must be > 0");
  std::vector<double> grid(static_cast<std::size_t>(points));
  for (int i = 0; i < points; ++i) grid[i] = x_max * i / (points - 1);
  grid.back() = x_max;
  return grid;
}

}  // namespace hbim::io
