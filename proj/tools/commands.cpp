#include "commands.hpp"

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <ostream>
#include <sstream>
#include <string_view>

#include "CLI11.hpp"
#include "hbim/calibration.hpp"
#include "hbim/entropy.hpp"
#include "hbim/error_metrics.hpp"
#include "hbim/errors.hpp"
#include "hbim/exact_solution.hpp"
#include "hbim/io.hpp"
#include "hbim/profile.hpp"

namespace hbim::cli {

namespace {

using io::format_number;
using nlohmann::json;

constexpr const char* kPrecisionVar = "HBIM_EGM_PRECISION";

int precision_from_env() {
  const char* raw = std::getenv(kPrecisionVar);
  if (raw == nullptr || *raw == '\0') return io::kDefaultPrecision;
  const std::string_view text(raw);
  int value = 0;
  const auto res = std::from_chars(text.data(), text.data() + text.size(), value);
  if (res.ec != std::errc() || res.ptr != text.data() + text.size() || value < 6 || value > 17) {
    throw DomainError(std::string(kPrecisionVar) + " must be an integer in [6, 17], got '" +
                      std::string(text) + "'");
  }
  return value;
}

double exponent_of(const RunConfig& cfg, const ProblemSpec& spec) {
  const double n = cfg.n.value_or(egm_exponent(spec.kind));
  require_valid_exponent(n);
  return n;
}

// Every input echoed as `# key=value`, in a fixed order.
void write_metadata(io::CsvWriter& csv, const RunConfig& cfg, const ProblemSpec& spec) {
  const int p = cfg.precision;
  csv.comment("hbim_egm " + cfg.subcommand);
  csv.comment("kind=" + std::string(to_string(spec.kind)));
  csv.comment("t_inf=" + format_number(spec.ambient_temperature, p));
  if (spec.kind == ProblemKind::PrescribedTemperature) {
    csv.comment("t_s=" + format_number(spec.surface_temperature, p));
  } else {
    csv.comment("flux=" + format_number(spec.surface_flux, p));
  }
  csv.comment("lambda=" + format_number(spec.conductivity, p));
  csv.comment("alpha=" + format_number(spec.diffusivity, p));
  if (cfg.subcommand == "sweep") {
    csv.comment("n_min=" + format_number(cfg.n_min, p));
    csv.comment("n_max=" + format_number(cfg.n_max, p));
    csv.comment("steps=" + std::to_string(cfg.steps));
    csv.comment("t=" + format_number(cfg.times.front(), p));
  } else {
    csv.comment("n=" + format_number(exponent_of(cfg, spec), p) +
                (cfg.n ? " (user)" : " (calibrated)"));
    std::string times;
    for (double t : cfg.times) times += (times.empty() ? "" : ";") + format_number(t, p);
    csv.comment("t=" + times);
    csv.comment("grid=" + std::to_string(cfg.grid));
    csv.comment("x_max=" + (cfg.x_max ? format_number(*cfg.x_max, p) : std::string("delta(t)")));
  }
  if (cfg.subcommand == "errors") csv.comment("domain=" + cfg.domain);
  if (cfg.subcommand == "teg-field") csv.comment("source=" + cfg.source);
  csv.comment("precision=" + std::to_string(p));
}

json metadata_json(const RunConfig& cfg, const ProblemSpec& spec) {
  json j = io::to_json(spec);
  j["command"] = cfg.subcommand;
  j["t"] = cfg.times;
  if (cfg.n) j["n"] = *cfg.n;
  if (cfg.subcommand == "errors") {
    j["grid"] = cfg.grid;
    j["domain"] = cfg.domain;
  }
  j["precision"] = cfg.precision;
  return j;
}

// Rounds every float in place so JSON shows the same digits as CSV.
void round_numbers(json& j, int precision) {
  if (j.is_number_float()) {
    const double v = j.get<double>();
    if (std::isfinite(v)) j = std::stod(format_number(v, precision));
    return;
  }
  if (j.is_structured()) {
    for (auto& item : j) round_numbers(item, precision);
  }
}

void emit_json(std::ostream& out, json j, int precision) {
  round_numbers(j, precision);
  out << j.dump(2) << '\n';
}

std::vector<double> grid_for(const RunConfig& cfg, const HbimProfile& profile, double t) {
  const double x_max = cfg.x_max.value_or(profile.penetration_depth(t));
  return io::uniform_grid(x_max, cfg.grid);
}

void require_format(const RunConfig& cfg, std::string_view only) {
  if (!cfg.format.empty() && cfg.format != only) {
    throw DomainError(cfg.subcommand + " only writes " + std::string(only));
  }
}

void cmd_calibrate(const RunConfig& cfg, std::ostream& out) {
  require_format(cfg, "json");
  const ProblemSpec spec = cfg.spec();
  const CalibrationResult closed = calibrate_closed_form(spec.kind);
  const CalibrationResult root = calibrate_root_find(spec, cfg.times.front());
  const MatchReport match = spec.kind == ProblemKind::PrescribedTemperature
                                ? flux_match_check(spec, root)
                                : surface_temp_match_check(spec, root);
  json j;
  j["parameters"] = metadata_json(cfg, spec);
  j["closed_form"] = io::to_json(closed);
  j["root_find"] = io::to_json(root);
  j["n_star_difference"] = std::fabs(closed.n_star - root.n_star);
  j[spec.kind == ProblemKind::PrescribedTemperature ? "flux_match" : "surface_temp_match"] =
      io::to_json(match);
  emit_json(out, std::move(j), cfg.precision);
}

void cmd_profile(const RunConfig& cfg, std::ostream& out) {
  require_format(cfg, "csv");
  const ProblemSpec spec = cfg.spec();
  const double n = exponent_of(cfg, spec);
  const HbimProfile profile(spec, n);
  const ExactSolution exact(spec);
  const bool many = cfg.times.size() > 1;

  io::CsvWriter csv(out, cfg.precision);
  write_metadata(csv, cfg, spec);
  std::vector<std::string_view> cols = {"x", "eta", "T_exact", "T_approx", "theta_exact",
                                        "theta_approx"};
  if (many) cols.insert(cols.begin(), "t");
  csv.header(cols);
  for (double t : cfg.times) {
    const double root_at = std::sqrt(spec.diffusivity * t);
    for (double x : grid_for(cfg, profile, t)) {
      std::vector<double> row = {x,
                                 x / root_at,
                                 exact.temperature(x, t),
                                 profile.temperature(x, t),
                                 theta_exact(spec, x, t),
                                 theta_approx(spec, n, x, t)};
      if (many) row.insert(row.begin(), t);
      csv.row(row);
    }
  }
}

void cmd_entropy(const RunConfig& cfg, std::ostream& out) {
  require_format(cfg, "csv");
  const ProblemSpec spec = cfg.spec();
  const double n = exponent_of(cfg, spec);
  const HbimProfile profile(spec, n);
  const bool many = cfg.times.size() > 1;

  io::CsvWriter csv(out, cfg.precision);
  write_metadata(csv, cfg, spec);
  std::vector<std::string_view> cols = {"x",           "eta",         "sigma_approx",
                                        "sigma_exact", "delta_sigma", "w_lost_exact"};
  if (many) cols.insert(cols.begin(), "t");
  csv.header(cols);
  for (double t : cfg.times) {
    const auto grid = grid_for(cfg, profile, t);
    const EntropyField approx = teg_profile(spec, TegSource::approximate(n), t, grid);
    const EntropyField exact = teg_profile(spec, TegSource::exact(), t, grid);
    const double root_at = std::sqrt(spec.diffusivity * t);
    for (std::size_t i = 0; i < grid.size(); ++i) {
      std::vector<double> row = {grid[i],
                                 grid[i] / root_at,
                                 approx.sigma[i],
                                 exact.sigma[i],
                                 approx.sigma[i] - exact.sigma[i],
                                 lost_work(spec.ambient_temperature, exact.sigma[i])};
      if (many) row.insert(row.begin(), t);
      csv.row(row);
    }
  }
}

void cmd_sweep(const RunConfig& cfg, std::ostream& out) {
  require_format(cfg, "csv");
  if (cfg.steps < 2) throw DomainError("sweep needs at least 2 steps");
  if (!(cfg.n_min > 1.0 && cfg.n_max <= kMaxExponent && cfg.n_min < cfg.n_max)) {
    throw DomainError("sweep range must satisfy 1 < n_min < n_max <= 20");
  }
  const ProblemSpec spec = cfg.spec();
  const double t = cfg.times.front();

  io::CsvWriter csv(out, cfg.precision);
  write_metadata(csv, cfg, spec);
  constexpr std::string_view cols[] = {"n", "delta_coeff", "delta_sigma_surface_normalized",
                                       "avg_error_layer", "langford"};
  csv.header(cols);
  for (int i = 0; i < cfg.steps; ++i) {
    const double n = i + 1 == cfg.steps
                         ? cfg.n_max
                         : cfg.n_min + (cfg.n_max - cfg.n_min) * i / (cfg.steps - 1);
    double langford = std::numeric_limits<double>::infinity();
    try {
      langford = langford_residual(spec, n, t);
    } catch (const DivergenceError&) {
    }
    const double row[] = {n, hbi_delta_coefficient(spec.kind, n),
                          normalized_delta_sigma_surface(spec, n, t),
                          average_error(spec, n, t, ErrorDomain::Layer), langford};
    csv.row(row);
  }
}

ErrorReport report_for(const ProblemSpec& spec, double n, double t, ErrorDomain domain,
                       int grid) {
  try {
    return error_report(spec, n, t, domain, grid);
  } catch (const DivergenceError&) {
    ErrorReport r;
    r.kind = spec.kind;
    r.n = n;
    r.t = t;
    r.integration_domain = domain;
    r.domain_extent = domain_extent(spec, n, t, domain);
    r.avg_error = average_error(spec, n, t, domain);
    const double limit =
        std::min(r.domain_extent, kTruncationEta * std::sqrt(spec.diffusivity * t));
    r.max_abs_error = max_abs_error(spec, n, t, io::uniform_grid(limit, grid));
    r.langford = std::numeric_limits<double>::infinity();
    return r;
  }
}

void cmd_errors(const RunConfig& cfg, std::ostream& out) {
  const ProblemSpec spec = cfg.spec();
  const double n = exponent_of(cfg, spec);
  const ErrorDomain domain = cfg.domain == "extended" ? ErrorDomain::Extended : ErrorDomain::Layer;
  std::vector<ErrorReport> reports;
  for (double t : cfg.times) reports.push_back(report_for(spec, n, t, domain, cfg.grid));

  if (cfg.format == "csv") {
    io::CsvWriter csv(out, cfg.precision);
    write_metadata(csv, cfg, spec);
    constexpr std::string_view cols[] = {"t", "avg_error", "max_abs_error", "langford",
                                         "domain_extent"};
    csv.header(cols);
    for (const ErrorReport& r : reports) {
      const double row[] = {r.t, r.avg_error, r.max_abs_error, r.langford, r.domain_extent};
      csv.row(row);
    }
    return;
  }
  json j;
  j["parameters"] = metadata_json(cfg, spec);
  j["reports"] = json::array();
  for (const ErrorReport& r : reports) {
    json item = io::to_json(r);
    // JSON has no infinity.
    if (std::isinf(r.langford)) item["langford"] = "divergent";
    j["reports"].push_back(std::move(item));
  }
  emit_json(out, std::move(j), cfg.precision);
}

void cmd_teg_field(const RunConfig& cfg, std::ostream& out) {
  require_format(cfg, "csv");
  const ProblemSpec spec = cfg.spec();
  const double n = exponent_of(cfg, spec);
  const double t = cfg.times.front();
  const TegSource source = cfg.source == "approximate" ? TegSource::approximate(n)
                                                       : TegSource::exact();
  const auto grid = grid_for(cfg, HbimProfile(spec, n), t);
  io::CsvWriter csv(out, cfg.precision);
  write_metadata(csv, cfg, spec);
  io::write_entropy_field_csv(out, teg_profile(spec, source, t, grid), spec, cfg.precision);
}

void cmd_gnuplot(const RunConfig& cfg, std::ostream& out) {
  out << "# gnuplot script for " << cfg.plot << " output of hbim_egm\n"
      << "set datafile separator ','\n"
      << "set datafile commentschars '#'\n"
      << "set key autotitle columnhead\n"
      << "set grid\n";
  const std::string in = "'" + cfg.input + "'";
  if (cfg.plot == "profile") {
    out << "set xlabel 'eta = x / sqrt(alpha t)'\nset ylabel 'theta'\n"
        << "plot " << in << " using 'eta':'theta_exact' with lines title 'exact', \\\n"
        << "     " << in << " using 'eta':'theta_approx' with lines title 'profile'\n";
  } else if (cfg.plot == "entropy") {
    out << "set xlabel 'eta = x / sqrt(alpha t)'\nset ylabel 'sigma [W/(m^3 K)]'\n"
        << "plot " << in << " using 'eta':'sigma_exact' with lines title 'exact', \\\n"
        << "     " << in << " using 'eta':'sigma_approx' with lines title 'profile'\n";
  } else {
    out << "set xlabel 'n'\nset ylabel 'normalized surface mismatch'\n"
        << "set xzeroaxis\n"
        << "plot " << in
        << " using 'n':'delta_sigma_surface_normalized' with linespoints title 'delta sigma'\n";
  }
}

void add_spec_options(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--kind", cfg.kind, "Problem kind")
      ->check(CLI::IsMember({"pt", "pf", "PT", "PF"}))
      ->capture_default_str();
  sub->add_option("--t-inf", cfg.t_inf, "Initial and far-field temperature, K")
      ->capture_default_str();
  sub->add_option("--t-s", cfg.t_s, "Surface temperature (pt), K")->capture_default_str();
  sub->add_option("--flux", cfg.flux, "Surface heat flux into the solid (pf), W/m^2")
      ->capture_default_str();
  sub->add_option("--lambda", cfg.lambda, "Thermal conductivity, W/(m K)")
      ->capture_default_str();
  sub->add_option("--alpha", cfg.alpha, "Thermal diffusivity, m^2/s")->capture_default_str();
  sub->add_option("--t", cfg.times, "Time(s), s; comma separated or repeated")
      ->delimiter(',')
      ->capture_default_str();
  sub->add_option("-o,--output", cfg.output, "Write data here instead of stdout");
}

void add_field_options(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--n", cfg.n, "Profile exponent (default: calibrated optimum)");
  sub->add_option("--grid", cfg.grid, "Number of grid points")->capture_default_str();
  sub->add_option("--x-max", cfg.x_max, "Grid extent, m (default: delta(t))");
}

void add_format_option(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
}

}  // namespace

ProblemSpec RunConfig::spec() const {
  ProblemSpec s = parse_problem_kind(kind) == ProblemKind::PrescribedTemperature
                      ? ProblemSpec::prescribed_temperature(t_inf, t_s, lambda, alpha)
                      : ProblemSpec::prescribed_flux(t_inf, flux, lambda, alpha);
  s.validate();
  for (double t : times) {
    if (!(t > 0.0) || !std::isfinite(t)) throw DomainError("times must be positive and finite");
  }
  if (times.empty()) throw DomainError("at least one time is required");
  return s;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Heat-balance integral profiles calibrated by surface entropy generation"};
  app.name("hbim_egm");
  app.require_subcommand(1);

  auto* calibrate = app.add_subcommand("calibrate", "Optimal exponent by both methods (JSON)");
  add_spec_options(calibrate, cfg);
  add_format_option(calibrate, cfg);

  auto* profile = app.add_subcommand("profile", "Exact and approximate temperature (CSV)");
  add_spec_options(profile, cfg);
  add_field_options(profile, cfg);
  add_format_option(profile, cfg);

  auto* entropy = app.add_subcommand("entropy", "Local entropy generation of both fields (CSV)");
  add_spec_options(entropy, cfg);
  add_field_options(entropy, cfg);
  add_format_option(entropy, cfg);

  auto* sweep = app.add_subcommand("sweep", "Surface mismatch and errors against n (CSV)");
  add_spec_options(sweep, cfg);
  add_format_option(sweep, cfg);
  sweep->add_option("--n-min", cfg.n_min, "First exponent")->capture_default_str();
  sweep->add_option("--n-max", cfg.n_max, "Last exponent")->capture_default_str();
  sweep->add_option("--steps", cfg.steps, "Number of exponents")->capture_default_str();

  auto* errors = app.add_subcommand("errors", "Error metrics per time (JSON or CSV)");
  add_spec_options(errors, cfg);
  add_field_options(errors, cfg);
  add_format_option(errors, cfg);
  errors->add_option("--domain", cfg.domain, "Averaging domain")
      ->check(CLI::IsMember({"layer", "extended"}))
      ->capture_default_str();

  auto* field = app.add_subcommand("teg-field", "Entropy field of one source (CSV)");
  add_spec_options(field, cfg);
  add_field_options(field, cfg);
  add_format_option(field, cfg);
  field->add_option("--source", cfg.source, "Temperature field")
      ->check(CLI::IsMember({"exact", "approximate"}))
      ->capture_default_str();

  auto* gnuplot = app.add_subcommand("gnuplot-script", "Plotting script for a CSV output");
  gnuplot->add_option("--plot", cfg.plot, "Which table the CSV holds")
      ->check(CLI::IsMember({"profile", "entropy", "sweep"}))
      ->capture_default_str();
  gnuplot->add_option("--input", cfg.input, "CSV file the script reads")->capture_default_str();
  gnuplot->add_option("-o,--output", cfg.output, "Write the script here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }
  cfg.subcommand = app.get_subcommands().front()->get_name();

  std::ostringstream buffer;
  try {
    cfg.precision = precision_from_env();
    if (cfg.subcommand == "calibrate") cmd_calibrate(cfg, buffer);
    else if (cfg.subcommand == "profile") cmd_profile(cfg, buffer);
    else if (cfg.subcommand == "entropy") cmd_entropy(cfg, buffer);
    else if (cfg.subcommand == "sweep") cmd_sweep(cfg, buffer);
    else if (cfg.subcommand == "errors") cmd_errors(cfg, buffer);
    else if (cfg.subcommand == "teg-field") cmd_teg_field(cfg, buffer);
    else cmd_gnuplot(cfg, buffer);
  } catch (const PositivityError& e) {
    err << "hbim_egm: " << e.what() << '\n';
    return kPositivity;
  } catch (const CalibrationError& e) {
    err << "hbim_egm: calibration failed: " << e.what() << '\n';
    return kCalibration;
  } catch (const DomainError& e) {
    err << "hbim_egm: " << e.what() << '\n' << app.get_subcommands().front()->help();
    return kUsage;
  } catch (const NumericError& e) {
    err << "hbim_egm: " << e.what() << '\n';
    return kNumeric;
  }

  if (cfg.output.empty()) {
    out << buffer.str();
    return kOk;
  }
  std::ofstream file(cfg.output, std::ios::binary);
  file << buffer.str();
  if (!file) {
    err << "hbim_egm: cannot write " << cfg.output << '\n';
    return kUsage;
  }
  return kOk;
}

}  // namespace hbim::cli
