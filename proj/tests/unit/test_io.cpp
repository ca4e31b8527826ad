#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <sstream>
#include <string>

#include "hbim/calibration.hpp"
#include "hbim/errors.hpp"
#include "hbim/io.hpp"

using namespace hbim;

TEST(FormatNumber, Basics) {
  EXPECT_EQ(io::format_number(1.5), "1.5");
  EXPECT_EQ(io::format_number(-0.0), "0");
  EXPECT_EQ(io::format_number(std::numeric_limits<double>::infinity()), "inf");
  EXPECT_EQ(io::format_number(-std::numeric_limits<double>::infinity()), "-inf");
  EXPECT_EQ(io::format_number(std::nan("")), "nan");
  EXPECT_EQ(io::format_number(1.0 / 3.0, 6), "0.333333");
  EXPECT_EQ(std::stod(io::format_number(0.1 + 0.2, 17)), 0.1 + 0.2);
}

TEST(CsvWriter, Layout) {
  std::ostringstream out;
  io::CsvWriter w(out, 6);
  w.comment("kind=pt");
  const std::string_view cols[] = {"a", "b", "tag"};
  w.header(cols);
  const double vals[] = {1.0, 2.5};
  const std::string_view text[] = {"exact"};
  w.row(vals, text);
  EXPECT_EQ(out.str(), "# kind=pt\na,b,tag\n1,2.5,exact\n");
}

TEST(UniformGrid, EndsExactly) {
  const auto g = io::uniform_grid(0.3, 7);
  ASSERT_EQ(g.size(), 7u);
  EXPECT_EQ(g.front(), 0.0);
  EXPECT_EQ(g.back(), 0.3);
  EXPECT_THROW(io::uniform_grid(1.0, 1), DomainError);
}

TEST(Json, SpecAndCalibration) {
  const auto spec = ProblemSpec::prescribed_flux(300.0, 1e4, 1.0, 1e-5);
  const auto j = io::to_json(spec);
  EXPECT_EQ(j.at("kind"), "pf");
  EXPECT_EQ(j.at("flux").get<double>(), 1e4);
  EXPECT_FALSE(j.contains("t_s"));

  const auto cal = calibrate_closed_form(ProblemKind::PrescribedTemperature);
  const auto c = io::to_json(cal);
  EXPECT_EQ(c.at("method"), "closed_form");
  EXPECT_EQ(c.at("n_star").get<double>(), cal.n_star);
}

TEST(Json, ErrorReportRoundTrip) {
  const auto spec = ProblemSpec::prescribed_temperature(300.0, 400.0, 1.0, 1e-5);
  const auto r = error_report(spec, 2.5, 10.0, ErrorDomain::Extended, 256);
  const auto j = io::to_json(r);
  EXPECT_EQ(j.at("integration_domain"), "extended");
  EXPECT_EQ(j.at("avg_error").get<double>(), r.avg_error);
  EXPECT_EQ(j.at("langford").get<double>(), r.langford);
}

TEST(ErrorGridCsv, DiffColumn) {
  const auto spec = ProblemSpec::prescribed_temperature(300.0, 400.0, 1.0, 1e-5);
  std::ostringstream out;
  const auto grid = io::uniform_grid(0.01, 3);
  io::write_error_grid_csv(out, spec, 2.0, 1.0, grid);
  std::istringstream in(out.str());
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "x,eta,theta_exact,theta_approx,diff");
  std::getline(in, line);
  EXPECT_EQ(line, "0,0,1,1,0");
}
