#include "hbim/problem.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "hbim/errors.hpp"

namespace hbim {

PositivityError::PositivityError(double x, double t, double temperature)
    : std::runtime_error([&] {
        std::ostringstream os;
        os.precision(17);
        os << "non-positive absolute temperature " << temperature << " K at x=" << x
           << " m, t=" << t << " s";
        return os.str();
      }()),
      x_(x),
      t_(t),
      temperature_(temperature) {}

PositivityError::PositivityError(double temperature)
    : std::runtime_error("non-positive absolute temperature " + std::to_string(temperature) +
                         " K"),
      x_(std::numeric_limits<double>::quiet_NaN()),
      t_(std::numeric_limits<double>::quiet_NaN()),
      temperature_(temperature) {}

std::string_view to_string(ProblemKind kind) {
  switch (kind) {
    case ProblemKind::PrescribedTemperature:
      return "pt";
    case ProblemKind::PrescribedFlux:
      return "pf";
  }
  return "?";
}

std::optional<ProblemKind> parse_problem_kind(std::string_view text) {
  if (text == "pt" || text == "PT") return ProblemKind::PrescribedTemperature;
  if (text == "pf" || text == "PF") return ProblemKind::PrescribedFlux;
  return std::nullopt;
}

ProblemSpec ProblemSpec::prescribed_temperature(double ambient, double surface,
                                                double conductivity, double diffusivity) {
  ProblemSpec spec;
  spec.kind = ProblemKind::PrescribedTemperature;
  spec.ambient_temperature = ambient;
  spec.surface_temperature = surface;
  spec.conductivity = conductivity;
  spec.diffusivity = diffusivity;
  spec.validate();
  return spec;
}

ProblemSpec ProblemSpec::prescribed_flux(double ambient, double flux, double conductivity,
                                         double diffusivity) {
  ProblemSpec spec;
  spec.kind = ProblemKind::PrescribedFlux;
  spec.ambient_temperature = ambient;
  spec.surface_flux = flux;
  spec.conductivity = conductivity;
  spec.diffusivity = diffusivity;
  spec.validate();
  return spec;
}

void ProblemSpec::validate() const {
  auto require = [](bool ok, const char* what) {
    if (!ok) throw DomainError(what);
  };
  require(std::isfinite(ambient_temperature) && ambient_temperature > 0.0,
          "ambient temperature must be a positive absolute temperature");
  require(std::isfinite(conductivity) && conductivity > 0.0, "conductivity must be positive");
  require(std::isfinite(diffusivity) && diffusivity > 0.0, "diffusivity must be positive");
  if (kind == ProblemKind::PrescribedTemperature) {
    require(std::isfinite(surface_temperature) && surface_temperature > 0.0,
            "surface temperature must be a positive absolute temperature");
    require(surface_temperature != ambient_temperature,
            "surface temperature must differ from the ambient temperature");
  } else {
    require(std::isfinite(surface_flux) && surface_flux != 0.0, "surface flux must be non-zero");
  }
}

}  // namespace hbim
