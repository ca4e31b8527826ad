#include "hbim/special_functions.hpp"

#include <array>
#include <cmath>
#include <numbers>

#include "hbim/errors.hpp"

namespace hbim::special {
namespace {

constexpr double kInvSqrtPi = 0.56418958354775628695;
constexpr double kSmallThreshold = 0.46875;
constexpr double kTiny = 1.11e-16;    // below this erf(x) ~ 2x/sqrt(pi)
constexpr double kErfcZero = 26.543;  // erfc underflows beyond this

// erf on |x| <= 0.46875
constexpr std::array<double, 5> kA = {3.1611237438705656,   113.864154151050156,
                                      377.485237685302021,  3209.37758913846947,
                                      0.185777706184603153};
constexpr std::array<double, 4> kB = {23.6012909523441209, 244.024637934444173,
                                      1282.61652607737228, 2844.23683343917062};
// erfcx on 0.46875 < x <= 4
constexpr std::array<double, 9> kC = {0.564188496988670089, 8.88314979438837594,
                                      66.1191906371416295,  298.635138197400131,
                                      881.95222124176909,   1712.04761263407058,
                                      2051.07837782607147,  1230.33935479799725,
                                      2.15311535474403846e-8};
constexpr std::array<double, 8> kD = {15.7449261107098347, 117.693950891312499,
                                      537.181101862009858, 1621.38957456669019,
                                      3290.79923573345963, 4362.61909014324716,
                                      3439.36767414372164, 1230.33935480374942};
// erfcx on x > 4, in powers of 1/x^2
constexpr std::array<double, 6> kP = {0.305326634961232344, 0.360344899949804439,
                                      0.125781726111229246, 0.0160837851487422766,
                                      6.58749161529837803e-4, 0.0163153871373020978};
constexpr std::array<double, 5> kQ = {2.56852019228982242, 1.87295284992346047,
                                      0.527905102951428412, 0.0605183413124413191,
                                      0.00233520497626869185};

void require_finite(double x, const char* name) {
  if (!std::isfinite(x)) throw DomainError(std::string(name) + ": non-finite argument");
}

// erf(x) for |x| <= kSmallThreshold.
double erf_small(double x) {
  const double y = std::fabs(x);
  const double ysq = y > kTiny ? y * y : 0.0;
  double num = kA[4] * ysq;
  double den = ysq;
  for (int i = 0; i < 3; ++i) {
    num = (num + kA[i]) * ysq;
    den = (den + kB[i]) * ysq;
  }
  return x * (num + kA[3]) / (den + kB[3]);
}

// exp(y^2) erfc(y) for y > kSmallThreshold.
double erfcx_large(double y) {
  if (y <= 4.0) {
    double num = kC[8] * y;
    double den = y;
    for (int i = 0; i < 7; ++i) {
      num = (num + kC[i]) * y;
      den = (den + kD[i]) * y;
    }
    return (num + kC[7]) / (den + kD[7]);
  }
  const double ysq = 1.0 / (y * y);
  double num = kP[5] * ysq;
  double den = ysq;
  for (int i = 0; i < 4; ++i) {
    num = (num + kP[i]) * ysq;
    den = (den + kQ[i]) * ysq;
  }
  const double r = ysq * (num + kP[4]) / (den + kQ[4]);
  return (kInvSqrtPi - r) / y;
}

// exp(-y^2) split so the large square is formed exactly.
double exp_neg_square(double y) {
  const double head = std::trunc(y * 16.0) / 16.0;
  const double tail = (y - head) * (y + head);
  return std::exp(-head * head) * std::exp(-tail);
}

// erfc(y) for y > kSmallThreshold.
double erfc_large(double y) {
  if (y >= kErfcZero) return 0.0;
  return exp_neg_square(y) * erfcx_large(y);
}

}  // namespace

double erf(double x) {
  require_finite(x, "erf");
  const double y = std::fabs(x);
  if (y <= kSmallThreshold) return erf_small(x);
  const double r = 1.0 - erfc_large(y);
  return x < 0.0 ? -r : r;
}

double erfc(double x) {
  require_finite(x, "erfc");
  const double y = std::fabs(x);
  if (y <= kSmallThreshold) return 1.0 - erf_small(x);
  const double r = erfc_large(y);
  return x < 0.0 ? 2.0 - r : r;
}

double erfcx(double x) {
  require_finite(x, "erfcx");
  if (x < 0.0) throw DomainError("erfcx: negative argument");
  if (x <= kSmallThreshold) return std::exp(x * x) * (1.0 - erf_small(x));
  return erfcx_large(x);
}

double ierfc(double x) {
  require_finite(x, "ierfc");
  if (x < 0.0) throw DomainError("ierfc: negative argument");
  if (x <= kSmallThreshold) {
    return std::exp(-x * x) * kInvSqrtPi - x * (1.0 - erf_small(x));
  }
  if (x >= kErfcZero) return 0.0;
  // Factor out exp(-x^2) so the bracket differences two O(1) quantities.
  const double bracket = kInvSqrtPi - x * erfcx_large(x);
  return bracket > 0.0 ? exp_neg_square(x) * bracket : 0.0;
}

}  // namespace hbim::special
