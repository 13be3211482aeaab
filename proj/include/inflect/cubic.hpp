#pragma once

#include <utility>

namespace inflect {

/// alpha x^3 + beta x^2 + gamma x + delta, alpha != 0.
struct CubicCoefficients {
  double alpha;
  double beta;
  double gamma;
  double delta;
};

/// Inflection abscissa -beta / (3 alpha).
double cubic_inflection(const CubicCoefficients& c);

/// Abscissae where the left / right chord of [a, b] is tangent to the cubic:
///   x_l = -(alpha a + beta) / (2 alpha)
///   x_r = -(alpha b + beta) / (2 alpha)
/// Throws std::invalid_argument when alpha = 0.
std::pair<double, double> cubic_tangency(const CubicCoefficients& c, double a,
                                         double b);

/// Exact recovery of the inflection point from the tangency abscissae:
/// (chi_l + chi_r) / 3 + a / 6 + b / 6. Feeding it ESE's chi_l, chi_r gives
/// a consistent corrected estimate.
double cubic_corrected_p(double chi_l, double chi_r, double a, double b);

}  // namespace inflect
