#include "inflect/cubic.hpp"

#include <stdexcept>

namespace inflect {

double cubic_inflection(const CubicCoefficients& c) {
  if (c.alpha == 0.0) throw std::invalid_argument("cubic: alpha must be nonzero");
  return -c.beta / (3.0 * c.alpha);
}

std::pair<double, double> cubic_tangency(const CubicCoefficients& c, double a,
                                         double b) {
  if (c.alpha == 0.0) throw std::invalid_argument("cubic: alpha must be nonzero");
  if (!(a < b)) throw std::invalid_argument("cubic_tangency: requires a < b");
  const double x_l = -(c.alpha * a + c.beta) / (2.0 * c.alpha);
  const double x_r = -(c.alpha * b + c.beta) / (2.0 * c.alpha);
  return {x_l, x_r};
}

double cubic_corrected_p(double chi_l, double chi_r, double a, double b) {
  if (!(a < b)) throw std::invalid_argument("cubic_corrected_p: requires a < b");
  return (chi_l + chi_r) / 3.0 + a / 6.0 + b / 6.0;
}

}  // namespace inflect
