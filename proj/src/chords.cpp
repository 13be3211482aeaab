#include "inflect/chords.hpp"

#include <stdexcept>

namespace inflect {

ChordLine chord(double x0, double y0, double x1, double y1) {
  if (x0 == x1)
    throw std::invalid_argument("chord: degenerate chord, equal abscissae");
  const double slope = (y1 - y0) / (x1 - x0);
  return ChordLine{slope, y0 - slope * x0};
}

double trapezoid(double x0, double y0, double x1, double y1) {
  if (!(x0 < x1)) throw std::invalid_argument("trapezoid: requires x0 < x1");
  return 0.5 * (y0 + y1) * (x1 - x0);
}

namespace {

// Running composite trapezoid C[j] = T(data, x0..xj), compensated so long
// grids do not accumulate drift.
std::vector<double> running_trapezoid(const SampledCurve& c) {
  std::vector<double> out(c.points());
  out[0] = 0.0;
  double sum = 0.0, comp = 0.0;
  for (std::size_t i = 1; i < c.points(); ++i) {
    const double term =
        0.5 * (c.ys[i - 1] + c.ys[i]) * (c.xs[i] - c.xs[i - 1]) - comp;
    const double next = sum + term;
    comp = (next - sum) - term;
    sum = next;
    out[i] = sum;
  }
  return out;
}

}  // namespace

double composite_trapezoid(const SampledCurve& curve) {
  return running_trapezoid(curve).back();
}

std::vector<double> total_residuals(const SampledCurve& curve) {
  const ChordLine g = chord(curve.xs.front(), curve.ys.front(),
                            curve.xs.back(), curve.ys.back());
  std::vector<double> phi(curve.points());
  for (std::size_t i = 0; i < curve.points(); ++i)
    phi[i] = curve.ys[i] - g.at(curve.xs[i]);
  return phi;
}

SurfaceProfiles surface_profiles(const SampledCurve& curve) {
  const std::vector<double> C = running_trapezoid(curve);
  const std::size_t n = curve.segments();
  const double x0 = curve.xs.front(), y0 = curve.ys.front();
  const double xn = curve.xs.back(), yn = curve.ys.back();
  SurfaceProfiles sp;
  sp.left.resize(n + 1);
  sp.right.resize(n + 1);
  for (std::size_t j = 0; j <= n; ++j) {
    sp.left[j] = C[j] - 0.5 * (curve.xs[j] - x0) * (y0 + curve.ys[j]);
    sp.right[j] =
        (C[n] - C[j]) - 0.5 * (xn - curve.xs[j]) * (curve.ys[j] + yn);
  }
  sp.left[0] = 0.0;
  sp.right[n] = 0.0;
  return sp;
}

}  // namespace inflect
