#pragma once

#include <vector>

#include "inflect/model.hpp"

namespace inflect {

/// Line through two data points with distinct abscissae.
struct ChordLine {
  double slope = 0.0;
  double intercept = 0.0;

  double at(double x) const { return slope * x + intercept; }
};

ChordLine chord(double x0, double y0, double x1, double y1);

/// Elementary trapezoid (y0 + y1) / 2 * (x1 - x0); requires x0 < x1.
double trapezoid(double x0, double y0, double x1, double y1);

/// Sum of elementary trapezoids over consecutive point pairs.
double composite_trapezoid(const SampledCurve& curve);

/// Vertical distances of the data above the chord through the first and last
/// points. Endpoints are zero up to rounding.
std::vector<double> total_residuals(const SampledCurve& curve);

/// left[j]  = trapezoidal integral over [x0, xj] of the data minus its left
///            chord (the chord through points 0 and j); left[0] = 0.
/// right[j] = trapezoidal integral over [xj, xn] of the data minus its right
///            chord (the chord through points j and n); right[n] = 0.
struct SurfaceProfiles {
  std::vector<double> left;
  std::vector<double> right;
};

/// Computes both profiles in O(n) via the running composite trapezoid C of
/// the raw data: the trapezoidal sum of any chord telescopes to its endpoint
/// trapezoid, so
///   left[j]  = C[j] - (xj - x0)(y0 + yj)/2
///   right[j] = (C[n] - C[j]) - (xn - xj)(yj + yn)/2.
SurfaceProfiles surface_profiles(const SampledCurve& curve);

}  // namespace inflect
