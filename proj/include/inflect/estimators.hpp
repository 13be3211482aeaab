#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>

#include "inflect/model.hpp"

namespace inflect {

/// Extremum-surface estimate: the left-chord area profile is minimized at
/// j_l, the right-chord profile maximized at j_r, and the estimate chi_s is
/// the midpoint of the two abscissae. Ties break toward the smaller index.
struct EseReport {
  std::size_t j_r = 0;
  std::size_t j_l = 0;
  double chi_r = 0.0;
  double chi_l = 0.0;
  double chi_s = 0.0;
};

/// Extremum-distance estimate: j_1 / j_2 are the argmin / argmax of the
/// total-chord residuals. chi_d is present iff chi_f2 >= chi_f1; otherwise
/// the data resolved no inflection (convex-only or concave-only).
struct EdeReport {
  std::size_t j_1 = 0;
  std::size_t j_2 = 0;
  double chi_f1 = 0.0;
  double chi_f2 = 0.0;
  std::optional<double> chi_d;
};

/// Both estimators assume convex-then-concave data; use orient() first.
EseReport ese(const SampledCurve& curve);
EdeReport ede(const SampledCurve& curve);

enum class CurveShape { ConvexConcave, ConcaveConvex, Auto };

struct OrientationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Oriented {
  SampledCurve curve;
  bool flipped = false;
};

/// Normalizes data to convex-then-concave orientation, negating ordinates
/// when needed. Auto mode inspects the total residuals; it throws
/// OrientationError when they are all negligible (near-linear data).
Oriented orient(const SampledCurve& curve, CurveShape shape);

/// Tangency and parallel-tangent abscissae of an analytic curve, solved by
/// bracketed bisection to |residual interval| < 1e-12 of the window width.
/// A point that is not bracketed inside its (delta-extended) window is
/// reported as NaN with found = false; this is not fatal.
struct TheoreticalPoints {
  double x_l, x_r;     // left / right chord tangency
  double x_f1, x_f2;   // tangent parallel to the total chord (min / max of F)
  double x_s, x_d;     // TESE and TEDE estimates
  bool x_l_found, x_r_found, x_f1_found, x_f2_found;
  bool x_l_in, x_r_in, x_f1_in, x_f2_in;  // containment in [a, b]
  // Limits the data estimators approach when a point escapes [a, b]: the
  // constrained extremum pins to the nearer endpoint, so each root is
  // clamped to [a, b] before taking midpoints.
  double chi_s_limit, chi_d_limit;
};

/// delta1 / delta2 < 0 default to 10% of (b - a).
TheoreticalPoints reference_points(const CurveSpec& spec, double a, double b,
                                   double delta1 = -1.0, double delta2 = -1.0);

}  // namespace inflect
