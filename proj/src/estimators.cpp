#include "inflect/estimators.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "inflect/chords.hpp"
#include "rootfind.hpp"

namespace inflect {

namespace {

// First index of the minimum over [lo, hi].
std::size_t argmin(const std::vector<double>& v, std::size_t lo,
                   std::size_t hi) {
  std::size_t best = lo;
  for (std::size_t j = lo + 1; j <= hi; ++j)
    if (v[j] < v[best]) best = j;
  return best;
}

std::size_t argmax(const std::vector<double>& v, std::size_t lo,
                   std::size_t hi) {
  std::size_t best = lo;
  for (std::size_t j = lo + 1; j <= hi; ++j)
    if (v[j] > v[best]) best = j;
  return best;
}

}  // namespace

EseReport ese(const SampledCurve& curve) {
  const SurfaceProfiles sp = surface_profiles(curve);
  const std::size_t n = curve.segments();
  EseReport r;
  r.j_l = argmin(sp.left, 1, n);      // left[0] is the empty integral
  r.j_r = argmax(sp.right, 0, n - 1); // right[n] likewise
  r.chi_l = curve.xs[r.j_l];
  r.chi_r = curve.xs[r.j_r];
  r.chi_s = 0.5 * (r.chi_l + r.chi_r);
  return r;
}

EdeReport ede(const SampledCurve& curve) {
  const std::vector<double> phi = total_residuals(curve);
  EdeReport r;
  r.j_1 = argmin(phi, 0, curve.segments());
  r.j_2 = argmax(phi, 0, curve.segments());
  r.chi_f1 = curve.xs[r.j_1];
  r.chi_f2 = curve.xs[r.j_2];
  if (r.chi_f2 >= r.chi_f1) r.chi_d = 0.5 * (r.chi_f1 + r.chi_f2);
  return r;
}

Oriented orient(const SampledCurve& curve, CurveShape shape) {
  auto negated = [&] {
    std::vector<double> ys(curve.ys.size());
    for (std::size_t i = 0; i < ys.size(); ++i) ys[i] = -curve.ys[i];
    return SampledCurve(curve.xs, std::move(ys));
  };
  switch (shape) {
    case CurveShape::ConvexConcave:
      return {curve, false};
    case CurveShape::ConcaveConvex:
      return {negated(), true};
    case CurveShape::Auto:
      break;
  }
  const std::vector<double> phi = total_residuals(curve);
  const std::size_t jmin = argmin(phi, 0, curve.segments());
  const std::size_t jmax = argmax(phi, 0, curve.segments());
  double scale = 1.0;
  for (double y : curve.ys) scale = std::max(scale, std::abs(y));
  const double neg = -phi[jmin], pos = phi[jmax];
  if (std::max(neg, pos) < 1e-12 * scale)
    throw OrientationError("orient: total residuals negligible, shape undetermined");
  // One-sided residuals mean the window covers only the convex or only the
  // concave part of the curve. Such data is left as given: the estimators pin
  // the missing side to the nearer endpoint, which is also how a truncated
  // window behaves when the orientation is known. Two-sided residuals are
  // convex-then-concave exactly when the minimum lies left of the maximum.
  if (std::min(neg, pos) < 0.01 * std::max(neg, pos)) return {curve, false};
  return jmin < jmax ? Oriented{curve, false} : Oriented{negated(), true};
}

TheoreticalPoints reference_points(const CurveSpec& spec, double a, double b,
                                   double delta1, double delta2) {
  if (!(a < b)) throw std::invalid_argument("reference_points: a < b");
  if (delta1 < 0.0) delta1 = 0.1 * (b - a);
  if (delta2 < 0.0) delta2 = 0.1 * (b - a);
  const double nan = std::numeric_limits<double>::quiet_NaN();
  const double fa = eval(spec, a), fb = eval(spec, b);
  // The chord-slope functions are 0/0 at the anchor endpoint; a short margin
  // keeps that removable singularity out of the scan.
  const double margin = 1e-3 * (b - a);

  TheoreticalPoints tp{nan, nan, nan, nan, nan, nan,
                       false, false, false, false,
                       false, false, false, false, nan, nan};

  auto left_gap = [&](double x) {
    return eval_d1(spec, x) - (eval(spec, x) - fa) / (x - a);
  };
  auto roots_l = detail::scan_roots(left_gap, a + margin, b + delta1);
  if (!roots_l.empty()) {
    tp.x_l = roots_l.back();  // tangency sits right of the inflection point
    tp.x_l_found = true;
  }

  auto right_gap = [&](double x) {
    return eval_d1(spec, x) - (fb - eval(spec, x)) / (b - x);
  };
  auto roots_r = detail::scan_roots(right_gap, a - delta2, b - margin);
  if (!roots_r.empty()) {
    tp.x_r = roots_r.front();
    tp.x_r_found = true;
  }

  const double lambda = (fb - fa) / (b - a);
  auto parallel = [&](double x) { return eval_d1(spec, x) - lambda; };
  for (double root : detail::scan_roots(parallel, a - delta1, b + delta2)) {
    const double curv = eval_d2(spec, root);
    if (curv > 0.0 && !tp.x_f1_found) {
      tp.x_f1 = root;
      tp.x_f1_found = true;
    } else if (curv < 0.0 && !tp.x_f2_found) {
      tp.x_f2 = root;
      tp.x_f2_found = true;
    }
  }

  auto within = [&](double x) { return a <= x && x <= b; };
  tp.x_l_in = tp.x_l_found && within(tp.x_l);
  tp.x_r_in = tp.x_r_found && within(tp.x_r);
  tp.x_f1_in = tp.x_f1_found && within(tp.x_f1);
  tp.x_f2_in = tp.x_f2_found && within(tp.x_f2);

  if (tp.x_l_found && tp.x_r_found) {
    tp.x_s = 0.5 * (tp.x_l + tp.x_r);
  } else if (tp.x_r_found) {
    tp.x_s = 0.5 * (b + tp.x_r);  // tangency escaped right of b + delta1
  } else if (tp.x_l_found) {
    tp.x_s = 0.5 * (tp.x_l + a);
  }
  if (tp.x_f1_found && tp.x_f2_found) tp.x_d = 0.5 * (tp.x_f1 + tp.x_f2);

  auto clamp = [&](double x) { return std::clamp(x, a, b); };
  if (tp.x_l_found && tp.x_r_found)
    tp.chi_s_limit = 0.5 * (clamp(tp.x_l) + clamp(tp.x_r));
  if (tp.x_f1_found && tp.x_f2_found)
    tp.chi_d_limit = 0.5 * (clamp(tp.x_f1) + clamp(tp.x_f2));
  return tp;
}

}  // namespace inflect
