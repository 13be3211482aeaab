#include "inflect/refine.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace inflect {

std::string to_string(StopReason r) {
  switch (r) {
    case StopReason::IntervalCollapsed: return "interval-collapsed";
    case StopReason::ToleranceMet: return "tolerance-met";
    case StopReason::NonDetection: return "non-detection";
    case StopReason::MinPoints: return "min-points";
  }
  return "?";
}

namespace {

EseReport globalize(EseReport r, std::size_t lo, const SampledCurve& curve) {
  r.j_r += lo;
  r.j_l += lo;
  r.chi_r = curve.xs[r.j_r];
  r.chi_l = curve.xs[r.j_l];
  return r;
}

EdeReport globalize(EdeReport r, std::size_t lo, const SampledCurve& curve) {
  r.j_1 += lo;
  r.j_2 += lo;
  r.chi_f1 = curve.xs[r.j_1];
  r.chi_f2 = curve.xs[r.j_2];
  return r;
}

}  // namespace

RefineResult bese(const SampledCurve& curve, double e, std::size_t min_points) {
  if (!(e > 0.0)) throw std::invalid_argument("bese: tolerance must be positive");
  if (min_points < 4) throw std::invalid_argument("bese: min_points >= 4");
  RefineResult out;
  std::size_t lo = 0, hi = curve.segments();
  double prev = std::numeric_limits<double>::quiet_NaN();
  for (int k = 0;; ++k) {
    const EseReport rep =
        globalize(ese(curve.subrange(lo, hi)), lo, curve);
    out.trace.rows.push_back({k, lo, hi, rep, std::nullopt});
    out.estimate = rep.chi_s;
    if (rep.j_l <= rep.j_r) {
      out.trace.stop = StopReason::IntervalCollapsed;
      break;
    }
    if (k > 0 && std::abs(rep.chi_s - prev) < e) {
      out.trace.stop = StopReason::ToleranceMet;
      break;
    }
    if (rep.j_l - rep.j_r + 1 < min_points) {
      out.trace.stop = StopReason::MinPoints;
      break;
    }
    if (rep.j_r == lo && rep.j_l == hi) {  // no strict nesting possible
      out.trace.stop = StopReason::IntervalCollapsed;
      break;
    }
    lo = rep.j_r;
    hi = rep.j_l;
    prev = rep.chi_s;
  }
  return out;
}

RefineResult bede(const SampledCurve& curve, double e, std::size_t min_points) {
  if (!(e > 0.0)) throw std::invalid_argument("bede: tolerance must be positive");
  if (min_points < 4) throw std::invalid_argument("bede: min_points >= 4");
  RefineResult out;
  std::size_t lo = 0, hi = curve.segments();
  double prev = std::numeric_limits<double>::quiet_NaN();
  for (int k = 0;; ++k) {
    const SampledCurve sub = curve.subrange(lo, hi);
    const EseReport es = globalize(ese(sub), lo, curve);
    const EdeReport ed = globalize(ede(sub), lo, curve);
    out.trace.rows.push_back({k, lo, hi, es, ed});
    if (!ed.chi_d) {
      // Keep the last successful estimate; noisy data can lose
      // detectability on a small subrange.
      out.trace.stop = StopReason::NonDetection;
      break;
    }
    out.estimate = *ed.chi_d;
    if (ed.j_2 <= ed.j_1) {
      out.trace.stop = StopReason::IntervalCollapsed;
      break;
    }
    if (k > 0 && std::abs(*ed.chi_d - prev) < e) {
      out.trace.stop = StopReason::ToleranceMet;
      break;
    }
    if (ed.j_2 - ed.j_1 + 1 < min_points) {
      out.trace.stop = StopReason::MinPoints;
      break;
    }
    if (ed.j_1 == lo && ed.j_2 == hi) {
      out.trace.stop = StopReason::IntervalCollapsed;
      break;
    }
    lo = ed.j_1;
    hi = ed.j_2;
    prev = *ed.chi_d;
  }
  return out;
}

}  // namespace inflect
