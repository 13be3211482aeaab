#pragma once

#include <cmath>
#include <functional>
#include <vector>

namespace inflect::detail {

// Bisection on a bracketing interval [lo, hi] with h(lo) * h(hi) <= 0.
// Stops when the interval width drops below `width`.
inline double bisect(const std::function<double(double)>& h, double lo,
                     double hi, double width) {
  double flo = h(lo);
  for (int it = 0; it < 200 && hi - lo > width; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double fm = h(mid);
    if (fm == 0.0) return mid;
    if ((flo < 0.0) == (fm < 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

// Scans [lo, hi] in `nsub` equal subintervals and bisects every sign change
// down to an interval of width 1e-12 * (hi - lo). Roots are returned in
// increasing order.
inline std::vector<double> scan_roots(const std::function<double(double)>& h,
                                      double lo, double hi,
                                      std::size_t nsub = 10000) {
  std::vector<double> roots;
  if (!(lo < hi)) return roots;
  const double step = (hi - lo) / static_cast<double>(nsub);
  const double width = 1e-12 * (hi - lo);
  double x0 = lo;
  double f0 = h(x0);
  for (std::size_t i = 1; i <= nsub; ++i) {
    const double x1 = lo + static_cast<double>(i) * step;
    const double f1 = h(x1);
    if (f0 == 0.0) {
      roots.push_back(x0);
    } else if (std::isfinite(f0) && std::isfinite(f1) && f0 * f1 < 0.0) {
      roots.push_back(bisect(h, x0, x1, width));
    }
    x0 = x1;
    f0 = f1;
  }
  if (f0 == 0.0) roots.push_back(x0);
  return roots;
}

}  // namespace inflect::detail
