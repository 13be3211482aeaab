#include "inflect/model.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "rootfind.hpp"

namespace inflect {

namespace {

void validate(const std::vector<double>& xs, const std::vector<double>& ys) {
  if (xs.size() != ys.size())
    throw std::invalid_argument("SampledCurve: xs and ys length mismatch");
  if (xs.size() < 4)
    throw std::invalid_argument("SampledCurve: needs at least 4 points");
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (!std::isfinite(xs[i]) || !std::isfinite(ys[i]))
      throw std::invalid_argument("SampledCurve: non-finite value at index " +
                                  std::to_string(i));
    if (i > 0 && !(xs[i - 1] < xs[i]))
      throw std::invalid_argument(
          "SampledCurve: xs not strictly increasing at index " +
          std::to_string(i));
  }
}

}  // namespace

SampledCurve::SampledCurve(std::vector<double> xs_in, std::vector<double> ys_in)
    : xs(std::move(xs_in)), ys(std::move(ys_in)) {
  validate(xs, ys);
}

SampledCurve SampledCurve::subrange(std::size_t lo, std::size_t hi) const {
  if (lo >= hi || hi >= xs.size())
    throw std::invalid_argument("SampledCurve::subrange: bad index range");
  return SampledCurve(std::vector<double>(xs.begin() + static_cast<long>(lo),
                                          xs.begin() + static_cast<long>(hi) + 1),
                      std::vector<double>(ys.begin() + static_cast<long>(lo),
                                          ys.begin() + static_cast<long>(hi) + 1));
}

CurveSpec CurveSpec::fisher_pry(double capacity, double p) {
  if (!(capacity > 0.0))
    throw std::invalid_argument("fisher-pry: capacity must be positive");
  return CurveSpec{CurveFamily::FisherPry, p, capacity, {0, 0, 0, 0}};
}

CurveSpec CurveSpec::gompertz(double capacity, double p) {
  if (!(capacity > 0.0))
    throw std::invalid_argument("gompertz: capacity must be positive");
  return CurveSpec{CurveFamily::Gompertz, p, capacity, {0, 0, 0, 0}};
}

CurveSpec CurveSpec::cubic(double alpha, double beta, double gamma,
                           double delta) {
  if (alpha == 0.0)
    throw std::invalid_argument("cubic: leading coefficient must be nonzero");
  return CurveSpec{CurveFamily::Cubic, -beta / (3.0 * alpha), 0.0,
                   {alpha, beta, gamma, delta}};
}

double eval(const CurveSpec& spec, double x) {
  switch (spec.family) {
    case CurveFamily::FisherPry:
      return 0.5 * spec.capacity * (1.0 + std::tanh(x - spec.p));
    case CurveFamily::Gompertz:
      return spec.capacity * std::exp(-std::exp(spec.p - x));
    case CurveFamily::Cubic: {
      const auto& c = spec.coef;
      return ((c[0] * x + c[1]) * x + c[2]) * x + c[3];
    }
  }
  return 0.0;
}

double eval_d1(const CurveSpec& spec, double x) {
  switch (spec.family) {
    case CurveFamily::FisherPry: {
      const double c = std::cosh(x - spec.p);
      return 0.5 * spec.capacity / (c * c);
    }
    case CurveFamily::Gompertz: {
      const double u = std::exp(spec.p - x);
      return spec.capacity * std::exp(-u) * u;
    }
    case CurveFamily::Cubic: {
      const auto& c = spec.coef;
      return (3.0 * c[0] * x + 2.0 * c[1]) * x + c[2];
    }
  }
  return 0.0;
}

double eval_d2(const CurveSpec& spec, double x) {
  switch (spec.family) {
    case CurveFamily::FisherPry: {
      const double c = std::cosh(x - spec.p);
      return -spec.capacity * std::tanh(x - spec.p) / (c * c);
    }
    case CurveFamily::Gompertz: {
      const double u = std::exp(spec.p - x);
      return spec.capacity * std::exp(-u) * u * (u - 1.0);
    }
    case CurveFamily::Cubic:
      return 6.0 * spec.coef[0] * x + 2.0 * spec.coef[1];
  }
  return 0.0;
}

std::pair<double, double> capacity_points(const CurveSpec& spec) {
  if (spec.family == CurveFamily::Cubic)
    throw std::invalid_argument("capacity_points: cubic has no capacity");
  auto solve = [&](double target) {
    // Both sigmoid families are strictly increasing, so a wide bracket
    // around p always contains the crossing.
    double lo = spec.p - 60.0, hi = spec.p + 60.0;
    auto h = [&](double x) { return eval(spec, x) - target; };
    double x = detail::bisect(h, lo, hi, 0.0);
    return x;
  };
  return {solve(0.01 * spec.capacity), solve(0.99 * spec.capacity)};
}

SampledCurve sample(const CurveSpec& spec, double a, double b, std::size_t n) {
  if (!(a < b)) throw std::invalid_argument("sample: requires a < b");
  if (n < 3) throw std::invalid_argument("sample: requires n >= 3");
  std::vector<double> xs(n + 1), ys(n + 1);
  const double step = (b - a) / static_cast<double>(n);
  for (std::size_t i = 0; i <= n; ++i)
    xs[i] = a + static_cast<double>(i) * step;
  xs[0] = a;
  xs[n] = b;
  for (std::size_t i = 0; i <= n; ++i) ys[i] = eval(spec, xs[i]);
  return SampledCurve(std::move(xs), std::move(ys));
}

namespace {

// [0, 1) from the top 53 bits; distribution-free so output is identical
// across standard library implementations.
double unit_uniform(std::mt19937_64& eng) {
  return static_cast<double>(eng() >> 11) * 0x1.0p-53;
}

}  // namespace

SampledCurve add_noise(const SampledCurve& curve, const NoiseSpec& noise) {
  if (!(noise.scale > 0.0))
    throw std::invalid_argument("add_noise: scale must be positive");
  std::mt19937_64 eng(noise.seed);
  std::vector<double> ys = curve.ys;
  if (noise.dist == NoiseSpec::Dist::Uniform) {
    for (double& y : ys)
      y += noise.scale * (2.0 * unit_uniform(eng) - 1.0);
  } else {
    for (double& y : ys) {
      const double u1 = (static_cast<double>(eng() >> 11) + 1.0) * 0x1.0p-53;
      const double u2 = unit_uniform(eng);
      y += noise.scale * std::sqrt(-2.0 * std::log(u1)) *
           std::cos(2.0 * 3.14159265358979323846 * u2);
    }
  }
  return SampledCurve(curve.xs, std::move(ys));
}

SymmetryClass classify_data_symmetry(double a, double b, double p) {
  if (!(a < b)) throw std::invalid_argument("classify_data_symmetry: a < b");
  const double lhs = p - b;
  const double rhs = a - p;
  if (std::abs(lhs - rhs) <= 1e-12) return SymmetryClass::DataSymmetric;
  return lhs < rhs ? SymmetryClass::DataLeftAsymmetric
                   : SymmetryClass::DataRightAsymmetric;
}

std::string to_string(SymmetryClass c) {
  switch (c) {
    case SymmetryClass::DataSymmetric: return "data-symmetric";
    case SymmetryClass::DataLeftAsymmetric: return "data-left-asymmetric";
    case SymmetryClass::DataRightAsymmetric: return "data-right-asymmetric";
  }
  return "?";
}

double symmetry_defect(const CurveSpec& spec, double delta,
                       std::size_t probes) {
  if (!(delta > 0.0))
    throw std::invalid_argument("symmetry_defect: delta must be positive");
  const double fp = eval(spec, spec.p);
  double sup = 0.0;
  // Interior probes only; the defining interval is open at delta.
  for (std::size_t i = 1; i < probes; ++i) {
    const double x = delta * static_cast<double>(i) / static_cast<double>(probes);
    const double d =
        std::abs(eval(spec, spec.p + x) + eval(spec, spec.p - x) - 2.0 * fp);
    sup = std::max(sup, d);
  }
  return sup;
}

}  // namespace inflect
