#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace inflect {

/// Sampled data on a standard partition: strictly increasing abscissae with
/// one ordinate per point, at least 4 points, all values finite.
struct SampledCurve {
  std::vector<double> xs;
  std::vector<double> ys;

  SampledCurve(std::vector<double> xs_in, std::vector<double> ys_in);

  std::size_t points() const { return xs.size(); }
  std::size_t segments() const { return xs.size() - 1; }
  double a() const { return xs.front(); }
  double b() const { return xs.back(); }

  /// Extracts the closed index range [lo, hi] as a new curve.
  SampledCurve subrange(std::size_t lo, std::size_t hi) const;
};

enum class CurveFamily { FisherPry, Gompertz, Cubic };

/// Analytic test curve with a known inflection point. The sigmoid families
/// are parameterized by capacity L and inflection abscissa p:
///   fisher-pry: f(x) = L/2 (1 + tanh(x - p))
///   gompertz:   f(x) = L exp(-exp(p - x))
/// The cubic family carries its four coefficients directly.
struct CurveSpec {
  CurveFamily family;
  double p;                     // inflection abscissa
  double capacity;              // L; unused for cubic
  std::array<double, 4> coef;   // cubic alpha, beta, gamma, delta

  static CurveSpec fisher_pry(double capacity = 10.0, double p = 5.0);
  static CurveSpec gompertz(double capacity = 10.0, double p = 5.0);
  static CurveSpec cubic(double alpha, double beta, double gamma, double delta);
};

double eval(const CurveSpec& spec, double x);
double eval_d1(const CurveSpec& spec, double x);
double eval_d2(const CurveSpec& spec, double x);

/// Abscissae where a sigmoid reaches 1% and 99% of its capacity, each solved
/// to |f(x) - target| < 1e-10. Throws std::invalid_argument for cubics.
std::pair<double, double> capacity_points(const CurveSpec& spec);

/// Equal-spaced sampling of [a, b] into n segments (n + 1 points, endpoints
/// exact). Requires a < b and n >= 3.
SampledCurve sample(const CurveSpec& spec, double a, double b, std::size_t n);

/// Zero-mean additive noise. The generator is std::mt19937_64 seeded with
/// `seed`; uniform deviates come from the top 53 bits of each draw and the
/// normal transform is Box-Muller on those deviates, so identical specs give
/// bit-identical output on every platform.
struct NoiseSpec {
  enum class Dist { Uniform, Normal };
  Dist dist = Dist::Uniform;
  double scale = 0.05;  // half-width r for uniform, sigma for normal
  std::uint64_t seed = 0;
};

SampledCurve add_noise(const SampledCurve& curve, const NoiseSpec& noise);

enum class SymmetryClass { DataSymmetric, DataLeftAsymmetric, DataRightAsymmetric };

/// Classifies [a, b] against inflection abscissa p: symmetric when
/// p - b = a - p (to 1e-12 absolute), left-asymmetric when p - b < a - p,
/// right-asymmetric otherwise.
SymmetryClass classify_data_symmetry(double a, double b, double p);

std::string to_string(SymmetryClass c);

/// sup over a dense grid of x in (0, delta) of |f(p+x) + f(p-x) - 2 f(p)|.
/// The curve is (eps, delta)-asymptotically symmetric iff the result < eps.
double symmetry_defect(const CurveSpec& spec, double delta,
                       std::size_t probes = 10000);

}  // namespace inflect
