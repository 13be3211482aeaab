#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <random>

#include "inflect/estimators.hpp"
#include "inflect/model.hpp"

using namespace inflect;

namespace {

SampledCurve fp_curve(double a, double b, std::size_t n = 500) {
  return sample(CurveSpec::fisher_pry(), a, b, n);
}

const CurveSpec kCubic = CurveSpec::cubic(-1.0 / 3.0, 2.5, -4.0, 0.5);

}  // namespace

TEST_CASE("ese golden values on the noiseless catalog") {
  SUBCASE("fisher-pry [2,8], exactly symmetric window") {
    const EseReport r = ese(fp_curve(2, 8));
    CHECK(r.j_r == 169);
    CHECK(r.j_l == 331);
    CHECK(r.chi_r == doctest::Approx(4.0280).epsilon(1e-12));
    CHECK(r.chi_l == doctest::Approx(5.9720).epsilon(1e-12));
    CHECK(r.chi_s == doctest::Approx(5.0).epsilon(1e-12));
  }
  SUBCASE("fisher-pry [4.2,8], left-truncated window") {
    const EseReport r = ese(fp_curve(4.2, 8));
    CHECK(r.j_r == 0);  // constrained maximum pins to the left endpoint
    CHECK(r.chi_r == doctest::Approx(4.2).epsilon(1e-12));
    CHECK(r.chi_l == doctest::Approx(5.3780).epsilon(1e-10));
    CHECK(std::abs(r.chi_s - 4.7928) <= 0.0076 + 1e-12);  // one grid step
  }
  SUBCASE("gompertz [3.5,8]") {
    const EseReport r = ese(sample(CurveSpec::gompertz(), 3.5, 8, 500));
    CHECK(r.j_r == 71);
    CHECK(r.j_l == 265);
    CHECK(r.chi_s == doctest::Approx(5.012).epsilon(1e-10));
  }
  SUBCASE("cubic [-2,7], symmetric window") {
    const EseReport r = ese(sample(kCubic, -2, 7, 500));
    CHECK(r.chi_r == doctest::Approx(0.25).epsilon(1e-10));
    CHECK(r.chi_l == doctest::Approx(4.75).epsilon(1e-10));
    CHECK(r.chi_s == doctest::Approx(2.50).epsilon(1e-10));
  }
  SUBCASE("cubic [-2,8], right-extended window") {
    const EseReport r = ese(sample(kCubic, -2, 8, 500));
    CHECK(r.chi_r == doctest::Approx(-0.26).epsilon(1e-10));
    CHECK(r.chi_l == doctest::Approx(4.74).epsilon(1e-10));
    CHECK(r.chi_s == doctest::Approx(2.24).epsilon(1e-10));
  }
}

TEST_CASE("ede golden values on the noiseless catalog") {
  SUBCASE("fisher-pry [2,8]") {
    const EdeReport r = ede(fp_curve(2, 8));
    CHECK(r.j_1 == 154);
    CHECK(r.j_2 == 346);
    CHECK(r.chi_f1 == doctest::Approx(3.8480).epsilon(1e-12));
    CHECK(r.chi_f2 == doctest::Approx(6.1520).epsilon(1e-12));
    REQUIRE(r.chi_d.has_value());
    CHECK(*r.chi_d == doctest::Approx(5.0).epsilon(1e-12));
  }
  SUBCASE("fisher-pry [4.2,8]") {
    const EdeReport r = ede(fp_curve(4.2, 8));
    CHECK(r.j_1 == 0);
    REQUIRE(r.chi_d.has_value());
    CHECK(std::abs(*r.chi_d - 5.0854) <= 0.0076 + 1e-12);
  }
  SUBCASE("gompertz [3.5,8]") {
    const EdeReport r = ede(sample(CurveSpec::gompertz(), 3.5, 8, 500));
    CHECK(r.j_1 == 66);
    CHECK(r.j_2 == 310);
    REQUIRE(r.chi_d.has_value());
    CHECK(*r.chi_d == doctest::Approx(5.192).epsilon(1e-10));
  }
  SUBCASE("cubic [-2,7] and [-2,8] both recover 2.5") {
    for (double b : {7.0, 8.0}) {
      const EdeReport r = ede(sample(kCubic, -2, b, 500));
      REQUIRE(r.chi_d.has_value());
      CHECK(*r.chi_d == doctest::Approx(2.5).epsilon(1e-10));
    }
  }
  SUBCASE("strictly convex data yields no detection") {
    std::vector<double> xs(101), ys(101);
    for (int i = 0; i <= 100; ++i) {
      xs[i] = -2.0 + 0.04 * i;
      ys[i] = xs[i] * xs[i];
    }
    const EdeReport r = ede(SampledCurve(xs, ys));
    CHECK_FALSE(r.chi_d.has_value());
    CHECK(r.chi_f2 < r.chi_f1);
  }
}

TEST_CASE("estimator ordering chi_r <= chi_s <= chi_l on sigmoid data") {
  for (std::size_t n : {50u, 137u, 500u}) {
    const EseReport r = ese(fp_curve(2, 8, n));
    CHECK(r.chi_r <= r.chi_s);
    CHECK(r.chi_s <= r.chi_l);
    const EdeReport d = ede(fp_curve(2, 8, n));
    REQUIRE(d.chi_d.has_value());
    CHECK(d.chi_f1 <= *d.chi_d);
    CHECK(*d.chi_d <= d.chi_f2);
  }
}

TEST_CASE("argmin/argmax are invariant under positive affine ordinate maps") {
  std::mt19937 rng(99);
  std::uniform_real_distribution<double> scale(0.1, 50.0);
  std::uniform_real_distribution<double> shift(-100.0, 100.0);
  const SampledCurve base = sample(CurveSpec::gompertz(), 3.5, 8, 200);
  const EseReport r0 = ese(base);
  const EdeReport d0 = ede(base);
  for (int t = 0; t < 50; ++t) {
    const double s = scale(rng), c = shift(rng);
    std::vector<double> ys(base.ys.size());
    for (std::size_t i = 0; i < ys.size(); ++i) ys[i] = s * base.ys[i] + c;
    const SampledCurve mapped(base.xs, ys);
    const EseReport r = ese(mapped);
    const EdeReport d = ede(mapped);
    CHECK(r.j_r == r0.j_r);
    CHECK(r.j_l == r0.j_l);
    CHECK(d.j_1 == d0.j_1);
    CHECK(d.j_2 == d0.j_2);
  }
}

TEST_CASE("orient handles both orientations and negation duality") {
  const SampledCurve up = fp_curve(2, 8, 200);
  std::vector<double> neg(up.ys.size());
  for (std::size_t i = 0; i < neg.size(); ++i) neg[i] = -up.ys[i];
  const SampledCurve down(up.xs, neg);

  const Oriented a = orient(up, CurveShape::Auto);
  CHECK_FALSE(a.flipped);
  const Oriented b = orient(down, CurveShape::Auto);
  CHECK(b.flipped);
  // estimates agree after normalization
  CHECK(ese(a.curve).chi_s == doctest::Approx(ese(b.curve).chi_s).epsilon(1e-12));
  CHECK(*ede(a.curve).chi_d == doctest::Approx(*ede(b.curve).chi_d).epsilon(1e-12));

  const Oriented forced = orient(up, CurveShape::ConcaveConvex);
  CHECK(forced.flipped);

  SampledCurve line({0, 1, 2, 3}, {1, 2, 3, 4});
  CHECK_THROWS_AS(orient(line, CurveShape::Auto), OrientationError);

  // one-sided data (window past the inflection on either side) is left as
  // given: the estimators pin the missing side to the nearer endpoint
  const SampledCurve head = sample(CurveSpec::gompertz(), 2.0, 4.5, 100);
  CHECK_FALSE(orient(head, CurveShape::Auto).flipped);
  const SampledCurve tail = sample(CurveSpec::gompertz(), 5.5, 9.0, 100);
  CHECK_FALSE(orient(tail, CurveShape::Auto).flipped);
  std::vector<double> tneg(tail.ys.size());
  for (std::size_t i = 0; i < tneg.size(); ++i) tneg[i] = -tail.ys[i];
  CHECK_FALSE(orient(SampledCurve(tail.xs, tneg), CurveShape::Auto).flipped);
}

TEST_CASE("ese/ede on a subrange equal ese/ede on the extracted subcurve") {
  const SampledCurve c = sample(CurveSpec::gompertz(), 3.5, 8, 500);
  std::mt19937 rng(7);
  std::uniform_int_distribution<std::size_t> pick(0, c.points() - 1);
  for (int t = 0; t < 40; ++t) {
    std::size_t lo = pick(rng), hi = pick(rng);
    if (lo > hi) std::swap(lo, hi);
    if (hi - lo < 3) continue;
    const SampledCurve sub = c.subrange(lo, hi);
    const EseReport r = ese(sub);
    CHECK(sub.xs[r.j_l] == c.xs[lo + r.j_l]);
    CHECK(sub.xs[r.j_r] == c.xs[lo + r.j_r]);
    const EdeReport d = ede(sub);
    CHECK(sub.xs[d.j_1] == c.xs[lo + d.j_1]);
    CHECK(sub.xs[d.j_2] == c.xs[lo + d.j_2]);
  }
}

TEST_CASE("ede is asymptotically unbiased under uniform noise") {
  const SampledCurve base = fp_curve(2, 8, 500);
  const double r = 0.05;
  double sum = 0.0, sumsq = 0.0;
  std::size_t count = 0;
  for (std::uint64_t s = 0; s < 1000; ++s) {
    const EdeReport d = ede(add_noise(base, {NoiseSpec::Dist::Uniform, r, s}));
    if (!d.chi_d) continue;
    sum += *d.chi_d;
    sumsq += *d.chi_d * *d.chi_d;
    ++count;
  }
  REQUIRE(count > 900);
  const double mean = sum / static_cast<double>(count);
  const double var =
      (sumsq - sum * sum / static_cast<double>(count)) /
      static_cast<double>(count - 1);
  const double step = 6.0 / 500.0;
  CHECK(std::abs(mean - 5.0) <
        3.0 * std::sqrt(var / static_cast<double>(count)) + step);
}

TEST_CASE("reference points match the analytic values") {
  SUBCASE("fisher-pry [2,8]") {
    const TheoreticalPoints t = reference_points(CurveSpec::fisher_pry(), 2, 8);
    REQUIRE(t.x_l_found);
    REQUIRE(t.x_r_found);
    CHECK(t.x_l == doctest::Approx(5.970315941).epsilon(1e-6));
    CHECK(t.x_r == doctest::Approx(4.029684059).epsilon(1e-6));
    CHECK(t.x_f1 == doctest::Approx(3.850750196).epsilon(1e-6));
    CHECK(t.x_f2 == doctest::Approx(6.149249804).epsilon(1e-6));
    CHECK(t.x_s == doctest::Approx(5.0).epsilon(1e-6));
    CHECK(t.x_d == doctest::Approx(5.0).epsilon(1e-6));
  }
  SUBCASE("gompertz [3.5,8]") {
    const TheoreticalPoints t = reference_points(CurveSpec::gompertz(), 3.5, 8);
    CHECK(t.x_r == doctest::Approx(4.138928270).epsilon(1e-6));
    CHECK(t.x_l == doctest::Approx(5.887451706).epsilon(1e-6));
    CHECK(t.x_s == doctest::Approx(5.013189988).epsilon(1e-6));
    CHECK(t.x_f1 == doctest::Approx(4.095750735).epsilon(1e-6));
    CHECK(t.x_f2 == doctest::Approx(6.290768183).epsilon(1e-6));
    CHECK(t.x_d == doctest::Approx(5.193259460).epsilon(1e-6));
  }
  SUBCASE("fisher-pry [4.2,8], tangency outside the window") {
    const TheoreticalPoints t =
        reference_points(CurveSpec::fisher_pry(), 4.2, 8);
    CHECK(t.x_s == doctest::Approx(4.703504993).epsilon(1e-6));
    CHECK_FALSE(t.x_r_in);  // right tangency falls before what the data sees
    // the data estimator converges to the clamped midpoint instead
    CHECK(t.chi_s_limit == doctest::Approx((4.2 + 5.377325926) / 2).epsilon(1e-6));
    CHECK(t.chi_d_limit == doctest::Approx(5.087161370).epsilon(1e-6));
  }
  SUBCASE("cubic [-2,7] tese equals the true inflection") {
    const TheoreticalPoints t = reference_points(kCubic, -2, 7);
    CHECK(t.x_s == doctest::Approx(2.5).epsilon(1e-6));
    CHECK(t.x_d == doctest::Approx(2.5).epsilon(1e-6));
  }
}
