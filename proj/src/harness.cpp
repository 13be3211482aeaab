#include "inflect/harness.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "inflect/chords.hpp"
#include "inflect/cubic.hpp"
#include "inflect/csv.hpp"

#include <nlohmann/json.hpp>

namespace inflect {

std::string to_string(Method m) {
  switch (m) {
    case Method::Ese: return "ese";
    case Method::Ede: return "ede";
    case Method::Bese: return "bese";
    case Method::Bede: return "bede";
    case Method::CubicCorrection: return "cubic-correction";
  }
  return "?";
}

std::optional<Method> method_from_string(const std::string& name) {
  if (name == "ese") return Method::Ese;
  if (name == "ede") return Method::Ede;
  if (name == "bese") return Method::Bese;
  if (name == "bede") return Method::Bede;
  if (name == "cubic-correction") return Method::CubicCorrection;
  return std::nullopt;
}

std::map<std::string, double> ReplicateOutcome::estimates() const {
  std::map<std::string, double> out;
  if (ese) out["ese"] = ese->chi_s;
  if (ede && ede->chi_d) out["ede"] = *ede->chi_d;
  if (bese && bese->estimate) out["bese"] = *bese->estimate;
  if (bede && bede->estimate) out["bede"] = *bede->estimate;
  if (corrected_p) out["cubic-correction"] = *corrected_p;
  return out;
}

namespace {

bool wants(const ExperimentConfig& c, Method m) {
  return std::find(c.methods.begin(), c.methods.end(), m) != c.methods.end();
}

ReplicateOutcome run_methods(const ExperimentConfig& config,
                             const SampledCurve& data, std::size_t index) {
  ReplicateOutcome out;
  out.index = index;
  try {
    const Oriented oriented = orient(data, CurveShape::Auto);
    const SampledCurve& c = oriented.curve;
    const bool need_ese = wants(config, Method::Ese) ||
                          wants(config, Method::CubicCorrection) ||
                          config.methods.empty();
    if (need_ese) out.ese = ese(c);
    if (wants(config, Method::Ede) || config.methods.empty()) out.ede = ede(c);
    if (wants(config, Method::Bese))
      out.bese = bese(c, config.tolerance, config.min_points);
    if (wants(config, Method::Bede))
      out.bede = bede(c, config.tolerance, config.min_points);
    if (wants(config, Method::CubicCorrection))
      out.corrected_p =
          cubic_corrected_p(out.ese->chi_l, out.ese->chi_r, data.a(), data.b());
  } catch (const std::exception& ex) {
    out.error = ex.what();
  }
  return out;
}

}  // namespace

ExperimentReport run_experiment(const ExperimentConfig& config) {
  if (config.replicates < 1)
    throw std::invalid_argument("run_experiment: replicates >= 1");
  if (config.replicates > 1 && !config.noise)
    throw std::invalid_argument("run_experiment: replicates > 1 needs noise");
  ExperimentReport report;
  report.config = config;
  const SampledCurve base = sample(config.curve, config.a, config.b, config.n);
  for (std::size_t k = 0; k < config.replicates; ++k) {
    if (config.noise) {
      NoiseSpec ns = *config.noise;
      ns.seed += k;
      report.replicates.push_back(run_methods(config, add_noise(base, ns), k));
    } else {
      report.replicates.push_back(run_methods(config, base, k));
    }
  }
  // Per-method summaries over the replicates that produced an estimate.
  std::map<std::string, std::vector<double>> values;
  for (const ReplicateOutcome& r : report.replicates)
    for (const auto& [label, v] : r.estimates()) values[label].push_back(v);
  for (const auto& [label, v] : values) {
    EstimatorSummary s;
    s.count = v.size();
    for (double x : v) s.mean += x;
    s.mean /= static_cast<double>(v.size());
    if (v.size() > 1) {
      double acc = 0.0;
      for (double x : v) acc += (x - s.mean) * (x - s.mean);
      s.sd = std::sqrt(acc / static_cast<double>(v.size() - 1));
    }
    s.bias = s.mean - config.curve.p;
    report.summary[label] = s;
  }
  return report;
}

std::vector<VarianceRow> variance_scaling_study(
    const ExperimentConfig& config, const std::vector<std::size_t>& n_values) {
  if (!config.noise)
    throw std::invalid_argument("variance_scaling_study: noise required");
  if (config.replicates < 2)
    throw std::invalid_argument("variance_scaling_study: replicates >= 2");
  const NoiseSpec& noise = *config.noise;
  const double sigma2 = noise.dist == NoiseSpec::Dist::Uniform
                            ? noise.scale * noise.scale / 3.0
                            : noise.scale * noise.scale;
  std::vector<VarianceRow> rows;
  for (std::size_t n : n_values) {
    const SampledCurve base = sample(config.curve, config.a, config.b, n);
    std::vector<double> t(config.replicates);
    for (std::size_t k = 0; k < config.replicates; ++k) {
      NoiseSpec ns = noise;
      ns.seed += k;
      t[k] = composite_trapezoid(add_noise(base, ns));
    }
    double mean = 0.0;
    for (double x : t) mean += x;
    mean /= static_cast<double>(t.size());
    double var = 0.0;
    for (double x : t) var += (x - mean) * (x - mean);
    var /= static_cast<double>(t.size() - 1);
    const double width = config.b - config.a;
    rows.push_back(
        {n, var, width * width * sigma2 / (2.0 * static_cast<double>(n))});
  }
  return rows;
}

bool TableReport::pass() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const TableCheck& c) { return c.pass; });
}

namespace {

TableCheck near(const std::string& label, double expected, double actual,
                double tol) {
  // A hair of slack so "within one grid step" admits exact-step offsets.
  return {label, expected, actual, tol,
          std::abs(actual - expected) <= tol * (1.0 + 1e-9)};
}

TableCheck flag(const std::string& label, bool ok) {
  return {label, 1.0, ok ? 1.0 : 0.0, 0.0, ok};
}

struct Draws {
  std::vector<double> chi_s, chi_d;
  double mean_s = 0.0, mean_d = 0.0;
};

Draws noisy_draws(const CurveSpec& spec, double a, double b, std::size_t n,
                  double r, std::size_t replicates, std::uint64_t seed) {
  ExperimentConfig cfg;
  cfg.curve = spec;
  cfg.a = a;
  cfg.b = b;
  cfg.n = n;
  cfg.noise = NoiseSpec{NoiseSpec::Dist::Uniform, r, seed};
  cfg.methods = {Method::Ese, Method::Ede};
  cfg.replicates = replicates;
  const ExperimentReport rep = run_experiment(cfg);
  Draws d;
  for (const ReplicateOutcome& out : rep.replicates) {
    if (out.ese) d.chi_s.push_back(out.ese->chi_s);
    if (out.ede && out.ede->chi_d) d.chi_d.push_back(*out.ede->chi_d);
  }
  d.mean_s = rep.summary.at("ese").mean;
  d.mean_d = rep.summary.at("ede").mean;
  return d;
}

std::pair<double, double> interval99(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const double m = static_cast<double>(v.size() - 1);
  const std::size_t lo = static_cast<std::size_t>(std::floor(0.005 * m));
  const std::size_t hi = static_cast<std::size_t>(std::ceil(0.995 * m));
  return {v[lo], v[hi]};
}

TableCheck envelope(const std::string& label, double printed,
                    const std::vector<double>& draws) {
  const auto [lo, hi] = interval99(draws);
  std::ostringstream os;
  os << label << " in empirical 99% interval [" << lo << ", " << hi << "]";
  return {os.str(), printed, printed, hi - lo, lo <= printed && printed <= hi};
}

struct GoldRow {
  double chi_r, chi_l, chi_s, chi_f1, chi_f2, chi_d;
};

void check_gold(TableReport& t, const CurveSpec& spec, double a, double b,
                std::size_t n, const GoldRow& g) {
  const double h = (b - a) / static_cast<double>(n);
  const SampledCurve c = orient(sample(spec, a, b, n), CurveShape::Auto).curve;
  const EseReport es = ese(c);
  const EdeReport ed = ede(c);
  t.checks.push_back(near("chi_r", g.chi_r, es.chi_r, h));
  t.checks.push_back(near("chi_l", g.chi_l, es.chi_l, h));
  t.checks.push_back(near("chi_S", g.chi_s, es.chi_s, h));
  t.checks.push_back(near("chi_F1", g.chi_f1, ed.chi_f1, h));
  t.checks.push_back(near("chi_F2", g.chi_f2, ed.chi_f2, h));
  t.checks.push_back(flag("chi_D present", ed.chi_d.has_value()));
  if (ed.chi_d) t.checks.push_back(near("chi_D", g.chi_d, *ed.chi_d, h));
}

void check_refined(TableReport& t, const CurveSpec& spec, double a, double b,
                   std::size_t n, bool use_bede, double target, double tol,
                   std::size_t max_iters) {
  const SampledCurve c = orient(sample(spec, a, b, n), CurveShape::Auto).curve;
  const RefineResult r = use_bede ? bede(c) : bese(c);
  t.checks.push_back(flag("estimate present", r.estimate.has_value()));
  if (r.estimate)
    t.checks.push_back(near("final estimate", target, *r.estimate, tol));
  // Iterations beyond the initial full-data pass.
  t.checks.push_back({"iterations <= " + std::to_string(max_iters),
                      static_cast<double>(max_iters),
                      static_cast<double>(r.trace.rows.size() - 1), 0.0,
                      r.trace.rows.size() - 1 <= max_iters});
}

void check_noisy(TableReport& t, const CurveSpec& spec, double a, double b,
                 std::size_t n, double r, double printed_s, double printed_d,
                 double noiseless_s, double noiseless_d,
                 std::size_t replicates, std::uint64_t seed) {
  const Draws d = noisy_draws(spec, a, b, n, r, replicates, seed);
  t.checks.push_back(near("mean chi_S vs noiseless", noiseless_s, d.mean_s, 0.05));
  t.checks.push_back(near("mean chi_D vs noiseless", noiseless_d, d.mean_d, 0.05));
  t.checks.push_back(envelope("printed chi_S", printed_s, d.chi_s));
  t.checks.push_back(envelope("printed chi_D", printed_d, d.chi_d));
}

}  // namespace

std::vector<TableReport> reproduce_paper(std::size_t replicates,
                                         std::uint64_t seed) {
  std::vector<TableReport> out;
  const CurveSpec fp = CurveSpec::fisher_pry();
  const CurveSpec gom = CurveSpec::gompertz();
  const CurveSpec cub = CurveSpec::cubic(-1.0 / 3.0, 2.5, -4.0, 0.5);
  const double tol_ref = 1e-6;

  {
    TableReport t{"table-I", "Fisher-Pry [2,8] n=500 noiseless", {}};
    const double h = 6.0 / 500.0;
    const SampledCurve c = sample(fp, 2.0, 8.0, 500);
    const EseReport es = ese(c);
    const EdeReport ed = ede(c);
    t.checks.push_back(near("chi_r", 4.028, es.chi_r, h));
    t.checks.push_back(near("chi_l", 5.972, es.chi_l, h));
    t.checks.push_back(near("chi_S", 5.0, es.chi_s, h));
    // The published table prints 3.884 where the surrounding text says
    // 3.848; accept either to one grid step.
    t.checks.push_back({"chi_F1 (3.848 or 3.884)", 3.848, ed.chi_f1, h,
                        std::abs(ed.chi_f1 - 3.848) <= h * (1.0 + 1e-9) ||
                            std::abs(ed.chi_f1 - 3.884) <= h * (1.0 + 1e-9)});
    t.checks.push_back(near("chi_F2", 6.152, ed.chi_f2, h));
    t.checks.push_back(flag("chi_D present", ed.chi_d.has_value()));
    if (ed.chi_d) t.checks.push_back(near("chi_D", 5.0, *ed.chi_d, h));
    out.push_back(std::move(t));
  }
  {
    TableReport t{"section-2.1.1", "Fisher-Pry [2,8] analytic reference", {}};
    const TheoreticalPoints tp = reference_points(fp, 2.0, 8.0);
    t.checks.push_back(near("x_l", 5.970315941, tp.x_l, tol_ref));
    t.checks.push_back(near("x_r", 4.029684059, tp.x_r, tol_ref));
    t.checks.push_back(near("x_F1", 3.850750196, tp.x_f1, tol_ref));
    t.checks.push_back(near("x_F2", 6.149249804, tp.x_f2, tol_ref));
    t.checks.push_back(near("x_S", 5.0, tp.x_s, tol_ref));
    t.checks.push_back(near("x_D", 5.0, tp.x_d, tol_ref));
    const auto [x1, x99] = capacity_points(fp);
    t.checks.push_back(near("x_1", 2.7024, x1, 1e-4));
    t.checks.push_back(near("x_99", 7.2976, x99, 1e-4));
    out.push_back(std::move(t));
  }
  {
    TableReport t{"table-II", "Fisher-Pry [2,8] n=500 r=0.05", {}};
    check_noisy(t, fp, 2.0, 8.0, 500, 0.05, 5.000, 5.012, 5.0, 5.0,
                replicates, seed);
    out.push_back(std::move(t));
  }
  {
    TableReport t{"table-III", "Fisher-Pry [4.2,8] n=500 noiseless", {}};
    check_gold(t, fp, 4.2, 8.0, 500,
               {4.2076, 5.3780, 4.7928, 4.2, 5.9708, 5.0854});
    out.push_back(std::move(t));
  }
  {
    TableReport t{"section-2.1.2",
                  "Fisher-Pry [4.2,8] analytic reference (x_r, x_F1 escape)",
                  {}};
    const TheoreticalPoints tp = reference_points(fp, 4.2, 8.0);
    t.checks.push_back(flag("x_r below a", tp.x_r_found && !tp.x_r_in));
    t.checks.push_back(flag("x_F1 below a", tp.x_f1_found && !tp.x_f1_in));
    t.checks.push_back(near("x_r", 4.029684059, tp.x_r, tol_ref));
    t.checks.push_back(near("x_S", 4.703504993, tp.x_s, tol_ref));
    t.checks.push_back(near("x_F2", 5.974322740, tp.x_f2, tol_ref));
    t.checks.push_back(
        near("predicted chi_D limit", 5.087161370, tp.chi_d_limit, tol_ref));
    out.push_back(std::move(t));
  }
  {
    TableReport t{"table-IV", "BESE on Fisher-Pry [4.2,8] noiseless", {}};
    check_refined(t, fp, 4.2, 8.0, 500, false, 5.0, 0.01, 6);
    out.push_back(std::move(t));
  }
  {
    TableReport t{"table-V", "BEDE on Fisher-Pry [4.2,8] noiseless", {}};
    check_refined(t, fp, 4.2, 8.0, 500, true, 5.0, 0.005, 6);
    out.push_back(std::move(t));
  }
  {
    TableReport t{"table-VII", "Gompertz [3.5,8] analytic reference", {}};
    const TheoreticalPoints tp = reference_points(gom, 3.5, 8.0);
    const auto [x1, x99] = capacity_points(gom);
    t.checks.push_back(near("x_1", 3.472820374, x1, tol_ref));
    t.checks.push_back(near("x_99", 9.600149227, x99, tol_ref));
    t.checks.push_back(near("x_r", 4.138928270, tp.x_r, tol_ref));
    t.checks.push_back(near("x_l", 5.887451706, tp.x_l, tol_ref));
    t.checks.push_back(near("x_S", 5.013189988, tp.x_s, tol_ref));
    t.checks.push_back(near("x_F1", 4.095750735, tp.x_f1, tol_ref));
    t.checks.push_back(near("x_F2", 6.290768183, tp.x_f2, tol_ref));
    t.checks.push_back(near("x_D", 5.193259460, tp.x_d, tol_ref));
    out.push_back(std::move(t));
  }
  {
    TableReport t{"table-VIII", "Gompertz [3.5,8] n=500 noiseless", {}};
    check_gold(t, gom, 3.5, 8.0, 500,
               {4.139, 5.885, 5.012, 4.094, 6.290, 5.192});
    out.push_back(std::move(t));
  }
  {
    TableReport t{"table-IX", "Gompertz [3.5,8] n=500 r=0.05", {}};
    check_noisy(t, gom, 3.5, 8.0, 500, 0.05, 5.0570, 5.2235, 5.012, 5.192,
                replicates, seed + 1);
    out.push_back(std::move(t));
  }
  {
    TableReport t{"gomeseitno", "BESE on Gompertz [3.5,8] noiseless", {}};
    check_refined(t, gom, 3.5, 8.0, 500, false, 5.0, 0.005, 8);
    out.push_back(std::move(t));
  }
  {
    TableReport t{"gomedeitno", "BEDE on Gompertz [3.5,8] noiseless", {}};
    check_refined(t, gom, 3.5, 8.0, 500, true, 5.0, 0.005, 8);
    out.push_back(std::move(t));
  }
  {
    TableReport t{"table-X", "Cubic [-2,7] n=500 noiseless", {}};
    check_gold(t, cub, -2.0, 7.0, 500, {0.25, 4.75, 2.50, -0.092, 5.092, 2.50});
    out.push_back(std::move(t));
  }
  {
    TableReport t{"section-2.3.1", "Cubic [-2,7] analytic reference", {}};
    const TheoreticalPoints tp = reference_points(cub, -2.0, 7.0);
    t.checks.push_back(near("x_r", 0.25, tp.x_r, tol_ref));
    t.checks.push_back(near("x_l", 4.75, tp.x_l, tol_ref));
    t.checks.push_back(near("x_F1", -0.09807621078, tp.x_f1, tol_ref));
    t.checks.push_back(near("x_F2", 5.098076211, tp.x_f2, tol_ref));
    t.checks.push_back(near("x_D", 2.50, tp.x_d, tol_ref));
    out.push_back(std::move(t));
  }
  {
    TableReport t{"table-XI", "Cubic [-2,7] n=500 r=2.0", {}};
    check_noisy(t, cub, -2.0, 7.0, 500, 2.0, 2.392, 2.302, 2.50, 2.50,
                replicates, seed + 2);
    out.push_back(std::move(t));
  }
  {
    TableReport t{"table-XIII", "Cubic [-2,8] n=500 noiseless", {}};
    check_gold(t, cub, -2.0, 8.0, 500, {-0.26, 4.74, 2.24, -0.42, 5.42, 2.50});
    out.push_back(std::move(t));
  }
  {
    TableReport t{"section-2.3.2", "Cubic [-2,8] analytic reference", {}};
    const TheoreticalPoints tp = reference_points(cub, -2.0, 8.0);
    t.checks.push_back(near("x_r", -0.25, tp.x_r, tol_ref));
    t.checks.push_back(near("x_l", 4.75, tp.x_l, tol_ref));
    t.checks.push_back(near("x_F1", -0.429732639, tp.x_f1, tol_ref));
    t.checks.push_back(near("x_F2", 5.429732639, tp.x_f2, tol_ref));
    t.checks.push_back(near("x_D", 2.50, tp.x_d, tol_ref));
    out.push_back(std::move(t));
  }
  {
    TableReport t{"table-XIV", "BESE on cubic [-2,8] noiseless", {}};
    check_refined(t, cub, -2.0, 8.0, 500, false, 2.5, 0.01, 8);
    out.push_back(std::move(t));
  }
  {
    TableReport t{"table-XVI", "Cubic [-2,8] n=500 r=2.0", {}};
    check_noisy(t, cub, -2.0, 8.0, 500, 2.0, 2.24, 2.70, 2.24, 2.50,
                replicates, seed + 3);
    out.push_back(std::move(t));
  }
  {
    TableReport t{"cubic-correction", "Third-order tangency correction", {}};
    const double worked = cubic_corrected_p(4.74, -0.26, -2.0, 8.0);
    t.checks.push_back(near("corrected p (printed chis)", 2.493333333, worked, 1e-9));
    const CubicCoefficients cc{-1.0 / 3.0, 2.5, -4.0, 0.5};
    const auto [xl, xr] = cubic_tangency(cc, -2.0, 8.0);
    t.checks.push_back(near("exact recovery", 2.5,
                            cubic_corrected_p(xl, xr, -2.0, 8.0), 1e-12));
    out.push_back(std::move(t));
  }
  return out;
}

void write_plot_data(const SampledCurve& curve, const std::string& dir) {
  namespace fs = std::filesystem;
  fs::create_directories(dir);
  auto open = [&](const std::string& name) {
    std::ofstream f(fs::path(dir) / name);
    if (!f) throw CsvError("cannot write " + (fs::path(dir) / name).string());
    f.precision(10);
    return f;
  };
  save_csv(curve, (fs::path(dir) / "curve.csv").string());
  {
    auto f = open("total_chord.csv");
    f << "x,y\n"
      << curve.a() << ',' << curve.ys.front() << '\n'
      << curve.b() << ',' << curve.ys.back() << '\n';
  }
  const std::vector<double> phi = total_residuals(curve);
  {
    auto f = open("residuals.csv");
    f << "x,phi\n";
    for (std::size_t i = 0; i < curve.points(); ++i)
      f << curve.xs[i] << ',' << phi[i] << '\n';
  }
  const SurfaceProfiles sp = surface_profiles(curve);
  {
    auto f = open("profile_left.csv");
    f << "x,s_left\n";
    for (std::size_t i = 0; i < curve.points(); ++i)
      f << curve.xs[i] << ',' << sp.left[i] << '\n';
  }
  {
    auto f = open("profile_right.csv");
    f << "x,s_right\n";
    for (std::size_t i = 0; i < curve.points(); ++i)
      f << curve.xs[i] << ',' << sp.right[i] << '\n';
  }
  const EseReport es = ese(curve);
  const EdeReport ed = ede(curve);
  {
    auto f = open("markers.csv");
    f << "name,x\n";
    f << "chi_r," << es.chi_r << "\nchi_l," << es.chi_l << "\nchi_S,"
      << es.chi_s << '\n';
    f << "chi_F1," << ed.chi_f1 << "\nchi_F2," << ed.chi_f2 << '\n';
    if (ed.chi_d) f << "chi_D," << *ed.chi_d << '\n';
  }
}

nlohmann::json to_json(const EseReport& r) {
  return {{"j_r", r.j_r}, {"j_l", r.j_l}, {"chi_r", r.chi_r},
          {"chi_l", r.chi_l}, {"chi_S", r.chi_s}};
}

nlohmann::json to_json(const EdeReport& r) {
  nlohmann::json j{{"j_1", r.j_1}, {"j_2", r.j_2}, {"chi_F1", r.chi_f1},
                   {"chi_F2", r.chi_f2}};
  if (r.chi_d)
    j["chi_D"] = *r.chi_d;
  else
    j["chi_D"] = nullptr;
  return j;
}

nlohmann::json to_json(const RefineResult& r) {
  nlohmann::json rows = nlohmann::json::array();
  for (const IterationRow& row : r.trace.rows) {
    nlohmann::json jr{{"k", row.k}, {"lo", row.lo}, {"hi", row.hi},
                      {"ese", to_json(row.ese)}};
    if (row.ede) jr["ede"] = to_json(*row.ede);
    rows.push_back(std::move(jr));
  }
  nlohmann::json j{{"rows", std::move(rows)},
                   {"stop_reason", to_string(r.trace.stop)}};
  if (r.estimate)
    j["estimate"] = *r.estimate;
  else
    j["estimate"] = nullptr;
  return j;
}

nlohmann::json to_json(const ExperimentConfig& c) {
  nlohmann::json j;
  nlohmann::json curve;
  switch (c.curve.family) {
    case CurveFamily::FisherPry: curve["family"] = "fisher-pry"; break;
    case CurveFamily::Gompertz: curve["family"] = "gompertz"; break;
    case CurveFamily::Cubic: curve["family"] = "cubic"; break;
  }
  if (c.curve.family == CurveFamily::Cubic)
    curve["coefficients"] = c.curve.coef;
  else
    curve["capacity"] = c.curve.capacity;
  curve["p"] = c.curve.p;
  j["curve"] = std::move(curve);
  j["a"] = c.a;
  j["b"] = c.b;
  j["n"] = c.n;
  j["replicates"] = c.replicates;
  j["tolerance"] = c.tolerance;
  j["min_points"] = c.min_points;
  if (c.noise) {
    j["noise"] = {
        {"distribution",
         c.noise->dist == NoiseSpec::Dist::Uniform ? "uniform" : "normal"},
        {"scale", c.noise->scale},
        {"seed", c.noise->seed}};
  } else {
    j["noise"] = nullptr;
  }
  nlohmann::json methods = nlohmann::json::array();
  for (Method m : c.methods) methods.push_back(to_string(m));
  j["methods"] = std::move(methods);
  return j;
}

nlohmann::json to_json(const ExperimentReport& r) {
  nlohmann::json reps = nlohmann::json::array();
  for (const ReplicateOutcome& rep : r.replicates) {
    nlohmann::json jr{{"index", rep.index}};
    if (rep.ese) jr["ese"] = to_json(*rep.ese);
    if (rep.ede) jr["ede"] = to_json(*rep.ede);
    if (rep.bese) jr["bese"] = to_json(*rep.bese);
    if (rep.bede) jr["bede"] = to_json(*rep.bede);
    if (rep.corrected_p) jr["cubic_correction"] = *rep.corrected_p;
    if (rep.error) jr["error"] = *rep.error;
    reps.push_back(std::move(jr));
  }
  nlohmann::json summary;
  for (const auto& [label, s] : r.summary)
    summary[label] = {{"count", s.count}, {"mean", s.mean}, {"sd", s.sd},
                      {"bias", s.bias}};
  return {{"config", to_json(r.config)}, {"replicates", std::move(reps)},
          {"summary", std::move(summary)}};
}

nlohmann::json to_json(const TableReport& r) {
  nlohmann::json checks = nlohmann::json::array();
  for (const TableCheck& c : r.checks)
    checks.push_back({{"label", c.label}, {"expected", c.expected},
                      {"actual", c.actual}, {"tolerance", c.tolerance},
                      {"pass", c.pass}});
  return {{"name", r.name}, {"description", r.description},
          {"pass", r.pass()}, {"checks", std::move(checks)}};
}

}  // namespace inflect
