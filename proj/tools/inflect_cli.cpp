// Command-line front end: analyze a CSV dataset, simulate a catalog curve,
// or run the published-results reproduction bundle.
//
// Exit codes: 0 an estimate was produced (or all reproduction checks pass),
// 1 malformed input or usage error, 2 no method resolved an inflection.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "inflect/chords.hpp"
#include "inflect/csv.hpp"
#include "inflect/cubic.hpp"
#include "inflect/estimators.hpp"
#include "inflect/harness.hpp"
#include "inflect/model.hpp"
#include "inflect/refine.hpp"

namespace {

using namespace inflect;

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitNoDetection = 2;

struct CommonOpts {
  std::vector<std::string> methods{"ese", "ede"};
  std::string format = "plain";
  std::string shape = "auto";
  double tolerance = 1e-8;
  std::size_t min_points = 4;
  std::string plot_dir;
};

CurveShape parse_shape(const std::string& s) {
  if (s == "convex-concave") return CurveShape::ConvexConcave;
  if (s == "concave-convex") return CurveShape::ConcaveConvex;
  return CurveShape::Auto;
}

std::vector<Method> parse_methods(const std::vector<std::string>& names) {
  std::vector<Method> out;
  for (const std::string& chunk : names) {
    std::stringstream ss(chunk);
    std::string item;
    while (std::getline(ss, item, ',')) {
      auto m = method_from_string(item);
      if (!m) throw CLI::ValidationError("--method", "unknown method " + item);
      out.push_back(*m);
    }
  }
  return out;
}

void print_plain(std::ostream& os, const ReplicateOutcome& out) {
  os.precision(10);
  if (out.ese) {
    os << "ese: chi_r=" << out.ese->chi_r << " chi_l=" << out.ese->chi_l
       << " chi_S=" << out.ese->chi_s << " (j_r=" << out.ese->j_r
       << ", j_l=" << out.ese->j_l << ")\n";
  }
  if (out.ede) {
    os << "ede: chi_F1=" << out.ede->chi_f1 << " chi_F2=" << out.ede->chi_f2;
    if (out.ede->chi_d)
      os << " chi_D=" << *out.ede->chi_d;
    else
      os << " chi_D=none (no inflection resolvable)";
    os << " (j_1=" << out.ede->j_1 << ", j_2=" << out.ede->j_2 << ")\n";
  }
  auto print_trace = [&](const char* name, const RefineResult& r) {
    os << name << ":";
    if (r.estimate)
      os << " estimate=" << *r.estimate;
    else
      os << " estimate=none";
    os << " stop=" << to_string(r.trace.stop) << '\n';
    for (const IterationRow& row : r.trace.rows) {
      os << "  k=" << row.k << " [" << row.lo << "," << row.hi << "]"
         << " chi_r=" << row.ese.chi_r << " chi_l=" << row.ese.chi_l
         << " chi_S=" << row.ese.chi_s;
      if (row.ede) {
        os << " chi_F1=" << row.ede->chi_f1 << " chi_F2=" << row.ede->chi_f2;
        if (row.ede->chi_d) os << " chi_D=" << *row.ede->chi_d;
      }
      os << '\n';
    }
  };
  if (out.bese) print_trace("bese", *out.bese);
  if (out.bede) print_trace("bede", *out.bede);
  if (out.corrected_p) os << "cubic-correction: p=" << *out.corrected_p << '\n';
  if (out.error) os << "error: " << *out.error << '\n';
}

void print_csv(std::ostream& os, const ReplicateOutcome& out) {
  os.precision(10);
  os << "method,estimate\n";
  for (const auto& [label, v] : out.estimates()) os << label << ',' << v << '\n';
}

nlohmann::json outcome_json(const ReplicateOutcome& out) {
  nlohmann::json j;
  if (out.ese) j["ese"] = to_json(*out.ese);
  if (out.ede) j["ede"] = to_json(*out.ede);
  if (out.bese) j["bese"] = to_json(*out.bese);
  if (out.bede) j["bede"] = to_json(*out.bede);
  if (out.corrected_p) j["cubic_correction"] = *out.corrected_p;
  if (out.error) j["error"] = *out.error;
  return j;
}

ReplicateOutcome analyze_curve(const SampledCurve& data,
                               const std::vector<Method>& methods,
                               const CommonOpts& opts) {
  ReplicateOutcome out;
  const Oriented oriented = orient(data, parse_shape(opts.shape));
  const SampledCurve& c = oriented.curve;
  auto has = [&](Method m) {
    return std::find(methods.begin(), methods.end(), m) != methods.end();
  };
  if (has(Method::Ese) || has(Method::CubicCorrection)) out.ese = ese(c);
  if (has(Method::Ede)) out.ede = ede(c);
  if (has(Method::Bese)) out.bese = bese(c, opts.tolerance, opts.min_points);
  if (has(Method::Bede)) out.bede = bede(c, opts.tolerance, opts.min_points);
  if (has(Method::CubicCorrection))
    out.corrected_p =
        cubic_corrected_p(out.ese->chi_l, out.ese->chi_r, data.a(), data.b());
  if (!opts.plot_dir.empty()) write_plot_data(c, opts.plot_dir);
  return out;
}

int report_outcome(const ReplicateOutcome& out, const CommonOpts& opts) {
  if (opts.format == "json")
    std::cout << outcome_json(out).dump(2) << '\n';
  else if (opts.format == "csv")
    print_csv(std::cout, out);
  else
    print_plain(std::cout, out);
  return out.estimates().empty() ? kExitNoDetection : kExitOk;
}

CurveSpec make_spec(const std::string& family, double capacity, double p,
                    const std::vector<double>& coef) {
  if (family == "fisher-pry") return CurveSpec::fisher_pry(capacity, p);
  if (family == "gompertz") return CurveSpec::gompertz(capacity, p);
  if (family == "cubic") {
    if (coef.size() != 4)
      throw CLI::ValidationError("--coef", "cubic needs 4 coefficients");
    return CurveSpec::cubic(coef[0], coef[1], coef[2], coef[3]);
  }
  throw CLI::ValidationError("--curve", "unknown family " + family);
}

std::optional<NoiseSpec> parse_noise(const std::string& s, std::uint64_t seed) {
  if (s.empty()) return std::nullopt;
  const auto colon = s.find(':');
  const std::string kind = s.substr(0, colon);
  NoiseSpec ns;
  ns.seed = seed;
  if (kind == "uniform")
    ns.dist = NoiseSpec::Dist::Uniform;
  else if (kind == "normal")
    ns.dist = NoiseSpec::Dist::Normal;
  else
    throw CLI::ValidationError("--noise", "expected uniform:<r> or normal:<sigma>");
  if (colon == std::string::npos)
    throw CLI::ValidationError("--noise", "missing scale, e.g. uniform:0.05");
  ns.scale = std::stod(s.substr(colon + 1));
  return ns;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Inflection point estimation for convex/concave sampled data"};
  app.require_subcommand(1);

  CommonOpts opts;
  std::uint64_t seed = 0;
  if (const char* env = std::getenv("INFLECT_SEED")) seed = std::strtoull(env, nullptr, 10);

  // analyze
  std::string input_path;
  auto* analyze = app.add_subcommand("analyze", "Analyze a two-column x,y CSV file");
  analyze->add_option("input", input_path, "CSV file")->required();
  analyze->add_option("--method", opts.methods, "ese,ede,bese,bede,cubic-correction");
  analyze->add_option("--format", opts.format, "json|csv|plain");
  analyze->add_option("--shape", opts.shape, "convex-concave|concave-convex|auto");
  analyze->add_option("--tolerance", opts.tolerance, "refinement tolerance e");
  analyze->add_option("--min-points", opts.min_points, "refinement minimum points");
  analyze->add_option("--plot-dir", opts.plot_dir, "emit plot-data CSV series here");

  // simulate
  std::string family = "fisher-pry", noise_arg, out_csv;
  double a = 2.0, b = 8.0, capacity = 10.0, p = 5.0;
  std::size_t n = 500;
  std::vector<double> coef;
  auto* simulate = app.add_subcommand("simulate", "Sample a catalog curve and analyze it");
  simulate->add_option("--curve", family, "fisher-pry|gompertz|cubic");
  simulate->add_option("--a", a, "interval start");
  simulate->add_option("--b", b, "interval end");
  simulate->add_option("--n", n, "number of subintervals");
  simulate->add_option("--capacity", capacity, "sigmoid capacity L");
  simulate->add_option("--p", p, "sigmoid inflection abscissa");
  simulate->add_option("--coef", coef, "cubic coefficients alpha beta gamma delta")->expected(4);
  simulate->add_option("--noise", noise_arg, "uniform:<r> or normal:<sigma>");
  simulate->add_option("--seed", seed, "noise seed");
  simulate->add_option("--out", out_csv, "write the sampled data set here");
  simulate->add_option("--method", opts.methods, "ese,ede,bese,bede,cubic-correction");
  simulate->add_option("--format", opts.format, "json|csv|plain");
  simulate->add_option("--shape", opts.shape, "convex-concave|concave-convex|auto");
  simulate->add_option("--tolerance", opts.tolerance, "refinement tolerance e");
  simulate->add_option("--min-points", opts.min_points, "refinement minimum points");
  simulate->add_option("--plot-dir", opts.plot_dir, "emit plot-data CSV series here");

  // reproduce
  std::string out_dir = "reproduction", only;
  std::size_t replicates = 200;
  std::uint64_t rep_seed = 987654321;
  auto* reproduce = app.add_subcommand("reproduce", "Run the published-table reproduction bundle");
  reproduce->add_option("--out", out_dir, "output directory for the JSON reports");
  reproduce->add_option("--only", only, "run a single named report");
  reproduce->add_option("--replicates", replicates, "seeds per statistical envelope");
  reproduce->add_option("--seed", rep_seed, "base seed for the envelopes");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& ex) {
    const int code = app.exit(ex);
    return code == 0 ? kExitOk : kExitError;
  }

  try {
    if (*analyze) {
      const SampledCurve data = load_csv(input_path);
      return report_outcome(analyze_curve(data, parse_methods(opts.methods), opts), opts);
    }
    if (*simulate) {
      const CurveSpec spec = make_spec(family, capacity, p, coef);
      SampledCurve data = sample(spec, a, b, n);
      if (auto ns = parse_noise(noise_arg, seed)) data = add_noise(data, *ns);
      if (!out_csv.empty()) save_csv(data, out_csv);
      return report_outcome(analyze_curve(data, parse_methods(opts.methods), opts), opts);
    }
    // reproduce
    const std::vector<TableReport> reports = reproduce_paper(replicates, rep_seed);
    std::filesystem::create_directories(out_dir);
    bool all_pass = true;
    bool matched = false;
    for (const TableReport& t : reports) {
      if (!only.empty() && t.name != only) continue;
      matched = true;
      std::ofstream f(std::filesystem::path(out_dir) / (t.name + ".json"));
      f << to_json(t).dump(2) << '\n';
      std::cout << (t.pass() ? "PASS " : "FAIL ") << t.name << " — "
                << t.description << '\n';
      if (!t.pass()) {
        all_pass = false;
        for (const TableCheck& c : t.checks)
          if (!c.pass)
            std::cout << "  check failed: " << c.label << " expected "
                      << c.expected << " got " << c.actual << '\n';
      }
    }
    if (!only.empty() && !matched) {
      std::cerr << "no report named " << only << '\n';
      return kExitError;
    }
    return all_pass ? kExitOk : kExitNoDetection;
  } catch (const CsvError& ex) {
    std::cerr << "error: " << ex.what() << '\n';
    return kExitError;
  } catch (const OrientationError& ex) {
    std::cerr << "error: " << ex.what() << '\n';
    return kExitError;
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << '\n';
    return kExitError;
  }
}
