#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "inflect/estimators.hpp"
#include "inflect/model.hpp"
#include "inflect/refine.hpp"

#include <nlohmann/json_fwd.hpp>

namespace inflect {

enum class Method { Ese, Ede, Bese, Bede, CubicCorrection };

std::string to_string(Method m);
std::optional<Method> method_from_string(const std::string& name);

struct ExperimentConfig {
  CurveSpec curve;
  double a = 0.0;
  double b = 1.0;
  std::size_t n = 500;
  std::optional<NoiseSpec> noise;
  std::vector<Method> methods;
  std::size_t replicates = 1;  // > 1 requires noise
  double tolerance = 1e-8;     // BESE/BEDE stopping tolerance
  std::size_t min_points = 4;
};

/// Results of one replicate. Estimator errors are recorded here instead of
/// aborting the batch.
struct ReplicateOutcome {
  std::size_t index = 0;
  std::optional<EseReport> ese;
  std::optional<EdeReport> ede;
  std::optional<RefineResult> bese;
  std::optional<RefineResult> bede;
  std::optional<double> corrected_p;
  std::optional<std::string> error;

  /// Point estimate per method label, when the method produced one.
  std::map<std::string, double> estimates() const;
};

struct EstimatorSummary {
  std::size_t count = 0;  // replicates that produced an estimate
  double mean = 0.0;
  double sd = 0.0;
  double bias = 0.0;  // mean - true inflection point
};

struct ExperimentReport {
  ExperimentConfig config;
  std::vector<ReplicateOutcome> replicates;
  std::map<std::string, EstimatorSummary> summary;
};

/// Samples the configured curve, optionally perturbs it (replicate k uses
/// seed + k), and runs the requested methods. Deterministic given the config.
ExperimentReport run_experiment(const ExperimentConfig& config);

struct VarianceRow {
  std::size_t n = 0;
  double empirical = 0.0;    // sample variance of the composite trapezoid
  double theoretical = 0.0;  // (b - a)^2 sigma^2 / (2 n)
};

/// Empirical vs closed-form variance of the composite trapezoid of noisy
/// samples, one row per grid size. Requires noise and replicates >= 2.
std::vector<VarianceRow> variance_scaling_study(
    const ExperimentConfig& config, const std::vector<std::size_t>& n_values);

struct TableCheck {
  std::string label;
  double expected = 0.0;
  double actual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

struct TableReport {
  std::string name;
  std::string description;
  std::vector<TableCheck> checks;

  bool pass() const;
};

/// Runs the bundled experiment grid and checks each report against its
/// published values. Deterministic tables are checked to one grid step (or
/// 1e-6 for the analytic reference values); single noisy draws are checked
/// statistically: the published value must fall inside the empirical 99%
/// interval over `replicates` seeds and the replicate mean must stay within
/// 0.05 of the noiseless estimate.
std::vector<TableReport> reproduce_paper(std::size_t replicates = 200,
                                         std::uint64_t seed = 987654321);

/// Plot-ready CSV series for one analyzed curve: the data, the total chord,
/// the total residuals, both surface profiles, and the estimate markers.
void write_plot_data(const SampledCurve& curve, const std::string& dir);

nlohmann::json to_json(const EseReport& r);
nlohmann::json to_json(const EdeReport& r);
nlohmann::json to_json(const RefineResult& r);
nlohmann::json to_json(const ExperimentConfig& c);
nlohmann::json to_json(const ExperimentReport& r);
nlohmann::json to_json(const TableReport& r);

}  // namespace inflect
