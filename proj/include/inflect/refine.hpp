#pragma once

#include <optional>
#include <string>
#include <vector>

#include "inflect/estimators.hpp"
#include "inflect/model.hpp"

namespace inflect {

enum class StopReason { IntervalCollapsed, ToleranceMet, NonDetection, MinPoints };

std::string to_string(StopReason r);

/// One refinement pass. Indices are global (into the original curve); the
/// pass analyzed the closed index range [lo, hi]. EDE fields are populated
/// by bede only.
struct IterationRow {
  int k = 0;
  std::size_t lo = 0;
  std::size_t hi = 0;
  EseReport ese;
  std::optional<EdeReport> ede;
};

struct IterationTrace {
  std::vector<IterationRow> rows;
  StopReason stop = StopReason::IntervalCollapsed;
};

struct RefineResult {
  std::optional<double> estimate;
  IterationTrace trace;
};

/// Bisection-style ESE refinement: re-runs ESE on its own bracketing index
/// range [j_r, j_l] until the indices cross, successive chi_s values differ
/// by less than e, or fewer than min_points points remain. The estimate is
/// the last chi_s and is always present.
RefineResult bese(const SampledCurve& curve, double e = 1e-8,
                  std::size_t min_points = 4);

/// Bisection-style EDE refinement driven by the [j_1, j_2] range; ESE is
/// evaluated on each subrange for the trace. The estimate is the last
/// successful chi_d and is absent when no pass detected an inflection.
RefineResult bede(const SampledCurve& curve, double e = 1e-8,
                  std::size_t min_points = 4);

}  // namespace inflect
