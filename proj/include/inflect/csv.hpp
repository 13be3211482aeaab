#pragma once

#include <stdexcept>
#include <string>

#include "inflect/model.hpp"

namespace inflect {

struct CsvError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Reads a two-column numeric x,y file. An optional single header line is
/// skipped; rows may appear in any order and are sorted on load. Duplicate
/// abscissae, malformed rows, and files with fewer than 4 data rows raise
/// CsvError with the offending line number.
SampledCurve load_csv(const std::string& path);

/// Writes the curve as "x,y" rows with a header line, 10 significant digits.
void save_csv(const SampledCurve& curve, const std::string& path);

}  // namespace inflect
