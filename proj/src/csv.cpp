#include "inflect/csv.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <numeric>
#include <sstream>
#include <vector>

namespace inflect {

namespace {

bool parse_double(std::string_view s, double& out) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  if (s.empty()) return false;
  const char* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, out);
  return ec == std::errc{} && ptr == end;
}

bool parse_row(const std::string& line, double& x, double& y) {
  const auto comma = line.find(',');
  if (comma == std::string::npos) return false;
  return parse_double(std::string_view(line).substr(0, comma), x) &&
         parse_double(std::string_view(line).substr(comma + 1), y);
}

}  // namespace

SampledCurve load_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CsvError("cannot open " + path);
  std::vector<double> xs, ys;
  std::vector<std::size_t> lines;  // source line per row, for diagnostics
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    double x, y;
    if (!parse_row(line, x, y)) {
      if (lineno == 1) continue;  // header
      throw CsvError(path + ": malformed row at line " + std::to_string(lineno));
    }
    xs.push_back(x);
    ys.push_back(y);
    lines.push_back(lineno);
  }
  if (xs.size() < 4)
    throw CsvError(path + ": needs at least 4 data rows, got " +
                   std::to_string(xs.size()));

  std::vector<std::size_t> order(xs.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t i, std::size_t j) { return xs[i] < xs[j]; });
  std::vector<double> sx(xs.size()), sy(xs.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    sx[i] = xs[order[i]];
    sy[i] = ys[order[i]];
    if (i > 0 && sx[i] == sx[i - 1])
      throw CsvError(path + ": duplicate x value at line " +
                     std::to_string(lines[order[i]]));
  }
  return SampledCurve(std::move(sx), std::move(sy));
}

void save_csv(const SampledCurve& curve, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw CsvError("cannot write " + path);
  out << "x,y\n";
  out.precision(10);
  for (std::size_t i = 0; i < curve.points(); ++i)
    out << curve.xs[i] << ',' << curve.ys[i] << '\n';
  if (!out) throw CsvError("write failed for " + path);
}

}  // namespace inflect
