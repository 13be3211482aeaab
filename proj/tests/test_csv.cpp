#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <string>

#include "inflect/csv.hpp"
#include "inflect/model.hpp"

using namespace inflect;

namespace {

std::filesystem::path write_tmp(const std::string& name,
                                const std::string& body) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream out(path);
  out << body;
  return path;
}

}  // namespace

TEST_CASE("load_csv accepts plain and headed files and sorts rows") {
  const auto plain = write_tmp("inflect-csv-plain.csv",
                               "3,9\n1,1\n2,4\n4,16\n");
  const SampledCurve c1 = load_csv(plain.string());
  CHECK(c1.xs == std::vector<double>{1, 2, 3, 4});
  CHECK(c1.ys == std::vector<double>{1, 4, 9, 16});

  const auto headed = write_tmp("inflect-csv-headed.csv",
                                "x,y\n1,1\n2,4\n3,9\n4,16\n");
  const SampledCurve c2 = load_csv(headed.string());
  CHECK(c2.xs == c1.xs);
  CHECK(c2.ys == c1.ys);

  std::filesystem::remove(plain);
  std::filesystem::remove(headed);
}

TEST_CASE("load_csv rejects malformed input with line numbers") {
  const struct {
    const char* name;
    const char* body;
    const char* needle;
  } cases[] = {
      {"dup.csv", "1,1\n2,4\n2,5\n3,9\n4,16\n", ""},  // duplicate abscissa
      {"short.csv", "1,1\n2,4\n3,9\n", ""},           // fewer than 4 rows
      {"cols.csv", "1,1\n2\n3,9\n4,16\n", "2"},       // missing column, line 2
      {"junk.csv", "1,1\n2,banana\n3,9\n4,16\n", "2"},
  };
  for (const auto& c : cases) {
    const auto path = write_tmp(c.name, c.body);
    try {
      load_csv(path.string());
      FAIL_CHECK(c.name);
    } catch (const CsvError& e) {
      const std::string what = e.what();
      if (*c.needle) CHECK_MESSAGE(what.find(c.needle) != std::string::npos, what);
    }
    std::filesystem::remove(path);
  }
  CHECK_THROWS_AS(load_csv("/nonexistent/inflect.csv"), CsvError);
}

TEST_CASE("save/load round trip") {
  const SampledCurve c = sample(CurveSpec::gompertz(), 3.5, 8, 50);
  const auto path = std::filesystem::temp_directory_path() / "inflect-rt.csv";
  save_csv(c, path.string());
  const SampledCurve back = load_csv(path.string());
  REQUIRE(back.points() == c.points());
  for (std::size_t i = 0; i < c.points(); ++i) {
    CHECK(back.xs[i] == doctest::Approx(c.xs[i]).epsilon(1e-9));
    CHECK(back.ys[i] == doctest::Approx(c.ys[i]).epsilon(1e-9));
  }
  std::filesystem::remove(path);
}
