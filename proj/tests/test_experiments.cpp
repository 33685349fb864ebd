#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cvarn/experiments.hpp"

using namespace cvarn;

namespace {

namespace fs = std::filesystem;

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("cvarn_test_" + std::to_string(::getpid()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string file(const std::string& name) const { return (path / name).string(); }
};

bool same_value(double a, double b) {
  return a == b || (std::isnan(a) && std::isnan(b));
}

ExperimentConfig tiny_ex1() {
  ExperimentConfig cfg;
  cfg.experiment = "ex1";
  cfg.n_min = 3;
  cfg.n_max = 11;
  cfg.step = 4;
  return cfg;
}

}  // namespace

TEST_CASE("csv output parses back to the identical table") {
  ResultTable table;
  table.columns = {"n", "err_a", "err_b"};
  table.rows = {{3, 0.1234567890123456789, 1e-300},
                {5, 6.02214076e23, std::numeric_limits<double>::quiet_NaN()},
                {7, -0.0, 4.9e-324}};
  std::stringstream buffer;
  write_csv(table, buffer);
  const ResultTable parsed = read_csv(buffer);
  REQUIRE(parsed.columns == table.columns);
  REQUIRE(parsed.rows.size() == table.rows.size());
  for (size_t r = 0; r < table.rows.size(); ++r)
    for (size_t c = 0; c < table.columns.size(); ++c)
      CHECK(same_value(parsed.rows[r][c], table.rows[r][c]));
}

TEST_CASE("re-running a config reproduces the csv byte for byte") {
  TempDir dir;
  ExperimentConfig cfg = tiny_ex1();
  cfg.out_csv = dir.file("a.csv");
  run_experiment(cfg);
  cfg.out_csv = dir.file("b.csv");
  run_experiment(cfg);
  std::ifstream a(dir.file("a.csv")), b(dir.file("b.csv"));
  std::stringstream sa, sb;
  sa << a.rdbuf();
  sb << b.rdbuf();
  CHECK(sa.str() == sb.str());
  CHECK(!sa.str().empty());
}

TEST_CASE("experiment tables carry the documented columns") {
  ExperimentConfig cfg = tiny_ex1();
  cfg.basis = BasisSelect::Hermite;
  const ResultTable table = run_experiment(cfg);
  CHECK(table.columns ==
        std::vector<std::string>{"n", "err_f_naive", "err_fp_naive", "err_f_arnoldi",
                                 "err_fp_arnoldi"});
  REQUIRE(table.rows.size() == 3);  // n = 3, 7, 11
  for (const auto& row : table.rows)
    for (double v : row) CHECK(std::isfinite(v));

  cfg.basis = BasisSelect::Both;
  cfg.baseline = false;
  const ResultTable both = run_experiment(cfg);
  CHECK(both.columns ==
        std::vector<std::string>{"n", "err_f_arnoldi", "err_fp_arnoldi", "err_f_values",
                                 "err_fp_values"});
}

TEST_CASE("unknown experiment ids are rejected") {
  ExperimentConfig cfg;
  cfg.experiment = "ex9";
  CHECK_THROWS_AS(run_experiment(cfg), std::invalid_argument);
  cfg.experiment = "";
  CHECK_THROWS_AS(run_experiment(cfg), std::invalid_argument);
}

TEST_CASE("invalid ranges are rejected") {
  ExperimentConfig cfg = tiny_ex1();
  cfg.n_min = 9;
  cfg.n_max = 5;
  CHECK_THROWS_AS(run_experiment(cfg), std::invalid_argument);
  cfg = tiny_ex1();
  cfg.points_factor = 0.0;
  CHECK_THROWS_AS(run_experiment(cfg), std::invalid_argument);
}

TEST_CASE("unwritable output paths raise") {
  ExperimentConfig cfg = tiny_ex1();
  cfg.out_csv = "/nonexistent_dir/out.csv";
  CHECK_THROWS_AS(run_experiment(cfg), std::runtime_error);
}

TEST_CASE("plots render for full and single-row tables, never for empty ones") {
  TempDir dir;
  ResultTable single;
  single.columns = {"n", "err"};
  single.rows = {{10, 1e-5}};
  emit_plot(single, dir.file("single.svg"));
  std::ifstream in(dir.file("single.svg"));
  std::stringstream svg;
  svg << in.rdbuf();
  CHECK(svg.str().find("<svg") != std::string::npos);
  CHECK(svg.str().find("circle") != std::string::npos);

  const ResultTable table = run_experiment(tiny_ex1());
  emit_plot(table, dir.file("ex1.svg"));
  std::ifstream in2(dir.file("ex1.svg"));
  std::stringstream svg2;
  svg2 << in2.rdbuf();
  // one polyline per error series
  size_t series = 0;
  for (size_t pos = 0; (pos = svg2.str().find("<polyline", pos)) != std::string::npos; ++pos)
    ++series;
  CHECK(series == table.columns.size() - 1);

  ResultTable empty;
  empty.columns = {"n", "err"};
  CHECK_THROWS_AS(emit_plot(empty, dir.file("empty.svg")), std::invalid_argument);
  CHECK(!fs::exists(dir.file("empty.svg")));
}

#ifdef CVARN_CLI_PATH
TEST_CASE("cli exit codes and csv output") {
  TempDir dir;
  const std::string cli = CVARN_CLI_PATH;
  const std::string out = dir.file("ex1.csv");
  const std::string plot = dir.file("ex1.svg");

  int rc = std::system((cli + " experiment ex1 --n-min 3 --n-max 9 --step 2 --basis hermite"
                              " --out " + out + " --plot " + plot + " >/dev/null 2>&1")
                           .c_str());
  REQUIRE(WIFEXITED(rc));
  CHECK(WEXITSTATUS(rc) == 0);
  const ResultTable table = read_csv(out);
  CHECK(table.rows.size() == 4);
  CHECK(fs::exists(plot));

  rc = std::system((cli + " experiment ex9 >/dev/null 2>&1").c_str());
  REQUIRE(WIFEXITED(rc));
  CHECK(WEXITSTATUS(rc) == 2);

  // duplicate nodes with a values-only fit break down: exit code 3
  {
    std::ofstream data(dir.file("dup.csv"));
    data << "x,f\n0,1\n0,1\n1,2\n1,2\n2,3\n";
  }
  rc = std::system((cli + " fit --input " + dir.file("dup.csv") +
                    " --degree 3 --basis values --out " + dir.file("m.json") +
                    " >/dev/null 2>&1")
                       .c_str());
  REQUIRE(WIFEXITED(rc));
  CHECK(WEXITSTATUS(rc) == 3);

  // fit + eval round trip: y(0.5) for f(x) = x^2 with derivative data
  {
    std::ofstream data(dir.file("sq.csv"));
    data << "x,f,fp\n";
    for (double x : {-1.0, -0.5, 0.0, 0.5, 1.0})
      data << x << "," << x * x << "," << 2 * x << "\n";
  }
  rc = std::system((cli + " fit --input " + dir.file("sq.csv") + " --degree 2 --out " +
                    dir.file("sq.json") + " >/dev/null 2>&1")
                       .c_str());
  REQUIRE(WIFEXITED(rc));
  REQUIRE(WEXITSTATUS(rc) == 0);
  rc = std::system((cli + " eval --model " + dir.file("sq.json") +
                    " --points -1:1:5 --order 1 --out " + dir.file("sq_out.csv") +
                    " >/dev/null 2>&1")
                       .c_str());
  REQUIRE(WIFEXITED(rc));
  REQUIRE(WEXITSTATUS(rc) == 0);
  const ResultTable vals = read_csv(dir.file("sq_out.csv"));
  CHECK(vals.columns == std::vector<std::string>{"s", "y", "y1"});
  const auto y = vals.column("y");
  const auto y1 = vals.column("y1");
  const auto s = vals.column("s");
  for (size_t i = 0; i < s.size(); ++i) {
    CHECK(y[i] == doctest::Approx(s[i] * s[i]).epsilon(1e-12));
    CHECK(y1[i] == doctest::Approx(2 * s[i]).epsilon(1e-12));
  }
}
#endif
