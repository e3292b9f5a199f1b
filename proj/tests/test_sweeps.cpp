#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "moshinsky/cli.hpp"
#include "moshinsky/figures.hpp"
#include "moshinsky/sweep_table.hpp"

using namespace moshinsky;
using doctest::Approx;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("moshinsky_test_" + name);
}

}  // namespace

TEST_CASE("table validation") {
  SweepTable t({"K", "value"});
  CHECK_THROWS_AS(t.add_row({1.0}), std::invalid_argument);
  t.add_row({0.0, 1.0});
  CHECK_THROWS_AS(t.add_row({0.0, 2.0}), std::invalid_argument);
  CHECK_THROWS_AS(t.column("missing"), std::out_of_range);
  CHECK(format_real(0.1) == "0.1");
  CHECK(format_real(1.0 / 3.0) == "0.333333333333");
  CHECK(format_real(1e-20) == "1e-20");
}

TEST_CASE("CSV round trip at 12 significant digits") {
  const auto table = figure_table("fig6", std::nullopt, std::nullopt, std::nullopt);
  const auto csv = table.to_csv();
  const auto parsed = SweepTable::parse_csv(csv);
  CHECK(parsed.header() == table.header());
  REQUIRE(parsed.rows().size() == table.rows().size());
  for (std::size_t i = 0; i < parsed.rows().size(); ++i)
    for (std::size_t j = 0; j < parsed.header().size(); ++j)
      CHECK(format_real(parsed.rows()[i][j]) == format_real(table.rows()[i][j]));
  CHECK(parsed.to_csv() == csv);
  CHECK_THROWS(SweepTable::parse_csv(std::string("a,b\n1,x\n")));
}

TEST_CASE("figure defaults and spot rows") {
  const auto fig1 = figure_table("fig1", std::nullopt, std::nullopt, std::nullopt);
  REQUIRE(fig1.rows().size() == 101);
  CHECK(fig1.rows()[0] == std::vector<double>{0.0, 3.0, 3.0, 0.0});

  const auto fig4 = figure_table("fig4", std::nullopt, std::nullopt, std::nullopt);
  CHECK(fig4.rows().back()[0] == 1.0);
  CHECK(fig4.column("mu0").back() == Approx(0.94516).epsilon(1e-5));
  CHECK(fig4.column("mu1").back() == Approx(0.017603).epsilon(1e-5));

  const auto fig3 = figure_table("fig3", std::nullopt, std::nullopt, std::nullopt);
  CHECK(fig3.header()[0] == "r");
  CHECK(fig3.rows().size() == 121);
  CHECK(fig3.rows().back()[0] == Approx(3.0));

  const auto fig9 = figure_table("fig9", std::nullopt, std::nullopt, 5);
  CHECK(fig9.header().size() == 5);

  const auto fig10 = figure_table("fig10", std::nullopt, std::nullopt, std::nullopt);
  CHECK(fig10.rows().back()[0] == Approx(0.40854).epsilon(1e-5));
  CHECK(fig10.rows().back()[1] == Approx(0.94157).epsilon(1e-5));

  CHECK_THROWS_AS(figure_table("fig1", 1.0, 0.5, 10), std::invalid_argument);
  CHECK_THROWS_AS(figure_table("fig1", 0.0, 1.0, 1), std::invalid_argument);
  CHECK_FALSE(is_figure("fig11"));
}

TEST_CASE("registry") {
  for (const char* name : {"exact-energy", "hf-energy", "ecorr", "overlap", "entropy", "purity", "concurrence",
                           "ising-entropy", "alpha-min"}) {
    CHECK(find_quantity(name) != nullptr);
  }
  CHECK(find_quantity("nope") == nullptr);
}

TEST_CASE("cli eval") {
  auto r = run_cli({"eval", "entropy", "--K", "0"});
  CHECK(r.code == 0);
  CHECK(r.out == "0\n");
  r = run_cli({"eval", "--quantity", "entropy", "--K", "1"});
  CHECK(r.code == 0);
  CHECK(r.out == "0.408538627546\n");
  r = run_cli({"eval", "alpha-min"});
  CHECK(r.code == 0);
  CHECK(std::stod(r.out) == Approx(0.318949).epsilon(3e-3));
  r = run_cli({"eval", "ising-concurrence", "--lambda", "1.5"});
  CHECK(r.out == "0.6\n");
  CHECK(run_cli({"eval", "bogus", "--K", "1"}).code == 2);
  CHECK(run_cli({"eval", "entropy", "--K", "-1"}).code == 2);
  CHECK(run_cli({"eval", "entropy"}).code == 2);
  CHECK(run_cli({"eval", "ecorr", "--K", "abc"}).code == 2);
  CHECK(run_cli({}).code == 2);
  CHECK(run_cli({"frobnicate"}).code == 2);
  CHECK(run_cli({"--help"}).code == 0);
}

TEST_CASE("cli sweep") {
  const auto path = temp_file("fig2.csv");
  auto r = run_cli({"sweep", "--figure", "fig2", "--k-min", "0", "--k-max", "1", "--steps", "11", "--out", path.string()});
  REQUIRE(r.code == 0);
  std::ifstream in(path);
  std::stringstream first;
  first << in.rdbuf();
  const auto again = temp_file("fig2b.csv");
  run_cli({"sweep", "--figure", "fig2", "--k-min", "0", "--k-max", "1", "--steps", "11", "--out", again.string()});
  std::ifstream in2(again);
  std::stringstream second;
  second << in2.rdbuf();
  CHECK(first.str() == second.str());
  CHECK(SweepTable::parse_csv(first.str()).rows().size() == 11);
  std::filesystem::remove(path);
  std::filesystem::remove(again);

  r = run_cli({"sweep", "--quantity", "purity", "--steps", "3"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("K,purity\n0,1\n", 0) == 0);

  CHECK(run_cli({"sweep", "--figure", "fig1", "--out", "/nonexistent-dir/x.csv"}).code == 3);
  CHECK(run_cli({"sweep", "--figure", "fig1", "--k-min", "1", "--k-max", "0"}).code == 2);
  CHECK(run_cli({"sweep", "--figure", "fig1", "--steps", "1"}).code == 2);
  CHECK(run_cli({"sweep", "--figure", "fig42"}).code == 2);
  CHECK(run_cli({"sweep"}).code == 2);
}

TEST_CASE("cli verify") {
  auto r = run_cli({"verify", "analytic", "--tol", "1e-10"});
  CHECK(r.code == 0);
  CHECK(r.out.find("PASS") != std::string::npos);
  CHECK(run_cli({"verify", "roundtrip", "--tol", "1e-9"}).code == 0);
  // an impossible tolerance must be reported as a failure, not hidden
  CHECK(run_cli({"verify", "analytic", "--tol", "1e-300"}).code == 1);
  CHECK(run_cli({"verify", "nonsense"}).code == 2);
  CHECK(run_cli({"verify", "analytic", "--tol", "-1"}).code == 2);
}
