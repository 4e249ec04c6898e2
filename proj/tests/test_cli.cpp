#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "negcurv/catalog.hpp"
#include "negcurv/cli.hpp"
#include "negcurv/errors.hpp"
#include "negcurv/io.hpp"

using namespace negcurv;

namespace {

std::string data_path(const std::string& rel) {
  return std::string(NEGCURV_DATA_DIR) + "/" + rel;
}

struct RunResult {
  int exit_code;
  nlohmann::json report;
  std::string raw;
};

RunResult run_json(RunConfig config) {
  std::ostringstream out, err;
  const int code = run(config, out, err);
  RunResult r{code, nlohmann::json(), out.str() + err.str()};
  if (!out.str().empty() && (out.str()[0] == '{' || out.str()[0] == '['))
    r.report = nlohmann::json::parse(out.str());
  return r;
}

}  // namespace

TEST_CASE("file loaders") {
  SUBCASE("algebra round trip against the built-in catalog") {
    for (const auto& entry : catalog()) {
      const StructureConstants loaded = load_algebra(data_path("catalog/" + entry.name + ".json"));
      REQUIRE(loaded.dim() == entry.algebra.dim());
      for (int i = 0; i < loaded.dim(); ++i)
        CHECK((loaded.ad_basis(i) - entry.algebra.ad_basis(i)).norm() <= 1e-14);
    }
  }
  SUBCASE("metric files") {
    const MinkowskiNorm euclid = load_metric(data_path("metrics/euclid3.json"));
    CHECK(euclid.dim() == 3);
    const MinkowskiNorm rd = load_metric(data_path("metrics/randers2.json"));
    CHECK(rd(Eigen::Vector2d(0.0, 1.0)) == doctest::Approx(1.6));
  }
  SUBCASE("malformed input throws InputError") {
    CHECK_THROWS_AS(load_algebra(data_path("does_not_exist.json")), InputError);
  }
}

TEST_CASE("check command exit codes and report schema") {
  RunConfig config;
  config.command = "check";

  config.algebra_path = data_path("catalog/axb.json");
  RunResult affirmative = run_json(config);
  CHECK(affirmative.exit_code == kExitAffirmative);
  CHECK(affirmative.report["item2"] == true);
  CHECK(affirmative.report["item3"] == true);
  CHECK(affirmative.report["codim_ok"] == true);
  CHECK(affirmative.report["sign"] == "+");
  CHECK(affirmative.report.contains("graded_spectra"));
  CHECK(affirmative.report.contains("margin"));

  config.algebra_path = data_path("catalog/heisenberg3.json");
  RunResult negative = run_json(config);
  CHECK(negative.exit_code == kExitNegative);
  CHECK(negative.report["codim_ok"] == false);

  config.algebra_path = data_path("missing.json");
  CHECK(run_json(config).exit_code == kExitError);
}

TEST_CASE("check exit codes across the catalog fixtures") {
  for (const auto& entry : catalog()) {
    RunConfig config;
    config.command = "check";
    config.algebra_path = data_path("catalog/" + entry.name + ".json");
    INFO(entry.name);
    CHECK(run_json(config).exit_code ==
          (entry.expected_heintze ? kExitAffirmative : kExitNegative));
  }
}

TEST_CASE("validate command") {
  RunConfig config;
  config.command = "validate";
  config.algebra_path = data_path("catalog/rot3.json");
  const RunResult r = run_json(config);
  CHECK(r.exit_code == kExitAffirmative);
  CHECK(r.report["pass"] == true);

  // a Jacobi-violating tensor validates red and exits with the negative code
  const std::string broken_path = "/tmp/negcurv_broken_algebra.json";
  {
    std::ofstream out(broken_path);
    out << R"({"dim": 3, "brackets": [
          {"i": 1, "j": 2, "coeffs": {"3": 1.0}},
          {"i": 2, "j": 3, "coeffs": {"1": 1.0}},
          {"i": 3, "j": 1, "coeffs": {"3": 1.0}}]})";
  }
  config.algebra_path = broken_path;
  const RunResult bad = run_json(config);
  CHECK(bad.exit_code == kExitNegative);
  CHECK(bad.report["pass"] == false);
  CHECK(bad.report["jacobi_ok"] == false);
  std::remove(broken_path.c_str());
}

TEST_CASE("curvature command computes the pinned example") {
  RunConfig config;
  config.command = "curvature";
  config.algebra_path = data_path("catalog/rot3.json");
  config.metric_path = data_path("metrics/diag3_112.json");
  Eigen::VectorXd pole(3), partner(3);
  pole << 0, 1, 0;
  partner << 0, 0, 1;
  config.pole = pole;
  config.partner = partner;
  const RunResult r = run_json(config);
  CHECK(r.exit_code == kExitAffirmative);
  CHECK(r.report["K"].get<double>() == doctest::Approx(0.125));
  CHECK(r.report["method"] == "homogeneous");

  // non-applicable flag is an input error with diagnostics
  partner << 1, 0, 0;
  config.pole = pole;
  config.partner = partner;
  config.pole = Eigen::Vector3d(1, 0, 0).eval();
  config.partner = Eigen::Vector3d(0, 1, 0).eval();
  CHECK(run_json(config).exit_code == kExitError);
}

TEST_CASE("witness command exit codes") {
  RunConfig config;
  config.command = "witness";
  config.samples = 200;

  config.algebra_path = data_path("catalog/rot3.json");
  config.metric_path = data_path("metrics/euclid3.json");
  const RunResult found = run_json(config);
  CHECK(found.exit_code == kExitNegative);
  CHECK(found.report["witness_found"] == true);
  CHECK(found.report["curvature"]["K"].get<double>() >= -1e-12);

  config.algebra_path = data_path("catalog/axb.json");
  config.metric_path = data_path("metrics/euclid2.json");
  const RunResult none = run_json(config);
  CHECK(none.exit_code == kExitAffirmative);
  CHECK(none.report["witness_found"] == false);
}

TEST_CASE("scan command") {
  RunConfig config;
  config.command = "scan";
  config.algebra_path = data_path("catalog/axb.json");
  config.samples = 100;
  const RunResult r = run_json(config);
  CHECK(r.exit_code == kExitAffirmative);
  CHECK(r.report["accepted"] == 100);
  CHECK(r.report["min_K"].get<double>() == doctest::Approx(-1.0).epsilon(1e-9));
  CHECK(r.report["max_K"].get<double>() == doctest::Approx(-1.0).epsilon(1e-9));
  CHECK(r.report.contains("quantiles"));
}

TEST_CASE("submersion command reports the randers example") {
  RunConfig config;
  config.command = "submersion";
  config.metric_path = data_path("metrics/randers2.json");
  config.projection_path = data_path("examples/proj2_first.json");
  config.samples = 100;
  const RunResult r = run_json(config);
  CHECK(r.exit_code == kExitAffirmative);
  CHECK(r.report["induced_norm"].get<double>() == doctest::Approx(0.8).epsilon(1e-7));
  CHECK(r.report["isometry"]["max_discrepancy"].get<double>() <= 1e-5);
}

TEST_CASE("catalog command prints the golden table") {
  RunConfig config;
  config.command = "catalog";
  std::ostringstream out, err;
  CHECK(run(config, out, err) == kExitAffirmative);
  const std::string table = out.str();
  for (const auto& entry : catalog()) CHECK(table.find(entry.name) != std::string::npos);
  CHECK(table.find("axb") != std::string::npos);
  CHECK(table.find("true") != std::string::npos);
  CHECK(table.find("false") != std::string::npos);
}

TEST_CASE("reports are byte-identical across runs") {
  RunConfig config;
  config.command = "scan";
  config.algebra_path = data_path("catalog/heintze_heis4.json");
  config.samples = 150;
  config.seed = 99;
  const RunResult a = run_json(config);
  const RunResult b = run_json(config);
  CHECK(a.raw == b.raw);
  CHECK(a.exit_code == b.exit_code);

  config.command = "check";
  const RunResult c = run_json(config);
  const RunResult d = run_json(config);
  CHECK(c.raw == d.raw);
}

TEST_CASE("output file option writes the report") {
  RunConfig config;
  config.command = "check";
  config.algebra_path = data_path("catalog/axb.json");
  config.output = "/tmp/negcurv_cli_test_report.json";
  std::ostringstream out, err;
  CHECK(run(config, out, err) == kExitAffirmative);
  std::ifstream in(config.output);
  REQUIRE(in.good());
  nlohmann::json j;
  in >> j;
  CHECK(j["item3"] == true);
  std::remove(config.output.c_str());
}

TEST_CASE("installed binary end to end") {
  const std::string bin = NEGCURV_CLI_BIN;
  std::ifstream exists(bin);
  REQUIRE(exists.good());
  const std::string cmd = bin + " check " + data_path("catalog/axb.json") + " > /dev/null 2>&1";
  CHECK(std::system(cmd.c_str()) == 0);
  const std::string cmd_neg =
      bin + " check " + data_path("catalog/rot3.json") + " > /dev/null 2>&1";
  CHECK(WEXITSTATUS(std::system(cmd_neg.c_str())) == 1);
  const std::string cmd_err = bin + " check /nonexistent.json > /dev/null 2>&1";
  CHECK(WEXITSTATUS(std::system(cmd_err.c_str())) == 2);
}
