#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>

#include "json.hpp"

namespace fs = std::filesystem;
using json = nlohmann::json;

namespace {

const fs::path kWork = fs::path(CLI_TEST_WORKDIR);

int lab(const std::string& args, const std::string& env = "") {
  fs::create_directories(kWork);
  const std::string cmd = env + " \"" DUNKL_LAB_PATH "\" " + args + " >> \"" +
                          (kWork / "cli.log").string() + "\" 2>&1";
  const int rc = std::system(cmd.c_str());
  return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
}

fs::path fresh(const std::string& name) {
  const fs::path p = kWork / name;
  fs::remove_all(p);
  return p;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::vector<std::vector<std::string>> read_csv(const fs::path& p) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(slurp(p));
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    rows.push_back(cells);
  }
  return rows;
}

}  // namespace

TEST_CASE("inadmissible alpha is rejected before any output") {
  const fs::path out = fresh("bad_alpha");
  CHECK(lab("verify --alpha -0.6 --out \"" + out.string() + "\"") == 2);
  CHECK_FALSE(fs::exists(out));
}

TEST_CASE("unknown config keys and empty grids are config errors") {
  const fs::path out = fresh("bad_config");
  const fs::path cfg = kWork / "bad_config.json";
  std::ofstream(cfg) << R"({"alpha": 0.5, "alhpa": 1})";
  CHECK(lab("translate --config \"" + cfg.string() + "\" --out \"" + out.string() + "\"") == 2);
  std::ofstream(cfg) << R"({"x_grid": []})";
  CHECK(lab("sweep --config \"" + cfg.string() + "\" --out \"" + out.string() + "\"") == 2);
  CHECK_FALSE(fs::exists(out));
}

TEST_CASE("suite filter runs only the named suite") {
  const fs::path out = fresh("taylor_only");
  REQUIRE(lab("verify --suite taylor --out \"" + out.string() + "\"") == 0);
  const json r = json::parse(slurp(out / "report.json"));
  REQUIRE(r["suites"].size() == 1);
  CHECK(r["suites"][0]["suite"] == "taylor");
  CHECK(r["summary"]["fail"] == 0);
  CHECK(r["summary"]["checks"].get<int>() > 0);
}

TEST_CASE("sweep: csv and json carry the same numbers, omega is monotone") {
  const fs::path csv = fresh("sweep_csv");
  const fs::path js = fresh("sweep_json");
  const std::string common = "sweep --function gaussian --alpha 0.5 --k 2 --p 2 ";
  REQUIRE(lab(common + "--out \"" + csv.string() + "\"") == 0);
  REQUIRE(lab(common + "--format json --out \"" + js.string() + "\"") == 0);

  const auto rows = read_csv(csv / "sweep_x.csv");
  const json doc = json::parse(slurp(js / "sweep.json"));
  REQUIRE(rows.size() == doc["x"].size() + 1);
  CHECK(rows[0] == std::vector<std::string>{"x", "omega", "omega_tilde", "k_upper"});
  double prev = 0.0;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const json& rec = doc["x"][i - 1];
    CHECK(std::stod(rows[i][0]) == rec["x"].get<double>());
    CHECK(std::stod(rows[i][1]) == rec["omega"].get<double>());
    CHECK(std::stod(rows[i][2]) == rec["omega_tilde"].get<double>());
    CHECK(std::stod(rows[i][3]) == rec["k_upper"].get<double>());
    CHECK(std::stod(rows[i][1]) >= prev);
    prev = std::stod(rows[i][1]);
  }
  const auto trows = read_csv(csv / "sweep_t.csv");
  REQUIRE(trows.size() == doc["t"].size() + 1);
  for (std::size_t i = 1; i < trows.size(); ++i) {
    CHECK(std::stod(trows[i][1]) == doc["t"][i - 1]["conv_norm"].get<double>());
  }
}

TEST_CASE("reports do not depend on the thread count") {
  const fs::path one = fresh("threads_one");
  const fs::path two = fresh("threads_two");
  const std::string common = "besov --alpha 0.5 --k 2 --q inf --beta 0.7 ";
  const int rc1 = lab(common + "--out \"" + one.string() + "\"", "DUNKL_LAB_THREADS=1");
  const int rc2 = lab(common + "--threads 2 --out \"" + two.string() + "\"");
  CHECK(rc1 == 0);
  CHECK(rc2 == rc1);
  CHECK(slurp(one / "report.json") == slurp(two / "report.json"));
  CHECK(slurp(one / "besov.csv") == slurp(two / "besov.csv"));
  const json r = json::parse(slurp(one / "report.json"));
  CHECK(r["config"]["q"] == "inf");
}

TEST_CASE("point commands write fixed columns") {
  const fs::path out = fresh("points");
  REQUIRE(lab("kernel --alpha 0.5 --x 1 --y 0.5 --lambda 1 --out \"" + out.string() + "\"") == 0);
  const auto k = read_csv(out / "kernel.csv");
  REQUIRE(k.size() == 2);
  // Re E(i x) at alpha = 1/2 is j_{1/2}(x) = sin(x) / x.
  CHECK(std::stod(k[1][4]) == doctest::Approx(std::sin(1.0)).epsilon(1e-14));
  CHECK(std::stod(k[1][8]) <= std::sqrt(2.0) + 1e-8);

  REQUIRE(lab("taylor --alpha 0.5 --k 2 --x 0.7 --a 0.3 --function x_gaussian --out \"" +
              out.string() + "\"") == 0);
  const auto t = read_csv(out / "taylor.csv");
  REQUIRE(t.size() == 2);
  CHECK(std::abs(std::stod(t[1][9])) <= 1e-12);
}
