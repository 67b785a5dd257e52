#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

#include "radlab/experiments.hpp"
#include "radlab/report.hpp"
#include "radlab/scalars.hpp"
#include "radlab/serialize.hpp"
#include "radlab/spectral.hpp"

// Exercises the installed command-line binary end to end.  The binary path
// arrives through the RADLAB_BIN environment variable set by the build.

using namespace radlab;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct RunOut {
  int code = -1;
  std::string out;
};

std::string binary() {
  const char* p = std::getenv("RADLAB_BIN");
  REQUIRE_MESSAGE(p != nullptr, "RADLAB_BIN must point at the CLI binary");
  return p;
}

RunOut run_cli(const std::string& args) {
  const std::string cmd = binary() + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunOut r;
  char buf[4096];
  size_t n;
  while ((n = std::fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

fs::path scratch_dir() {
  const fs::path dir = fs::temp_directory_path() / "radlab_cli_scratch";
  fs::create_directories(dir);
  return dir;
}

std::string write_scratch(const std::string& name, const std::string& text) {
  const fs::path p = scratch_dir() / name;
  std::ofstream(p) << text;
  return p.string();
}

}  // namespace

TEST_CASE("eigs emits a passing artifact with the closed-form spectrum") {
  const RunOut r = run_cli("eigs --dim 1 --max-m 8");
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j.at("config").at("command") == "eigs");
  CHECK(j.at("config").at("dims") == json::array({1}));
  for (const auto& c : j.at("checks")) CHECK(c.at("pass") == true);
  const auto& rows = j.at("metrics").at("basis").at("rows");
  REQUIRE(rows.size() == 9);
  for (int m = 0; m <= 8; ++m)
    CHECK(rows[m].at("lambda_formula").get<double>() ==
          doctest::Approx(eigenvalue_lambda(1, m)).epsilon(1e-14));
}

TEST_CASE("usage errors exit with 64") {
  CHECK(run_cli("eigs --no-such-flag").code == 64);
  CHECK(run_cli("").code == 64);
  CHECK(run_cli("lorentz --family bogus --dim 1 -n 2").code == 64);
  CHECK(run_cli("sweep --dim 1 --direction psi:2 --sym --antisym").code == 64);
  CHECK(run_cli("sweep --dim 1 --direction nonsense").code == 64);
  CHECK(run_cli("sweep --dim 1 --eps nonsense").code == 64);
  CHECK(run_cli("deficit").code == 64);
  CHECK(run_cli("eigs --tol gram_deviation").code == 64);
}

TEST_CASE("help exits cleanly") {
  CHECK(run_cli("--help").code == 0);
  CHECK(run_cli("scan --help").code == 0);
}

TEST_CASE("missing and malformed pair files exit with 74") {
  CHECK(run_cli("deficit --pair /nonexistent/pair.json").code == 74);
  const std::string bad = write_scratch("bad_pair.json", "this is not json");
  CHECK(run_cli("deficit --pair " + bad).code == 74);
}

TEST_CASE("deficit on a stored pair matches the library") {
  PairState p;
  p.f = gp_add(standard_gaussian(1), gp_scale(eigenfunction(1, 2), 0.05));
  p.g = p.f;
  p.label = "psi2 bump";
  const std::string path =
      write_scratch("pair_psi2.json", canonical_json(json(p)));
  const RunOut r = run_cli("deficit --pair " + path);
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j.at("metrics").at("label") == "psi2 bump");
  const DeficitReport want = deficit_report(p.f, p.g);
  CHECK(j.at("metrics").at("deficit").at("phi").get<double>() ==
        doctest::Approx(want.phi).epsilon(1e-12));
  CHECK(j.at("metrics").at("deficit").at("dist").get<double>() ==
        doctest::Approx(want.dist).epsilon(1e-9));
}

TEST_CASE("sweep recovers the symmetric psi_2 coefficient") {
  const RunOut r = run_cli("sweep --dim 1 --direction psi:2 --sym");
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j.at("metrics").at("sweep").at("c2").get<double>() ==
        doctest::Approx(0.5).epsilon(1e-3));
  CHECK(j.at("metrics").at("sweep").at("c2_predicted").get<double>() ==
        doctest::Approx(0.5).epsilon(1e-10));
}

TEST_CASE("tolerance overrides loosen but never tighten") {
  CHECK(run_cli("eigs --dim 1 --tol gram_deviation=5e-10").code == 0);
  CHECK(run_cli("eigs --dim 1 --tol gram_deviation=1e-12").code == 64);
  CHECK(run_cli("eigs --dim 1 --tol gram_deviation=1e-8").code == 64);
  const RunOut r = run_cli("eigs --dim 1 --tol gram_deviation=5e-10");
  const json j = json::parse(r.out);
  CHECK(j.at("config").at("tolerance_overrides").at("gram_deviation") == 5e-10);
  for (const auto& c : j.at("checks"))
    if (c.at("name") == "gram_deviation") CHECK(c.at("tolerance") == 5e-10);
}

TEST_CASE("csv and svg artifacts land next to the json") {
  const fs::path dir = scratch_dir();
  const std::string args = "scan --dim 1 -n 8 --seed 3 --out " +
                           (dir / "scan.json").string() + " --csv " +
                           (dir / "scan.csv").string() + " --svg " +
                           (dir / "scan.svg").string();
  REQUIRE(run_cli(args).code == 0);
  const json j = json::parse(read_text_file((dir / "scan.json").string()));
  CHECK(j.at("metrics").at("scan").at("samples").size() == 8);
  const std::string csv = read_text_file((dir / "scan.csv").string());
  CHECK(csv.rfind("index,deficit,dist,ratio,control\n", 0) == 0);
  const std::string svg = read_text_file((dir / "scan.svg").string());
  CHECK(svg.find("<svg xmlns=") != std::string::npos);
  CHECK(svg.find("data-x=") != std::string::npos);
}

TEST_CASE("identical invocations produce byte-identical artifacts") {
  const std::string args = "scan --dim 1 -n 10 --seed 42";
  const RunOut a = run_cli(args);
  const RunOut b = run_cli(args);
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(!a.out.empty());
}

TEST_CASE("config files mirror flags and explicit flags win") {
  const std::string cfg = write_scratch(
      "cfg.json", "{\"dim\": 2, \"max-m\": 4, \"seed\": 11}\n");
  const json a = json::parse(run_cli("eigs --config " + cfg).out);
  CHECK(a.at("config").at("dims") == json::array({2}));
  CHECK(a.at("config").at("seed") == 11);
  const json b = json::parse(run_cli("eigs --config " + cfg + " --dim 1").out);
  CHECK(b.at("config").at("dims") == json::array({1}));
  const std::string bad = write_scratch("cfg_bad.json", "[1, 2]\n");
  CHECK(run_cli("eigs --config " + bad).code == 64);
}

TEST_CASE("every check row carries its tolerance") {
  for (const std::string& args :
       {std::string("eigs --dim 2 --max-m 4"),
        std::string("fourier-check --dim 1 -n 3 --seed 5"),
        std::string("sets --dim 1 -n 2 --seed 1")}) {
    const RunOut r = run_cli(args);
    REQUIRE(r.code == 0);
    for (const auto& c : json::parse(r.out).at("checks")) {
      CHECK(c.contains("value"));
      CHECK(c.contains("tolerance"));
      CHECK(c.contains("pass"));
    }
  }
}
