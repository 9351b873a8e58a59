#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"

// TUNNELT_BIN is injected by the build so the suite always drives the binary
// it was compiled next to.
#ifndef TUNNELT_BIN
#error "TUNNELT_BIN must point at the CLI executable"
#endif

namespace {

namespace fs = std::filesystem;

struct RunResult {
  int exit_code = -1;
  std::string output;  // stdout and stderr interleaved
};

RunResult run_cli(const std::string& args) {
  std::string cmd = std::string("\"") + TUNNELT_BIN + "\" " + args + " 2>&1";
  RunResult result;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  std::size_t n;
  while ((n = std::fread(buf, 1, sizeof buf, pipe)) > 0) {
    result.output.append(buf, n);
  }
  int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct TempDir {
  fs::path path;
  explicit TempDir(const std::string& tag) {
    path = fs::temp_directory_path() /
           ("tunnelt_test_" + tag + "_" + std::to_string(::getpid()));
    fs::create_directories(path);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path, ec);
  }
};

}  // namespace

TEST_CASE("version flag prints the tool banner") {
  RunResult r = run_cli("--version");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("tunnelt 1.0.0") != std::string::npos);
}

TEST_CASE("time subcommand, human and csv output") {
  RunResult human = run_cli("time --E 4 --Vr 5 --d 3");
  CHECK(human.exit_code == 0);
  CHECK(human.output.find("gamma") != std::string::npos);
  CHECK(human.output.find("0.492172") != std::string::npos);

  RunResult csv =
      run_cli("time --E 4 --Vr 5 --Vi 20 --alpha 1.95 --d 5 --format csv");
  CHECK(csv.exit_code == 0);
  CHECK(csv.output.find("gamma,term_phase,term_fractional,term_free") !=
        std::string::npos);
  CHECK(csv.output.find("0.1078003546") != std::string::npos);
}

TEST_CASE("time rejects energies at or above the barrier with exit 3") {
  RunResult r = run_cli("time --E 6 --Vr 5 --d 3");
  CHECK(r.exit_code == 3);
  CHECK(!r.output.empty());
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run_cli("time --Vr 5 --d 3").exit_code == 2);  // --E missing
  CHECK(run_cli("frobnicate").exit_code == 2);
  CHECK(run_cli("").exit_code == 2);  // a subcommand is required
}

TEST_CASE("transmission picks the regime from E vs Vr") {
  RunResult below = run_cli("transmission --E 4 --Vr 5 --Vi 20 --d 2");
  CHECK(below.exit_code == 0);
  CHECK(below.output.find("modulus") != std::string::npos);

  RunResult above =
      run_cli("transmission --E 9 --Vr 5 --Vi 10 --alpha 1.9 --d 2");
  CHECK(above.exit_code == 0);

  // E exactly on the barrier top belongs to neither branch.
  RunResult edge = run_cli("transmission --E 5 --Vr 5 --d 2");
  CHECK(edge.exit_code == 3);
}

TEST_CASE("slope subcommand reports the large-width line") {
  RunResult r = run_cli("slope --E 4 --Vr 5 --Vi 20");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("0.0770096") != std::string::npos);
  CHECK(r.output.find("intercept") != std::string::npos);
}

TEST_CASE("alpha-h subcommand finds and reports the crossover") {
  RunResult found = run_cli("alpha-h --E 4 --Vr 5 --Vi 20");
  CHECK(found.exit_code == 0);
  CHECK(found.output.find("1.94331") != std::string::npos);

  RunResult none = run_cli("alpha-h --E 4 --Vr 5 --Vi 0");
  CHECK(none.exit_code == 0);
  CHECK(none.output.find("absent") != std::string::npos);
}

TEST_CASE("sweep subcommand streams csv to stdout") {
  RunResult r = run_cli(
      "sweep --kind gamma_vs_d --axis d:1:5:5 "
      "--fix E=4 --fix Vr=5 --fix Vi=0 --fix alpha=2");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("d,gamma,flag") != std::string::npos);
  CHECK(r.output.find("# kind = gamma_vs_d") != std::string::npos);
}

TEST_CASE("sweep validation failures exit with 3") {
  RunResult r = run_cli(
      "sweep --kind gamma_vs_d --axis width:1:5:5 "
      "--fix E=4 --fix Vr=5 --fix Vi=0 --fix alpha=2");
  CHECK(r.exit_code == 3);

  RunResult dup = run_cli(
      "sweep --kind gamma_vs_d --axis d:1:5:5 "
      "--fix E=4 --fix E=4 --fix Vr=5 --fix Vi=0 --fix alpha=2");
  CHECK(dup.exit_code == 3);
}

TEST_CASE("unwritable output paths exit with 4") {
  RunResult r = run_cli(
      "sweep --kind gamma_vs_d --axis d:1:5:5 "
      "--fix E=4 --fix Vr=5 --fix Vi=0 --fix alpha=2 "
      "--out /nonexistent_dir_zz/out.csv");
  CHECK(r.exit_code == 4);
}

TEST_CASE("figure subcommand writes files and is reproducible") {
  TempDir a("fig_a");
  TempDir b("fig_b");
  RunResult ra = run_cli("figure fig2a --out " + a.path.string());
  CHECK(ra.exit_code == 0);
  CHECK(ra.output.find("wrote") != std::string::npos);
  RunResult rb = run_cli("figure fig2a --out " + b.path.string() + " --jobs 8");
  CHECK(rb.exit_code == 0);

  fs::path fa = a.path / "fig2a.csv";
  fs::path fb = b.path / "fig2a.csv";
  REQUIRE(fs::exists(fa));
  REQUIRE(fs::exists(fb));
  CHECK(slurp(fa) == slurp(fb));

  RunResult rsvg =
      run_cli("figure fig1 --out " + a.path.string() + " --svg --jobs 4");
  CHECK(rsvg.exit_code == 0);
  CHECK(fs::exists(a.path / "fig1.csv"));
  CHECK(fs::exists(a.path / "fig1.svg"));
}

TEST_CASE("figure rejects unknown identifiers") {
  CHECK(run_cli("figure fig99").exit_code == 3);
}

TEST_CASE("selfcheck passes on the shipped defaults") {
  RunResult r = run_cli("selfcheck");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("[ ok ]") != std::string::npos);
  CHECK(r.output.find("FAIL") == std::string::npos);
}

TEST_CASE("config files override units and bad keys are rejected") {
  TempDir dir("config");
  fs::path good = dir.path / "units.conf";
  {
    std::ofstream out(good);
    out << "# default units, restated\n"
        << "mass = 0.5\n"
        << "u = 1e-5\n";
  }
  RunResult ok =
      run_cli("time --E 4 --Vr 5 --d 3 --config " + good.string());
  CHECK(ok.exit_code == 0);
  CHECK(ok.output.find("0.492172") != std::string::npos);

  fs::path bad = dir.path / "bad.conf";
  {
    std::ofstream out(bad);
    out << "banana = 1\n";
  }
  RunResult rejected =
      run_cli("time --E 4 --Vr 5 --d 3 --config " + bad.string());
  CHECK(rejected.exit_code == 2);

  RunResult missing = run_cli("time --E 4 --Vr 5 --d 3 --config " +
                              (dir.path / "absent.conf").string());
  CHECK(missing.exit_code == 4);
}

TEST_CASE("out option writes the same bytes stdout would carry") {
  TempDir dir("out");
  fs::path file = dir.path / "point.csv";
  RunResult direct = run_cli("time --E 4 --Vr 5 --d 3 --format csv");
  RunResult filed = run_cli("time --E 4 --Vr 5 --d 3 --format csv --out " +
                            file.string());
  CHECK(filed.exit_code == 0);
  CHECK(slurp(file) == direct.output);
}
