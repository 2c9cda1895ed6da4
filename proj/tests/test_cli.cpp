#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#ifndef FELLREP_CLI_PATH
#error "FELLREP_CLI_PATH must point at the built binary"
#endif

namespace {

namespace fs = std::filesystem;

struct RunResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// One scratch dir per process; files keep distinct names so cases stay
// independent.
const fs::path& scratch() {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() /
                 ("fellrep-cli-" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

RunResult run(const std::string& args, const std::string& env = "") {
  static int serial = 0;
  const fs::path out = scratch() / ("out" + std::to_string(serial));
  const fs::path err = scratch() / ("err" + std::to_string(serial));
  ++serial;
  std::string cmd = env.empty() ? "" : env + " ";
  cmd += std::string("\"") + FELLREP_CLI_PATH + "\" " + args + " > " +
         out.string() + " 2> " + err.string();
  const int raw = std::system(cmd.c_str());
  RunResult r;
  r.exit_code = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  r.out = slurp(out);
  r.err = slurp(err);
  return r;
}

std::string fixture_file(const std::string& name, const std::string& args) {
  const fs::path p = scratch() / name;
  if (!fs::exists(p)) {
    const RunResult r = run("fixture " + args + " --out " + p.string());
    REQUIRE(r.exit_code == 0);
  }
  return p.string();
}

}  // namespace

TEST_CASE("fixture emission and dimensions") {
  const RunResult tree = run("fixture tree --gens 2 --depth 2");
  REQUIRE(tree.exit_code == 0);
  CHECK(nlohmann::json::parse(tree.out)["dim"] == 7);

  const RunResult ck = run("fixture ck --matrix I2 --depth 2");
  REQUIRE(ck.exit_code == 0);
  CHECK(nlohmann::json::parse(ck.out)["dim"] == 5);

  const RunResult inline_matrix =
      run("fixture ck --matrix '[[1,1],[1,1]]' --depth 2");
  REQUIRE(inline_matrix.exit_code == 0);
  CHECK(nlohmann::json::parse(inline_matrix.out)["dim"] == 7);
}

TEST_CASE("fixture argument failures exit 2") {
  CHECK(run("fixture ck --depth 2").exit_code == 2);           // no matrix
  CHECK(run("fixture ck --matrix bogus --depth 2").exit_code == 2);
  CHECK(run("fixture ck --matrix I2 --gens 3 --depth 2").exit_code == 2);
  CHECK(run("fixture nosuch --depth 2").exit_code == 2);       // unknown kind
  CHECK(run("nosuchcommand").exit_code == 2);
  CHECK(run("fixture tree --depth").exit_code == 2);           // missing value
}

TEST_CASE("verify passes on the shift fixture and reports to a file") {
  const std::string rep = fixture_file("tree3.json", "tree --gens 2 --depth 3");
  const fs::path report = scratch() / "verify3.json";
  const RunResult r =
      run("verify --rep " + rep + " --depth 2 --out " + report.string());
  CHECK(r.exit_code == 0);
  const auto j = nlohmann::json::parse(slurp(report));
  CHECK(j["summary"]["all_passed"] == true);
  for (const auto& c : j["checks"]) CHECK(c["residual"].get<double>() <= 1e-10);
}

TEST_CASE("verify fails on the parity table with the canonical witness") {
  const std::string rep = fixture_file("parity.json", "parity");
  const RunResult r = run("verify --rep " + rep + " --depth 3");
  CHECK(r.exit_code == 1);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["summary"]["all_passed"] == false);
  bool saw = false;
  for (const auto& c : j["checks"])
    if (c["name"] == "semi-saturated") {
      saw = true;
      CHECK(c["passed"] == false);
      CHECK(c["witness"] == "(x, y)");
    }
  CHECK(saw);
}

TEST_CASE("verify distinguishes parse failures from check failures") {
  const fs::path bad = scratch() / "bad.json";
  std::ofstream(bad) << "{ this is not json";
  const RunResult r = run("verify --rep " + bad.string());
  CHECK(r.exit_code == 2);
  CHECK(r.err.find("error:") != std::string::npos);

  CHECK(run("verify --rep /missing/file.json").exit_code == 1);
}

TEST_CASE("converge emits the error table") {
  const std::string rep = fixture_file("tree6.json", "tree --gens 2 --depth 6");
  const RunResult r = run("converge --rep " + rep + " --word x --nmax 4");
  REQUIRE(r.exit_code == 0);
  std::istringstream lines(r.out);
  std::string header;
  std::getline(lines, header);
  CHECK(header == "n,error");
  int rows = 0;
  double prev = 2.0;
  for (std::string line; std::getline(lines, line);) {
    ++rows;
    const auto comma = line.find(',');
    REQUIRE(comma != std::string::npos);
    const double err = std::stod(line.substr(comma + 1));
    CHECK(err < prev);
    prev = err;
  }
  CHECK(rows == 4);
}

TEST_CASE("converge rejects words outside the two-sided positive form") {
  const std::string rep = fixture_file("tree6.json", "tree --gens 2 --depth 6");
  const RunResult r = run("converge --rep " + rep + " --word x^-1.y");
  CHECK(r.exit_code == 1);
  CHECK(r.err.find("not of the form") != std::string::npos);

  CHECK(run("converge --rep " + rep + " --word 'x..y'").exit_code == 2);
}

TEST_CASE("identical invocations are byte identical") {
  const std::string rep = fixture_file("tree6.json", "tree --gens 2 --depth 6");
  const RunResult a = run("converge --rep " + rep + " --word x.y^-1 --nmax 3");
  const RunResult b = run("converge --rep " + rep + " --word x.y^-1 --nmax 3");
  REQUIRE(a.exit_code == 0);
  CHECK(a.out == b.out);

  const RunResult v1 = run("verify --rep " + rep + " --depth 2");
  const RunResult v2 = run("verify --rep " + rep + " --depth 2");
  CHECK(v1.out == v2.out);

  const RunResult r1 = run("random --gens 2 --dim 4 --seed 11");
  const RunResult r2 = run("random --gens 2 --dim 4 --seed 11");
  REQUIRE(r1.exit_code == 0);
  CHECK(r1.out == r2.out);
}

TEST_CASE("fiber report on the smallest fixture") {
  const std::string rep = fixture_file("tree1.json", "tree --gens 2 --depth 1");
  const RunResult r = run("fiber --rep " + rep + " --word x");
  REQUIRE(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["word"] == "x");
  CHECK(j["rank"] == 1);
  CHECK(j["stabilized"] == true);
}

TEST_CASE("random families usually fail verification") {
  const fs::path rep = scratch() / "rand.json";
  REQUIRE(run("random --gens 2 --dim 4 --seed 7 --out " + rep.string())
              .exit_code == 0);
  const RunResult r = run("verify --rep " + rep.string() + " --depth 1");
  CHECK(r.exit_code == 1);
}

TEST_CASE("the dimension cap env var reaches the tool") {
  const RunResult r = run("fixture tree --gens 2 --depth 2", "FELL_DIM_CAP=5");
  CHECK(r.exit_code == 3);
  CHECK(run("fixture tree --gens 2 --depth 2", "FELL_DIM_CAP=99").exit_code == 0);
  CHECK(run("fixture tree --gens 2 --depth 2", "FELL_DIM_CAP=junk").exit_code == 2);
}

TEST_CASE("help exits cleanly") {
  CHECK(run("--help").exit_code == 0);
  CHECK(run("verify --help").exit_code == 0);
}
