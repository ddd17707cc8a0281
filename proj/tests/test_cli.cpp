#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include "doctest.h"

namespace {

struct RunResult {
  int code = -1;
  std::string out;
};

// run the binary under test with stdout captured
RunResult run_cli(const std::string& args) {
  const char* path = std::getenv("CLI_PATH");
  REQUIRE(path != nullptr);
  std::string cmd = std::string("\"") + path + "\" " + args;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  char buf[4096];
  std::size_t got = 0;
  while ((got = std::fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string fixture(const std::string& name, const std::string& text) {
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "towerctl_cli_fixtures";
  fs::create_directories(dir);
  fs::path p = dir / name;
  std::ofstream f(p, std::ios::binary);
  f << text;
  return p.string();
}

bool has(const std::string& text, const std::string& needle) {
  return text.find(needle) != std::string::npos;
}

const char* kWorkedIdeal = R"({"n":6,"supports":[[2,4,6],[1,4,6],[1,3,6],[1,4,5]]})";
const char* kWorkedSupport =
    R"({"n":6,"c":2,"primes":[[1,2],[3,4],[5,6],[4,6],[1,4],[1,6]]})";

}  // namespace

TEST_CASE("tower check splits by the nested slice property") {
  std::string good = fixture("pt57.json", R"({"c":2,"points":[[5,7]]})");
  RunResult r = run_cli("tower check " + good);
  CHECK(r.code == 0);
  CHECK(has(r.out, "\"tower\""));
  CHECK(has(r.out, "schema_version"));
  CHECK(has(r.out, "input_hash"));
  std::string bad = fixture("antichain.json", R"({"c":2,"points":[[1,2],[2,1]]})");
  CHECK(run_cli("tower check " + bad).code == 1);
  CHECK(run_cli("tower hash " + bad + " 2>/dev/null").code == 2);
}

TEST_CASE("towerizable verdicts on the six pair support") {
  std::string path = fixture("support6.json", kWorkedSupport);
  RunResult smart = run_cli("towerizable " + path);
  CHECK(smart.code == 1);
  CHECK(has(smart.out, "not towerizable"));
  RunResult brute = run_cli("towerizable --brute " + path);
  CHECK(brute.code == 1);
  RunResult gen = run_cli("gen-towerizable " + path);
  CHECK(gen.code == 0);
  CHECK(has(gen.out, "generalized towerizable"));
  CHECK(has(gen.out, "\"decomposition\""));
}

TEST_CASE("verify characterization settles the worked ideal") {
  std::string path = fixture("worked.json", kWorkedIdeal);
  RunResult r = run_cli("verify characterization " + path);
  CHECK(r.code == 0);
  CHECK(has(r.out, "\"acm\""));
  CHECK(has(r.out, "acm: ideal equals the scheme of its sorted support"));
  CHECK(has(r.out, "\"verified\""));
}

TEST_CASE("reports are byte identical across runs") {
  std::string path = fixture("worked.json", kWorkedIdeal);
  RunResult one = run_cli("verify characterization " + path);
  RunResult two = run_cli("verify characterization " + path);
  CHECK(one.out == two.out);
  RunResult star1 = run_cli("star gen --points 3 --width 2");
  RunResult star2 = run_cli("star gen --points 3 --width 2");
  CHECK(star1.code == 0);
  CHECK(star1.out == star2.out);
  CHECK(has(star1.out, "\"star\""));
}

TEST_CASE("bad inputs exit with the input code") {
  std::string broken = fixture("broken.json", "{ this is not json");
  CHECK(run_cli("tower check " + broken + " 2>/dev/null").code == 2);
  std::string point = fixture("pt21.json", R"({"c":2,"points":[[2,1]]})");
  CHECK(run_cli("segment hvec " + point + " 2>/dev/null").code == 2);
  CHECK(run_cli("tower check --no-such-flag " + point + " 2>/dev/null").code == 2);
  CHECK(run_cli("ideal acm 2>/dev/null").code == 2);
}

TEST_CASE("gts check names the violated condition") {
  std::string path = fixture(
      "gts_bad.json",
      R"({"S":{"c":2,"points":[[2,1],[3,1],[3,5]]},"T":{"c":2,"points":[[2,1],[3,1]]},)"
      R"("S0":{"c":2,"points":[[3,5]]}})");
  RunResult r = run_cli("gts check " + path);
  CHECK(r.code == 1);
  CHECK(has(r.out, "s0_first_symbol_reused"));
  std::string good = fixture(
      "gts_good.json",
      R"({"S":{"c":2,"points":[[3,1],[4,1],[4,2],[4,3],[5,3],[6,1]]},)"
      R"("T":{"c":2,"points":[[3,1],[4,1],[4,2],[4,3],[6,1]]},)"
      R"("S0":{"c":2,"points":[[5,3]]}})");
  CHECK(run_cli("gts check " + good).code == 0);
}

TEST_CASE("gts find recovers the decomposition") {
  std::string path =
      fixture("spoints.json", R"({"c":2,"points":[[3,1],[4,1],[4,2],[4,3],[5,3],[6,1]]})");
  RunResult r = run_cli("gts find " + path);
  CHECK(r.code == 0);
  CHECK(has(r.out, "\"found\""));
  CHECK(has(r.out, "\"decomposition\""));
}

TEST_CASE("compact and tsv shapes") {
  std::string path = fixture("worked.json", kWorkedIdeal);
  RunResult compact = run_cli("ideal build --compact " + path);
  CHECK(compact.code == 0);
  long lines = 0;
  for (char ch : compact.out)
    if (ch == '\n') ++lines;
  CHECK(lines <= 1);
  RunResult tsv = run_cli("ideal acm --format tsv " + path);
  CHECK(tsv.code == 0);
  CHECK(tsv.out.rfind("# schema_version\t", 0) == 0);
  CHECK(has(tsv.out, "# input_hash\t"));
}

TEST_CASE("output path writes the report to disk") {
  namespace fs = std::filesystem;
  std::string in = fixture("worked.json", kWorkedIdeal);
  fs::path out = fs::temp_directory_path() / "towerctl_cli_fixtures" / "report.json";
  fs::remove(out);
  RunResult r = run_cli("ideal primes -o " + out.string() + " " + in);
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream f(out);
  std::string text((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
  CHECK(has(text, "\"height\""));
  CHECK(has(text, "\"primes\""));
}

TEST_CASE("matrix extraction through the command line") {
  std::string path = fixture("twovars.json", R"({"n":2,"supports":[[1],[2]]})");
  RunResult r = run_cli("hb standard-form " + path);
  CHECK(r.code == 0);
  CHECK(has(r.out, "\"matrix\""));
  RunResult hvec = run_cli("ideal hvec " + path);
  CHECK(hvec.code == 0);
  CHECK(has(hvec.out, "\"degree\""));
}

TEST_CASE("tower hf uses unit degrees by default") {
  std::string tower = fixture("tower3.json", R"({"c":2,"points":[[2,1],[3,1],[3,2]]})");
  RunResult r = run_cli("tower hf " + tower);
  CHECK(r.code == 0);
  CHECK(has(r.out, "\"h\""));
  std::string degrees = fixture("deg3.json", R"({"degrees":[[1,2],[1,1]]})");
  RunResult scaled = run_cli("tower hf --degrees " + degrees + " " + tower);
  CHECK(scaled.code == 0);
  CHECK((has(scaled.out, "\"degree\": 4") || has(scaled.out, "\"degree\":4")));
}
