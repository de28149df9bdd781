// End-to-end tests spawning the real CLI binary.  CHARDEG_CLI_PATH and
// CHARDEG_LEDGER_DIR come from the ctest environment.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <string>

#include <json.hpp>

namespace {

struct RunResult {
  std::string out;
  int code = -1;
};

std::string cli_path() {
  const char* p = std::getenv("CHARDEG_CLI_PATH");
  REQUIRE_MESSAGE(p != nullptr, "CHARDEG_CLI_PATH must point at the built binary");
  return p;
}

std::string ledger_dir() {
  const char* p = std::getenv("CHARDEG_LEDGER_DIR");
  REQUIRE_MESSAGE(p != nullptr, "CHARDEG_LEDGER_DIR must point at data/ledgers");
  return p;
}

RunResult run(const std::string& args, bool merge_stderr = false) {
  std::string cmd = cli_path() + " " + args + (merge_stderr ? " 2>&1" : " 2>/dev/null");
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  char buf[4096];
  size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  int st = pclose(pipe);
  r.code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

}  // namespace

TEST_CASE("order prints the factored order") {
  auto r = run("order '2B2(8)'");
  CHECK(r.code == 0);
  CHECK(r.out == "29120 = 2^6·5·7·13\n");
  r = run("order 'G2(3)'");
  CHECK(r.code == 0);
  CHECK(r.out == "4245696 = 2^6·3^6·7·13\n");
  r = run("order 'L2(7)'");
  CHECK(r.out == "168 = 2^3·3·7\n");
  r = run("order M11");
  CHECK(r.out == "7920 = 2^4·3^2·5·11\n");
}

TEST_CASE("order rejects non-simple and malformed names with exit 2") {
  auto r = run("order 'S4(2)'", true);
  CHECK(r.code == 2);
  CHECK(r.out.find("error: not simple") == 0);
  r = run("order 'L2(6)'", true);
  CHECK(r.code == 2);
  CHECK(r.out.find("error:") == 0);
  r = run("order 'Xyzzy(3)'", true);
  CHECK(r.code == 2);
}

TEST_CASE("pi, cyclotomic, zsigmondy, altdeg") {
  CHECK(run("pi 'G2(3)'").out == "{2, 3, 7, 13}\n");
  CHECK(run("pi ON").out == "{2, 3, 5, 7, 11, 19, 31}\n");
  CHECK(run("cyclotomic 12 2").out == "13\n");
  CHECK(run("cyclotomic 1 5").out == "4\n");
  CHECK(run("zsigmondy 2 6").out == "none (Zsigmondy exception)\n");
  CHECK(run("zsigmondy 3 5").out == "11\n");
  CHECK(run("altdeg 5").out == "{1, 3, 4, 5}\n");
  CHECK(run("altdeg 10 --max").out == "567\n");
  CHECK(run("cyclotomic 0 5", true).code == 2);
  CHECK(run("zsigmondy 1 5", true).code == 2);
  CHECK(run("altdeg 41", true).code == 2);
  CHECK(run("altdeg nope", true).code == 2);
}

TEST_CASE("verify exit codes") {
  CHECK(run("verify " + ledger_dir() + "/prop1.claims").code == 0);
  CHECK(run("verify " + ledger_dir() + "/negative_demo.claims").code == 1);
  CHECK(run("verify " + ledger_dir() + "/missing.claims", true).code == 2);
  // a skipped-only ledger exits 3
  std::string tmp = "/tmp/chardeg_skip_test.claims";
  FILE* f = fopen(tmp.c_str(), "w");
  REQUIRE(f);
  fputs("claim s \"inexact\" : 3/2 = 1\n", f);
  fclose(f);
  CHECK(run("verify " + tmp).code == 3);
  remove(tmp.c_str());
}

TEST_CASE("verify reports witnesses for the negative demo") {
  auto r = run("verify " + ledger_dir() + "/negative_demo.claims");
  CHECK(r.code == 1);
  CHECK(r.out.find("[witness n=6]") != std::string::npos);
  CHECK(r.out.find("[witness a=1,b=6]") != std::string::npos);
  CHECK(r.out.find("summary: claims=4 verified=1 refuted=3 skipped=0 assumed=0") !=
        std::string::npos);
}

TEST_CASE("verify output is byte-identical across jobs") {
  for (const char* ledger : {"prop2.claims", "prop5.claims"}) {
    auto r1 = run("verify " + ledger_dir() + "/" + ledger + " --jobs 1");
    auto r8 = run("verify " + ledger_dir() + "/" + ledger + " --jobs 8");
    CHECK(r1.code == 0);
    CHECK(r8.code == 0);
    CHECK(r1.out == r8.out);
  }
}

TEST_CASE("verify machine format emits json lines") {
  auto r = run("verify " + ledger_dir() + "/prop1.claims --format machine");
  CHECK(r.code == 0);
  std::istringstream in(r.out);
  std::string line;
  int rows = 0;
  while (std::getline(in, line)) {
    auto j = nlohmann::json::parse(line);
    CHECK(j.contains("id"));
    CHECK(j.contains("status"));
    CHECK_FALSE(j.contains("elapsed_ms"));
    ++rows;
  }
  CHECK(rows == 7);
  r = run("verify " + ledger_dir() + "/prop1.claims --format machine --timings");
  std::istringstream in2(r.out);
  std::getline(in2, line);
  CHECK(nlohmann::json::parse(line).contains("elapsed_ms"));
  CHECK(run("verify x.claims --format yaml", true).code == 2);
}

TEST_CASE("tables dump") {
  auto r = run("tables dump 1");
  CHECK(r.code == 0);
  CHECK(r.out.find("2B2(q)") != std::string::npos);
  CHECK(run("tables dump 2").out.find("q^15(q^2-1)") != std::string::npos);
  CHECK(run("tables dump 3").out.find("2^(13m+6)") != std::string::npos);
  auto t4 = run("tables dump 4");
  CHECK(t4.out.find("M11") != std::string::npos);
  CHECK(t4.out.find("196883") != std::string::npos);
  CHECK(run("tables dump 5").out.find("q^128") != std::string::npos);
  CHECK(run("tables dump 6", true).code == 2);
  CHECK(run("tables dump 0", true).code == 2);
}

TEST_CASE("usage errors exit 2, help exits 0") {
  CHECK(run("", true).code == 2);
  CHECK(run("frobnicate", true).code == 2);
  CHECK(run("order", true).code == 2);
  auto h = run("--help");
  CHECK(h.code == 0);
  CHECK(h.out.find("verify") != std::string::npos);
}
