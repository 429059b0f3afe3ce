#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

/* CLI_PATH is injected by the build as the absolute path of the built
 * command-line binary. */

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run(const std::string& args) {
  const char* tmp = "/tmp/qrr_cli_test_out.txt";
  std::string cmd = std::string(CLI_PATH) + " " + args + " > " + tmp + " 2>&1";
  int raw = std::system(cmd.c_str());
  RunResult r;
  r.exit_code = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  std::ifstream in(tmp);
  std::stringstream ss;
  ss << in.rdbuf();
  r.out = ss.str();
  std::remove(tmp);
  return r;
}

void write_file(const char* path, const char* text) {
  std::ofstream out(path);
  out << text;
}

}  // namespace

TEST_CASE("series prints space-separated coefficients") {
  RunResult r = run("series rr-1 --order 4");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "1 1 1 1 2\n");
}

TEST_CASE("QRR_ORDER environment override") {
  RunResult r = run("series rr-1");  // with env below
  const char* tmp = "/tmp/qrr_cli_env_out.txt";
  std::string cmd =
      std::string("QRR_ORDER=4 ") + CLI_PATH + " series rr-1 > " + tmp;
  REQUIRE(std::system(cmd.c_str()) == 0);
  std::ifstream in(tmp);
  std::string line;
  std::getline(in, line);
  CHECK(line == "1 1 1 1 2");
  std::remove(tmp);
  /* without the override the default order is much larger */
  CHECK(r.out.size() > 100);
}

TEST_CASE("partitions table") {
  RunResult r = run("partitions --predicate cap-c,1 --max-n 6");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("6\t2\n") != std::string::npos);

  RunResult cmp = run(
      "partitions --predicate \"cap-c 1\" --compare \"cap-d 1\" --max-n 20");
  CHECK(cmp.exit_code == 0);
  CHECK(cmp.out.find("MISMATCH") == std::string::npos);

  RunResult diff = run(
      "partitions --predicate \"cap-c 1\" --compare \"cap-c 2\" --max-n 6");
  CHECK(diff.exit_code == 1);
  CHECK(diff.out.find("MISMATCH") != std::string::npos);

  CHECK(run("partitions --predicate nonsense --max-n 3").exit_code == 2);
}

TEST_CASE("list output is stable") {
  RunResult r = run("list");
  CHECK(r.exit_code == 0);
  std::istringstream lines(r.out);
  std::string first;
  std::getline(lines, first);
  CHECK(first.find("rr-1") == 0);
  CHECK(first.find("theorem") != std::string::npos);
  /* every catalog entry appears on its own line */
  int count = 1;
  std::string line;
  while (std::getline(lines, line)) ++count;
  CHECK(count >= 34);
  CHECK(r.out.find("conj-f1-L3") != std::string::npos);
  CHECK(r.out.find("conjecture") != std::string::npos);
  CHECK(run("list").out == r.out);
}

TEST_CASE("verify: names, globs, json report") {
  RunResult r = run("verify rr-1 rr-2 --order 30");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "rr-1 order=30 verified\nrr-2 order=30 verified\n");

  const char* json_path = "/tmp/qrr_cli_report.json";
  RunResult g = run(std::string("verify \"slater-*\" --order 25 --json ") +
                    json_path);
  CHECK(g.exit_code == 0);
  std::ifstream in(json_path);
  std::stringstream ss;
  ss << in.rdbuf();
  CHECK(ss.str().find("\"slater-38\"") != std::string::npos);
  CHECK(ss.str().find("\"outcome\": \"verified\"") != std::string::npos);
  std::remove(json_path);

  RunResult bad = run("verify definitely-not-here");
  CHECK(bad.exit_code == 2);
  CHECK(bad.out.find("unknown catalog entry") != std::string::npos);
}

TEST_CASE("wz and qdiff subcommands") {
  CHECK(run("wz --max-m 5 --order 25").exit_code == 0);
  CHECK(run("qdiff --a 1 --x-degree 4 --order 20").exit_code == 0);
  CHECK(run("qdiff --a 3 --x-degree 4 --order 20").exit_code == 2);
}

TEST_CASE("check-spec exit codes") {
  const char* good = "/tmp/qrr_cli_good.json";
  write_file(good,
             R"({"name":"odd parts","sum":{"s":1,"diag":[1],"cross":[],
                 "linear":[1],"sign":[1],"denom_step":[1]},
                 "product":{"factors":[{"kind":"pochhammer","a":1,"m":1,
                 "power":1}]}})");
  CHECK(run(std::string("check-spec ") + good + " --order 40").exit_code == 0);

  const char* bad = "/tmp/qrr_cli_bad.json";
  write_file(bad,
             R"({"single":{"alpha":1,"beta":1,"offset":0},
                 "product":{"factors":[{"kind":"bracket","a":1,"m":5,
                 "power":-1}]}})");
  RunResult rb = run(std::string("check-spec ") + bad + " --order 20");
  CHECK(rb.exit_code == 1);
  CHECK(rb.out.find("MISMATCH") != std::string::npos);

  const char* corrupt = "/tmp/qrr_cli_corrupt.json";
  write_file(corrupt, "{{{{");
  CHECK(run(std::string("check-spec ") + corrupt).exit_code == 2);
  CHECK(run("check-spec /tmp/qrr_cli_no_such_file.json").exit_code == 2);
  std::remove(good);
  std::remove(bad);
  std::remove(corrupt);
}

TEST_CASE("usage errors") {
  CHECK(run("").exit_code == 2);
  CHECK(run("frobnicate").exit_code == 2);
  CHECK(run("series").exit_code == 2);
  CHECK(run("--help").exit_code == 0);
}
