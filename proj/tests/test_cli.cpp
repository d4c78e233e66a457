#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>

#include "doctest.h"
#include "json.hpp"

#include "ils/core.hpp"
#include "ils/json_io.hpp"

using nlohmann::json;

namespace {

namespace fs = std::filesystem;

struct RunResult {
  int code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

fs::path temp_file(const char* tag) {
  static int counter = 0;
  return fs::temp_directory_path() /
         ("ils_cli_" + std::to_string(::getpid()) + "_" + tag + "_" + std::to_string(counter++));
}

// env: optional "VAR=value " prefix for the shell command
RunResult run_cli(const std::string& args, const std::string& env = "") {
  fs::path out = temp_file("out"), err = temp_file("err");
  std::string cmd = env + std::string(ILS_CLI_PATH) + " " + args + " >" + out.string() +
                    " 2>" + err.string();
  int rc = std::system(cmd.c_str());
  RunResult r;
  r.code = rc == -1 ? -1 : WEXITSTATUS(rc);
  r.out = slurp(out);
  r.err = slurp(err);
  fs::remove(out);
  fs::remove(err);
  return r;
}

std::string golden_path(const char* name) {
  return std::string(ILS_SOURCE_DIR) + "/tests/golden/" + name;
}

fs::path write_temp(const std::string& content, const char* tag) {
  fs::path p = temp_file(tag);
  std::ofstream f(p, std::ios::binary);
  f << content;
  return p;
}

}  // namespace

TEST_CASE("cli construct emits a verifiable witness") {
  auto r = run_cli("construct --parts 3,2,1 --order 9");
  REQUIRE(r.code == 0);
  json j = json::parse(r.out);
  ils::Grid g = ils::square_from_json(j);
  CHECK(ils::verify_ils(g, {3, 2, 1}).ok);
}

TEST_CASE("cli construct grid format") {
  auto r = run_cli("construct --parts 2,2 --order 6 --format grid");
  REQUIRE(r.code == 0);
  int lines = 0;
  for (char c : r.out) lines += c == '\n';
  CHECK(lines == 6);
}

TEST_CASE("cli construct reports the canonical (2,2) order-5 certificate") {
  auto r = run_cli("construct --parts 2,2 --order 5");
  REQUIRE(r.code == 2);
  json j = json::parse(r.out);
  CHECK(j["status"] == "not_exists");
  REQUIRE(j.contains("certificate"));
  CHECK(j["certificate"]["A"] == json::array({1}));
  CHECK(j["certificate"]["B"] == json::array({2}));
  CHECK(r.err.find("infeasible") != std::string::npos);
}

TEST_CASE("cli construct --out then verify round trip") {
  fs::path witness = temp_file("witness");
  auto r = run_cli("construct --parts 2,2,2 --order 7 --out " + witness.string());
  REQUIRE(r.code == 0);
  auto v = run_cli("verify --in " + witness.string() + " --parts 2,2,2");
  CHECK(v.code == 0);
  json rep = json::parse(v.out);
  CHECK(rep["ok"] == true);
  // verifying against the wrong parts fails with exit 1
  auto bad = run_cli("verify --in " + witness.string() + " --parts 3,2");
  CHECK(bad.code == 1);
  CHECK(json::parse(bad.out)["ok"] == false);
  fs::remove(witness);
}

TEST_CASE("cli reduce matches the golden file byte for byte") {
  auto r = run_cli("reduce --in " + golden_path("fixture_square_8.json") + " --p 3,2,1,1,1");
  REQUIRE(r.code == 0);
  CHECK(r.out == slurp(golden_path("reduce_8.json")));
}

TEST_CASE("cli lift then reduce reproduces the outline file") {
  auto lifted = run_cli("lift --in " + golden_path("reduce_8.json"));
  REQUIRE(lifted.code == 0);
  fs::path square = write_temp(lifted.out, "lifted");
  auto reduced = run_cli("reduce --in " + square.string() + " --p 3,2,1,1,1");
  REQUIRE(reduced.code == 0);
  CHECK(reduced.out == slurp(golden_path("reduce_8.json")));
  fs::remove(square);
}

TEST_CASE("cli decide emits verdict JSON") {
  auto r = run_cli("decide --parts 2,2 --order 5");
  REQUIRE(r.code == 0);
  json j = json::parse(r.out);
  CHECK(j["status"] == "not_exists");
  CHECK(j["order"] == 5);

  auto e = run_cli("decide --parts 2,2 --order 6");
  REQUIRE(e.code == 0);
  json ej = json::parse(e.out);
  CHECK(ej["status"] == "exists");
  CHECK(ej.contains("witness"));
}

TEST_CASE("cli search runs the oracle") {
  auto r = run_cli("search --parts 2,2 --order 5 --budget 100000000");
  REQUIRE(r.code == 0);
  CHECK(json::parse(r.out)["status"] == "not_exists");

  auto tiny = run_cli("search --parts 2,2 --order 7 --budget 3");
  REQUIRE(tiny.code == 0);
  CHECK(json::parse(tiny.out)["status"] == "unknown");
}

TEST_CASE("cli check reports violations with exit 2") {
  auto r = run_cli("check --parts 2,2 --order 5");
  CHECK(r.code == 2);
  json j = json::parse(r.out);
  CHECK(j["ok"] == false);
  CHECK(j["certificate"]["lhs"] == 0);
  CHECK(j["certificate"]["rhs"] == 2);

  auto ok = run_cli("check --parts 3,2,1 --order 9");
  CHECK(ok.code == 0);
  CHECK(json::parse(ok.out)["ok"] == true);
}

TEST_CASE("cli malformed input exits 64") {
  CHECK(run_cli("construct --parts 2,x --order 5").code == 64);
  CHECK(run_cli("construct --parts 2,2").code == 64);            // missing required flag
  CHECK(run_cli("construct --parts 2,2 --order -3").code == 64);  // rejected by validator
  CHECK(run_cli("decide --parts 0 --order 5").code == 64);
  CHECK(run_cli("check --parts 4,4 --order 5").code == 64);  // parts exceed order
  CHECK(run_cli("bogus-subcommand").code == 64);

  fs::path bad = write_temp("{ not json", "badjson");
  auto r = run_cli("reduce --in " + bad.string() + " --p 1");
  CHECK(r.code == 64);
  CHECK(r.err.find("--in") != std::string::npos);
  fs::remove(bad);

  fs::path missing_field = write_temp("{\"order\": 2}", "nofield");
  auto m = run_cli("verify --in " + missing_field.string() + " --parts 1");
  CHECK(m.code == 64);
  CHECK(m.err.find("grid") != std::string::npos);
  fs::remove(missing_field);

  auto gone = run_cli("lift --in /nonexistent/outline.json");
  CHECK(gone.code == 64);

  // partition that does not sum to the order names the flag
  auto sum = run_cli("reduce --in " + golden_path("fixture_square_8.json") + " --p 3,2,1");
  CHECK(sum.code == 64);
  CHECK(sum.err.find("--p") != std::string::npos);
}

TEST_CASE("cli budget env variable") {
  auto bad = run_cli("decide --parts 2,2 --order 5", "ILS_NODE_BUDGET=abc ");
  CHECK(bad.code == 64);
  CHECK(bad.err.find("ILS_NODE_BUDGET") != std::string::npos);
  // a valid env budget is accepted
  auto ok = run_cli("search --parts 2,2 --order 5", "ILS_NODE_BUDGET=100000000 ");
  CHECK(ok.code == 0);
  CHECK(json::parse(ok.out)["status"] == "not_exists");
}

TEST_CASE("cli help exits 0") {
  CHECK(run_cli("--help").code == 0);
  CHECK(run_cli("construct --help").code == 0);
}

TEST_CASE("library canonical dump matches the golden bytes") {
  json j = json::parse(slurp(golden_path("reduce_8.json")));
  CHECK(ils::canonical_dump(j) == slurp(golden_path("reduce_8.json")));
}
