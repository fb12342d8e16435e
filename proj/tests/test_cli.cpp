#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>

#include <nlohmann/json.hpp>

#include "mcg/report.hpp"

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run(const std::string& args) {
  std::string cmd = std::string(MCGCERT_BIN) + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::string out;
  std::array<char, 4096> buf;
  size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), n);
  int status = pclose(p);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

}  // namespace

TEST_CASE("theorem replay exits clean on supported genus") {
  auto r = run("theorem 2.1 --genus 7");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("pass") != std::string::npos);
}

TEST_CASE("usage and bound violations exit 2") {
  CHECK(run("theorem 2.1 --genus 5").exit_code == 2);
  CHECK(run("theorem A --genus 18").exit_code == 2);
  CHECK(run("theorem B-even --genus 27").exit_code == 2);
  CHECK(run("theorem B-odd --genus 26").exit_code == 2);
  CHECK(run("theorem bogus --genus 7").exit_code == 2);
  CHECK(run("theorem 2.1").exit_code == 2);  // --genus required
  CHECK(run("").exit_code == 2);
  CHECK(run("--help").exit_code == 0);
}

TEST_CASE("order certification") {
  CHECK(run("certify --set thm21 --genus 7").exit_code == 0);
  CHECK(run("certify --set twistslide --genus 5").exit_code == 0);
  // dihedral pair stalls far below the full order
  CHECK(run("certify --set dihedral --genus 7").exit_code == 2);  // not an allowed set name
}

TEST_CASE("custom set with no words stalls below target") {
  std::string path = "empty-words.txt";
  { FILE* f = fopen(path.c_str(), "w"); REQUIRE(f); fclose(f); }
  auto r = run("certify --set custom --words " + path + " --genus 7");
  CHECK(r.exit_code == 1);
  CHECK(r.out.find("below-target") != std::string::npos);
  std::remove(path.c_str());
}

TEST_CASE("resource guard exits 3") {
  CHECK(run("certify --set thm21 --genus 30").exit_code == 3);
}

TEST_CASE("json report validates against the shipped schema") {
  auto r = run("theorem 2.1 --genus 7 --json --certify-order");
  REQUIRE(r.exit_code == 0);
  auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["tool_version"] == mcg::report::kToolVersion);
  CHECK(doc["genus"] == 7);
  REQUIRE(doc["proofs"].size() == 1);
  CHECK(doc["proofs"][0]["verdict"] == "pass");
  REQUIRE(doc["orders"].size() == 1);
  auto schema = mcg::report::load_schema();
  CHECK(mcg::report::validate_schema(doc, schema) == "");
}

TEST_CASE("json reports are deterministic modulo timings") {
  auto a = nlohmann::json::parse(run("theorem 2.1 --genus 9 --json").out);
  auto b = nlohmann::json::parse(run("theorem 2.1 --genus 9 --json").out);
  a.erase("timings");
  b.erase("timings");
  CHECK(a == b);
}

TEST_CASE("model dump") {
  auto r = run("dump-model --genus 9");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("a_2 = {1,2,3,4}") != std::string::npos);
  CHECK(r.out.find("genus 9") != std::string::npos);
  CHECK(run("--dump-model --genus 8").out.find("c_3 = ") != std::string::npos);
}
