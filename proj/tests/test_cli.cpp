#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "curveaut/catalog.hpp"
#include "curveaut/cyclotomic.hpp"

using namespace curveaut;

namespace {

struct RunResult {
  int exit_code;
  std::string output;
};

RunResult run_cli(const std::string& args) {
  std::string cmd = std::string(CURVEAUT_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  while (size_t n = fread(buf, 1, sizeof(buf), pipe)) out.append(buf, n);
  int status = pclose(pipe);
  int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return {code, out};
}

}  // namespace

TEST_CASE("chars and zeuthen exit codes") {
  CHECK(run_cli("chars --theta 0 --delta 0").exit_code == 0);
  CHECK(run_cli("chars --theta 13 --delta 0").exit_code == 2);
  CHECK(run_cli("zeuthen --genus 1").exit_code == 2);
  auto r = run_cli("zeuthen --genus 4 --primes-only --max-n 10");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("n=5") != std::string::npos);
  CHECK(r.output.find("n=7") == std::string::npos);
}

TEST_CASE("verify is deterministic in JSON mode") {
  auto r1 = run_cli("verify --entry p4c-12 --json --seed 9");
  auto r2 = run_cli("verify --entry p4c-12 --json --seed 9");
  CHECK(r1.exit_code == 0);
  CHECK(r1.output == r2.output);
  CHECK(r1.output.find("\"status\": \"pass\"") != std::string::npos);

  auto r3 = run_cli("verify --entry p4c-13 --json --seed 4");
  CHECK(r3.exit_code == 0);
}

TEST_CASE("verify flags a perturbed catalog with exit 1") {
  auto cat = load_catalog_file(default_catalog_path());
  Catalog broken = cat;
  for (auto& e : broken.entries) {
    if (e.id != "p4q-15-bring") continue;
    // perturb one coefficient of the distinguished curve
    auto& [exps, coef] = *e.model.form.monomials.begin();
    for (auto& [pe, lit] : coef.terms) lit = lit * CycNum::from_int(cat.field, 3);
  }
  std::string tmp = std::string(CURVEAUT_BUILD_DIR) + "/perturbed_catalog.json";
  std::ofstream(tmp) << save_catalog(broken);
  auto r = run_cli("verify --catalog " + tmp + " --entry p4q-15-bring");
  CHECK(r.exit_code == 1);
  CHECK(r.output.find("invariance") != std::string::npos);
}

TEST_CASE("unknown entry filter exits 2") {
  CHECK(run_cli("verify --entry nosuchentry").exit_code == 2);
  CHECK(run_cli("group --entry nosuchentry").exit_code == 2);
}

TEST_CASE("group and probe subcommands") {
  auto g = run_cli("group --entry p5-64");
  CHECK(g.exit_code == 0);
  CHECK(g.output.find("order 64") != std::string::npos);

  auto p = run_cli("probe --entry p4c-14 --prime 2 --ext 1");
  CHECK(p.exit_code == 0);
  CHECK(p.output.find("prime 241") != std::string::npos);
  CHECK(p.output.find("evidence") != std::string::npos);
}

#include "json.hpp"

TEST_CASE("json report round-trips") {
  auto r = run_cli("verify --entry p4c-14 --json");
  CHECK(r.exit_code == 0);
  auto doc = nlohmann::ordered_json::parse(r.output);
  CHECK(doc.dump(1) == r.output);
  CHECK(doc["status"] == "pass");
}

TEST_CASE("resource caps exit 3") {
  // extension degree 8 overflows the field-cardinality budget at q = 241
  auto r = run_cli("probe --entry p4c-14 --prime 2 --ext 9");
  CHECK(r.exit_code == 3);
}
