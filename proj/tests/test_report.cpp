#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <json.hpp>
#include <set>

#include "heatframe/suite.hpp"

using namespace heatframe;

namespace {

struct CliRun {
  int exit_code;
  std::string output;
};

CliRun run_cli(const std::string& args) {
  std::string cmd = std::string(HEATFRAME_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  int status = pclose(pipe);
  return {WEXITSTATUS(status), out};
}

}  // namespace

TEST_CASE("empty suite emits a valid passing report") {
  SuiteResult r;
  r.with_timestamp = false;
  CHECK(r.overall());
  auto j = nlohmann::json::parse(emit_json(r));
  CHECK(j["schema"] == 1);
  CHECK(j["overall"] == true);
  CHECK(j["checks"].empty());
}

TEST_CASE("text format prints one line per relation") {
  SuiteResult r;
  r.report.check("frame", "a", "first", true);
  r.report.check("frame", "b", "second", false, "residual");
  std::string text = emit_text(r);
  CHECK(text == "[pass] frame a  (first)\n[fail] frame b  (second)  :: residual\noverall: FAIL\n");
}

TEST_CASE("strict mode only promotes flagged records") {
  SuiteResult r;
  r.report.info("cole-hopf", "diff", "table", "mismatch", true);
  r.report.info("ops", "c", "constant", "c_0 = -1", false);
  CHECK(r.overall());
  r.strict = true;
  CHECK_FALSE(r.overall());
  CHECK(r.report.failures(true) == 1);
}

TEST_CASE("json emission is deterministic") {
  SuiteConfig cfg;
  cfg.genera = {1};
  cfg.suites = {"frame", "cole-hopf"};
  cfg.with_timestamp = false;
  std::string a = emit_json(run_suites(cfg));
  std::string b = emit_json(run_suites(cfg));
  CHECK(a == b);
  auto j = nlohmann::json::parse(a);
  CHECK(j["overall"] == true);
  CHECK_FALSE(j.contains("timestamp"));
  for (const auto& c : j["checks"]) CHECK(c["duration_ms"] == 0.0);
}

TEST_CASE("latex emission is a table") {
  SuiteResult r;
  r.report.check("frame", "a", "first", true);
  std::string tex = emit_latex(r);
  CHECK(tex.find("\\begin{tabular}") != std::string::npos);
  CHECK(tex.find("overall: pass") != std::string::npos);
}

TEST_CASE("config validation") {
  SuiteConfig cfg;
  cfg.genera = {4};
  CHECK_THROWS_AS(validate(cfg), ConfigError);
  cfg.genera = {1};
  cfg.jet_order = 1;
  CHECK_THROWS_AS(validate(cfg), ConfigError);
  cfg.jet_order = 2;
  cfg.suites = {"nonsense"};
  CHECK_THROWS_AS(validate(cfg), ConfigError);
  cfg.suites = {"frame"};
  cfg.format = "yaml";
  CHECK_THROWS_AS(validate(cfg), ConfigError);
}

TEST_CASE("cli: verify passes and respects the exit-code contract") {
  CliRun ok = run_cli("verify --genus 1 --suite frame --format json --no-timestamp");
  CHECK(ok.exit_code == 0);
  auto j = nlohmann::json::parse(ok.output);
  CHECK(j["overall"] == true);
  CHECK(j["schema"] == 1);

  CliRun bad_genus = run_cli("verify --genus 7 --suite frame");
  CHECK(bad_genus.exit_code == 2);

  CliRun bad_flag = run_cli("verify --format yaml");
  CHECK(bad_flag.exit_code == 2);

  // the known table diffs become failures under --strict
  CliRun strict = run_cli("cole-hopf --genus 2 --strict --format text");
  CHECK(strict.exit_code == 1);
  CliRun lax = run_cli("cole-hopf --genus 2 --format text");
  CHECK(lax.exit_code == 0);
}

TEST_CASE("cli: renderers") {
  CliRun frame = run_cli("frame --genus 1 --format latex");
  CHECK(frame.exit_code == 0);
  CHECK(frame.output.find("\\begin{pmatrix}") != std::string::npos);
  CHECK(frame.output.find("\\lambda_{4}") != std::string::npos);

  CliRun ops = run_cli("ops --genus 1 --format json");
  CHECK(ops.exit_code == 0);
  auto j = nlohmann::json::parse(ops.output);
  CHECK(j["operators"].size() == 2);
  CHECK(j["operators"][0]["name"] == "Q0");
  // terms serialize as (coefficient, derivative) pairs
  CHECK(j["operators"][0]["H"][0].contains("coefficient"));
  CHECK(j["operators"][0]["H"][0].contains("derivative"));

  CliRun sigma = run_cli("solve-sigma --genus 1 --max-weight 8 --format json");
  CHECK(sigma.exit_code == 0);
  auto js = nlohmann::json::parse(sigma.output);
  CHECK(js["basis"].size() == 1);

  CliRun commute = run_cli("commute --genus 2 --format text");
  CHECK(commute.exit_code == 0);
  CHECK(commute.output.find("[Q2,Q4]") != std::string::npos);
}

TEST_CASE("cli: deterministic bytes with --no-timestamp") {
  CliRun a = run_cli("verify --genus 1 --suite cole-hopf --format json --no-timestamp");
  CliRun b = run_cli("verify --genus 1 --suite cole-hopf --format json --no-timestamp");
  CHECK(a.exit_code == 0);
  CHECK(a.output == b.output);
}

TEST_CASE("cli: full verification of one genus") {
  CliRun all = run_cli("verify --genus 1 --suite all --format json --no-timestamp");
  CHECK(all.exit_code == 0);
  auto j = nlohmann::json::parse(all.output);
  CHECK(j["overall"] == true);
  // every requested suite contributed records
  std::set<std::string> suites;
  for (const auto& c : j["checks"]) suites.insert(c["suite"].get<std::string>());
  CHECK(suites ==
        std::set<std::string>{"frame", "ops", "cole-hopf", "jets", "solve-sigma"});
}

TEST_CASE("cli: latex rendering of the genus 3 matrix") {
  CliRun frame = run_cli("frame --genus 3 --format latex");
  CHECK(frame.exit_code == 0);
  CHECK(frame.output.find("\\lambda_{14}") != std::string::npos);
  // a 6x6 pmatrix has six rows
  size_t rows = 0, pos = 0;
  while ((pos = frame.output.find("\\\\", pos)) != std::string::npos) {
    ++rows;
    pos += 2;
  }
  CHECK(rows >= 6);
}
