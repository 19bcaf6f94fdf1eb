#include "heatframe/suite.hpp"

#include <algorithm>
#include <chrono>
#include <ctime>

#include "heatframe/sigma.hpp"

namespace heatframe {

namespace {

const std::vector<std::string> kKnownSuites = {"frame", "ops", "cole-hopf", "jets",
                                               "solve-sigma"};

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
      .count();
}

RelationReport solve_sigma_suite(int genus, int max_weight) {
  RelationReport rep;
  const std::string suite = "solve-sigma";
  std::string g = "g" + std::to_string(genus);

  std::vector<int> ops = {0, 2};
  if (genus >= 2) ops.push_back(4);
  SolutionBasis basis = kernel_basis(genus, ops, max_weight);
  rep.check(suite, g + ".kernel.nonempty", "a lambda-free solution exists",
            !basis.elements.empty());
  for (const auto& [stratum, dim] : basis.kernel_dims) {
    size_t expected = stratum == 0 ? 1 : 0;
    rep.info(suite, g + ".kernel.stratum" + std::to_string(stratum),
             "solution-space dimension per stratum", "dim " + std::to_string(dim),
             dim != expected);
  }
  if (!basis.elements.empty()) {
    rep.info(suite, g + ".series", "leading solution at truncation " + std::to_string(max_weight),
             basis.elements.front().value.to_string());
    // residuals under the remaining operators vanish on trusted strata
    for (int k = 0; k <= 2 * genus - 1; ++k) {
      if (std::find(ops.begin(), ops.end(), 2 * k) != ops.end()) continue;
      Polynomial residual = sigma_residual(genus, basis.elements.front(), k);
      Polynomial trusted;
      for (const auto& [m, c] : residual.terms())
        if (m.lambda_weight() <= max_weight - 2 * k) trusted.add_term(m, c);
      rep.check(suite, g + ".residual.Q" + std::to_string(2 * k),
                "the three-operator kernel is annihilated up to truncation", trusted.is_zero(),
                trusted.to_string());
    }
  }
  return rep;
}

}  // namespace

void validate(const SuiteConfig& cfg) {
  for (int g : cfg.genera)
    if (g < 1 || g > 3) throw ConfigError("genus must be 1, 2 or 3");
  if (cfg.genera.empty()) throw ConfigError("at least one genus is required");
  if (cfg.jet_order < 2) throw ConfigError("jet order must be at least 2");
  if (cfg.max_weight < 0) throw ConfigError("max weight must be non-negative");
  if (cfg.format != "text" && cfg.format != "json" && cfg.format != "latex")
    throw ConfigError("format must be text, json or latex");
  for (const std::string& s : cfg.suites)
    if (std::find(kKnownSuites.begin(), kKnownSuites.end(), s) == kKnownSuites.end())
      throw ConfigError("unknown suite: " + s);
}

SuiteResult run_suites(const SuiteConfig& cfg) {
  validate(cfg);
  SuiteResult result;
  result.strict = cfg.strict;
  result.with_timestamp = cfg.with_timestamp;
  result.command = "verify";
  for (int g : cfg.genera) result.command += " --genus " + std::to_string(g);
  for (const std::string& s : cfg.suites) result.command += " --suite " + s;
  result.command += std::string(" --convention ") + sign_char(cfg.convention);
  if (cfg.with_timestamp) {
    std::time_t now = std::time(nullptr);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
    result.timestamp = buf;
  }

  auto enabled = [&](const std::string& s) {
    return std::find(cfg.suites.begin(), cfg.suites.end(), s) != cfg.suites.end();
  };

  for (int g : cfg.genera) {
    for (const std::string& suite : kKnownSuites) {
      if (!enabled(suite)) continue;
      auto t0 = std::chrono::steady_clock::now();
      RelationReport rep;
      if (suite == "frame") {
        rep.merge(verify_frame_relations(g));
        rep.merge(check_polynomial_lie_axioms(g, FrameKind::LFrame));
        rep.merge(check_polynomial_lie_axioms(g, FrameKind::QFrame));
        rep.merge(check_isomorphism(g));
        if (g >= 2) sufficiency_reduction(g, &rep);
      } else if (suite == "ops") {
        rep.merge(shape_check(build_Q(g)));
      } else if (suite == "cole-hopf") {
        ColeHopfSystem derived = build_cole_hopf_derived(g, cfg.convention);
        RelationReport diff = diff_against_reference_tables(g, derived);
        size_t total = 0, matched = 0;
        for (const CheckRecord& c : diff.checks()) {
          ++total;
          if (c.status == CheckStatus::Pass) ++matched;
        }
        rep.merge(diff);
        rep.info("cole-hopf", "g" + std::to_string(g) + ".convention",
                 "how many printed entries the chosen convention reproduces",
                 std::string(1, sign_char(cfg.convention)) + ": " + std::to_string(matched) +
                     " of " + std::to_string(total) + " table entries match");
      } else if (suite == "jets") {
        JetScope scope(g, cfg.convention);
        rep.merge(derivation_commutator_tables(scope, cfg.jet_order));
        rep.merge(closure_check(scope, std::max(2, std::min(cfg.jet_order, 5))));
        rep.merge(homomorphism_check(scope));
      } else if (suite == "solve-sigma") {
        rep.merge(solve_sigma_suite(g, cfg.max_weight));
      }
      CheckRecord timing;
      timing.suite = suite;
      timing.id = "g" + std::to_string(g) + ".timing";
      timing.locus = "suite wall time";
      timing.status = CheckStatus::Info;
      timing.witness = std::to_string(rep.size()) + " checks";
      timing.duration_ms = cfg.with_timestamp ? ms_since(t0) : 0.0;
      result.report.merge(rep);
      result.report.add(std::move(timing));
    }
  }
  return result;
}

}  // namespace heatframe
