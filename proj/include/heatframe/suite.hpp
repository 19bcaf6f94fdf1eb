#ifndef HEATFRAME_SUITE_HPP
#define HEATFRAME_SUITE_HPP

#include <string>
#include <vector>

#include "heatframe/jet.hpp"
#include "heatframe/report.hpp"

namespace heatframe {

struct ConfigError : std::runtime_error {
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

struct SuiteConfig {
  std::vector<int> genera = {1, 2, 3};
  SignConvention convention = SignConvention::Plus;
  int jet_order = 6;
  int max_weight = 10;
  std::string format = "text";
  std::string out_path;
  bool strict = false;
  bool with_timestamp = true;
  std::vector<std::string> suites = {"frame", "ops", "cole-hopf", "jets", "solve-sigma"};
};

void validate(const SuiteConfig& cfg);

/// Runs the requested suites in dependency order; deterministic for a fixed
/// config (timing fields are zeroed when the timestamp is disabled).
SuiteResult run_suites(const SuiteConfig& cfg);

}  // namespace heatframe

#endif
