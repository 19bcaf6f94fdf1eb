#include "heatframe/report.hpp"

#include <json.hpp>
#include <stdexcept>

namespace heatframe {

namespace {
const char* status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass:
      return "pass";
    case CheckStatus::Fail:
      return "fail";
    case CheckStatus::Info:
      return "info";
  }
  return "?";
}
}  // namespace

size_t RelationReport::failures(bool strict) const {
  size_t n = 0;
  for (const CheckRecord& c : checks_) {
    if (c.status == CheckStatus::Fail) ++n;
    if (strict && c.status == CheckStatus::Info && c.strict_fails) ++n;
  }
  return n;
}

std::string emit_text(const SuiteResult& r) {
  std::string out;
  for (const CheckRecord& c : r.report.checks()) {
    std::string line = "[";
    line += status_name(c.status);
    line += "] ";
    line += c.suite + " " + c.id;
    if (!c.locus.empty()) line += "  (" + c.locus + ")";
    if (!c.witness.empty()) line += "  :: " + c.witness;
    out += line + "\n";
  }
  out += r.overall() ? "overall: pass\n" : "overall: FAIL\n";
  return out;
}

std::string emit_json(const SuiteResult& r) {
  nlohmann::ordered_json j;
  j["schema"] = r.schema;
  j["command"] = r.command;
  if (r.with_timestamp && !r.timestamp.empty()) j["timestamp"] = r.timestamp;
  j["strict"] = r.strict;
  nlohmann::ordered_json checks = nlohmann::ordered_json::array();
  for (const CheckRecord& c : r.report.checks()) {
    nlohmann::ordered_json jc;
    jc["suite"] = c.suite;
    jc["id"] = c.id;
    jc["locus"] = c.locus;
    jc["status"] = status_name(c.status);
    if (!c.witness.empty()) jc["witness"] = c.witness;
    for (const auto& [key, value] : c.details) jc[key] = value;
    jc["duration_ms"] = c.duration_ms;
    checks.push_back(std::move(jc));
  }
  j["checks"] = std::move(checks);
  j["overall"] = r.overall();
  return j.dump(2) + "\n";
}

std::string emit_latex(const SuiteResult& r) {
  std::string out = "\\begin{tabular}{llll}\n";
  out += "suite & relation & status & witness \\\\\n\\hline\n";
  for (const CheckRecord& c : r.report.checks()) {
    std::string w = c.witness;
    for (size_t i = 0; i < w.size(); ++i)
      if (w[i] == '|') w[i] = '!';
    out += c.suite + " & \\verb|" + c.id + "| & " + status_name(c.status) + " & \\verb|" + w +
           "| \\\\\n";
  }
  out += "\\end{tabular}\n";
  out += r.overall() ? "% overall: pass\n" : "% overall: FAIL\n";
  return out;
}

std::string emit(const SuiteResult& r, const std::string& format) {
  if (format == "text") return emit_text(r);
  if (format == "json") return emit_json(r);
  if (format == "latex") return emit_latex(r);
  throw std::invalid_argument("unknown format: " + format);
}

}  // namespace heatframe
