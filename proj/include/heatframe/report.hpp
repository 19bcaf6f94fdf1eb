#ifndef HEATFRAME_REPORT_HPP
#define HEATFRAME_REPORT_HPP

#include <string>
#include <utility>
#include <vector>

namespace heatframe {

/// pass/fail are mandatory checks; info records carry measurements and
/// known-discrepancy diffs that only fail a run under --strict.
enum class CheckStatus { Pass, Fail, Info };

struct CheckRecord {
  std::string suite;
  std::string id;      // stable relation id, e.g. "g2.bracket[L2,L4]"
  std::string locus;   // the printed object being checked
  CheckStatus status = CheckStatus::Pass;
  std::string witness; // residual / measured value, empty for a clean pass
  double duration_ms = 0;
  /// informational diffs and unexpected measurements fail under --strict;
  /// plain measurements never do
  bool strict_fails = false;
  /// structured payload for machine consumers (diff records carry
  /// expected / derived / convention here)
  std::vector<std::pair<std::string, std::string>> details;
};

class RelationReport {
public:
  const std::vector<CheckRecord>& checks() const { return checks_; }

  void add(CheckRecord r) { checks_.push_back(std::move(r)); }
  void merge(const RelationReport& o) {
    checks_.insert(checks_.end(), o.checks_.begin(), o.checks_.end());
  }

  void check(const std::string& suite, const std::string& id, const std::string& locus,
             bool ok, const std::string& witness_on_fail = "") {
    CheckRecord r;
    r.suite = suite;
    r.id = id;
    r.locus = locus;
    r.status = ok ? CheckStatus::Pass : CheckStatus::Fail;
    if (!ok) r.witness = witness_on_fail;
    add(std::move(r));
  }
  void info(const std::string& suite, const std::string& id, const std::string& locus,
            const std::string& witness, bool strict_fails = false) {
    CheckRecord r;
    r.suite = suite;
    r.id = id;
    r.locus = locus;
    r.status = CheckStatus::Info;
    r.witness = witness;
    r.strict_fails = strict_fails;
    add(std::move(r));
  }

  size_t failures(bool strict = false) const;
  bool all_passed(bool strict = false) const { return failures(strict) == 0; }
  size_t size() const { return checks_.size(); }

private:
  std::vector<CheckRecord> checks_;
};

struct SuiteResult {
  int schema = 1;
  std::string command;
  bool strict = false;
  bool with_timestamp = true;
  std::string timestamp;
  RelationReport report;

  bool overall() const { return report.all_passed(strict); }
};

std::string emit_text(const SuiteResult& r);
std::string emit_json(const SuiteResult& r);
std::string emit_latex(const SuiteResult& r);
std::string emit(const SuiteResult& r, const std::string& format);

}  // namespace heatframe

#endif
