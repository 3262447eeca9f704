#pragma once

#include <string>
#include <vector>

#include "etm/json_io.hpp"

namespace etm {

enum class CaseStatus { Pass, Fail, SkippedCap };
std::string to_string(CaseStatus s);

struct CaseResult {
  std::string id;
  std::string expected;
  std::string observed;
  CaseStatus status = CaseStatus::Pass;
};

struct SuiteReport {
  std::string suite;
  std::vector<CaseResult> cases;
  double runtime_s = 0;
  bool ok() const;
  size_t count(CaseStatus s) const;
};

struct SuiteOptions {
  unsigned threads = 1;
  uint64_t cap = 10'000'000;  // largest group or map (in elements / flags) a case may build
};

const std::vector<std::string>& suite_names();
// Throws std::invalid_argument for an unknown suite name.
SuiteReport run_suite(const std::string& name, const SuiteOptions& opts = {});

json report_to_json(const SuiteReport& r, bool with_runtime = false);
std::string report_to_markdown(const SuiteReport& r, bool with_runtime = false);

// Grid rendering of table verdicts, one row per class and one column per
// group, cells "+" / "-" with a trailing "!" where computation and catalog
// disagree.
std::string table_markdown(GroupKind kind, const std::vector<unsigned>& params, bool even, unsigned threads = 1);

}  // namespace etm
