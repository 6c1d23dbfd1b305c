#pragma once

// The verification battery behind `verify-all`: golden-table comparisons and
// randomized property suites, each reported as pass/fail counts per item.

#include <cstdint>
#include <string>
#include <vector>

#include "exlie/real_form.hpp"

namespace exlie {

struct SuiteItem {
  std::string subject;
  int passed = 0;
  int failed = 0;
};

struct SuiteResult {
  std::string name;    // "parabolic.max_table"
  std::string module;  // "parabolic"
  std::vector<SuiteItem> items;
  std::vector<std::string> failures;  // one line per failing item
  std::vector<std::string> notes;     // informational remarks
  int passed() const;
  int failed() const;
  bool ok() const { return failed() == 0; }

  // Records one check; `detail` is appended to the failure line.
  void check(const std::string& subject, bool ok, const std::string& detail = "");
  void add_counts(const std::string& subject, int passed, int failed);
};

struct VerifyOptions {
  std::uint64_t seed = 42;
  int trials = 100;
  int jobs = 1;
  // Module or suite names to run ("parabolic", "relations.table_a"); empty = all.
  std::vector<std::string> only;
  // Registry to verify; the embedded one when null.
  const std::vector<RealForm>* forms = nullptr;
};

struct VerifyReport {
  std::vector<SuiteResult> suites;
  int failed() const;
  bool ok() const { return failed() == 0; }
};

// All suite names in execution order.
const std::vector<std::string>& suite_names();
bool suite_selected(const std::string& name, const std::vector<std::string>& only);
// Throws kUsage for an unknown suite name.
SuiteResult run_suite(const std::string& name, const VerifyOptions& opts);
// Runs the selected suites (in parallel when jobs > 1); results are in
// `suite_names()` order regardless of scheduling.  Throws kUsage when
// `only` selects nothing.
VerifyReport verify_all(const VerifyOptions& opts);

}  // namespace exlie
