// Acceptance battery: one PASS/FAIL line per criterion.  Each criterion is
// evaluated from the verification suites plus its runtime budget; the
// determinism criterion runs the CLI twice and compares the bytes.

#include <sys/wait.h>

#include <array>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "exlie/verify.hpp"

namespace {

using Clock = std::chrono::steady_clock;

struct Timed {
  exlie::SuiteResult result;
  double seconds = 0;
};

Timed timed_suite(const std::string& name, const exlie::VerifyOptions& opts) {
  const auto t0 = Clock::now();
  Timed t{exlie::run_suite(name, opts), 0};
  t.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  return t;
}

std::string fmt_seconds(double s) {
  std::ostringstream os;
  os.precision(2);
  os << std::fixed << s << " s";
  return os.str();
}

struct Criterion {
  int number;
  bool pass;
  std::string detail;
};

// Summary of a set of suites against a combined time budget.
Criterion from_suites(int number, const std::vector<const Timed*>& suites, double budget) {
  int passed = 0, failed = 0;
  double seconds = 0;
  std::vector<std::string> failures;
  for (const Timed* t : suites) {
    passed += t->result.passed();
    failed += t->result.failed();
    seconds += t->seconds;
    for (const auto& f : t->result.failures) failures.push_back(f);
  }
  std::ostringstream os;
  os << passed << " checks passed, " << failed << " failed in " << fmt_seconds(seconds)
     << " (budget " << fmt_seconds(budget) << ")";
  const std::size_t shown = std::min<std::size_t>(failures.size(), 4);
  for (std::size_t i = 0; i < shown; ++i) os << "; " << failures[i];
  if (failures.size() > shown) os << "; ... " << failures.size() - shown << " more";
  return {number, failed == 0 && seconds < budget, os.str()};
}

struct Run {
  int code = -1;
  std::string out;
};

Run run_cli(const std::string& cli, const std::string& args) {
  Run r;
  const std::string cmd = "'" + cli + "' " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

Criterion determinism(int number) {
  const char* cli = std::getenv("EXLIE_CLI");
  if (!cli) return {number, false, "EXLIE_CLI is not set; cannot run the CLI"};
  const Run a = run_cli(cli, "verify-all --seed 42");
  const Run b = run_cli(cli, "verify-all --seed 42");
  const bool same = !a.out.empty() && a.out == b.out && a.code == b.code;
  std::ostringstream os;
  os << "two runs of verify-all --seed 42: " << a.out.size() << " and " << b.out.size()
     << " bytes, " << (same ? "byte-identical" : "DIFFERENT") << " (exit " << a.code << ")";
  return {number, same, os.str()};
}

}  // namespace

int main() {
  exlie::VerifyOptions opts;  // seed 42, 100 trials
  std::map<std::string, Timed> s;
  for (const auto& name : exlie::suite_names()) s[name] = timed_suite(name, opts);

  std::vector<Criterion> criteria;
  criteria.push_back(from_suites(1, {&s["parabolic.max_table"]}, 5));
  criteria.push_back(from_suites(2, {&s["parabolic.bruhat"]}, 5));
  criteria.push_back(from_suites(3, {&s["realform.registry"]}, 5));
  criteria.push_back(from_suites(4, {&s["parabolic.gradings"]}, 10));
  criteria.push_back(from_suites(5, {&s["parabolic.long_short"]}, 5));
  criteria.push_back(from_suites(6, {&s["relations.table_a"]}, 5));
  Criterion c7 = from_suites(7, {&s["jordan.identities"]}, 60);
  c7.pass = c7.pass && opts.trials >= 100;
  c7.detail = std::to_string(opts.trials) + " trials per identity; " + c7.detail;
  criteria.push_back(c7);
  Criterion c8 = from_suites(8, {&s["fts.identities"]}, 60);
  c8.detail = std::to_string(opts.trials) + " trials per identity; " + c8.detail;
  criteria.push_back(c8);
  criteria.push_back(from_suites(9, {&s["symmetry.table1"]}, 120));
  criteria.push_back(from_suites(10, {&s["symmetry.lorentzian"]}, 30));
  Criterion c11 = from_suites(11, {&s["relations.roles"]}, 30);
  for (const auto& n : s["relations.roles"].result.notes) c11.detail += "; " + n;
  criteria.push_back(c11);
  criteria.push_back(determinism(12));

  int failed = 0;
  for (const auto& c : criteria) {
    std::cout << "Criterion " << c.number << ": " << (c.pass ? "PASS" : "FAIL") << " - "
              << c.detail << "\n";
    failed += !c.pass;
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria pass\n";
  return failed ? 1 : 0;
}
