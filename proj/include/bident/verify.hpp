#ifndef BIDENT_VERIFY_HPP
#define BIDENT_VERIFY_HPP

#include <string>
#include <vector>

// Named invariant suites driven by the CLI `verify` subcommand.  Each check
// runs a deterministic (fixed-seed) randomized or exhaustive sweep and
// reports a counterexample payload on failure.  The parity suite is
// report-only: a violation is recorded but does not fail the run.

namespace bident {

struct CheckResult {
  std::string name;
  bool pass = false;
  bool report_only = false;  // parity-style findings
  long cases = 0;
  std::string detail;        // counterexample or summary payload
};

inline constexpr const char* kVerifySuites[] = {"lemmas-F",  "smooth-oracle", "total-oracle",
                                                "critical",  "bounds",        "parity"};

/// Runs one suite; max_n < 0 picks the suite's default sweep bound
/// (smooth-oracle 25, total-oracle 12, critical 8, bounds 43, parity 60).
std::vector<CheckResult> run_suite(const std::string& suite, int max_n);

/// True when every non-report-only check passed.
bool all_passed(const std::vector<CheckResult>& results);

}  // namespace bident

#endif
