#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace chaosforge {

// One identity check: lhs is the reference (exact/oracle) value, rhs the
// candidate; rel_err = abs_err / max(1, |lhs|).
struct VerificationReport {
  std::string case_name;
  int m = 0, n = 0, d = 0;
  std::uint64_t seed = 0;
  double lhs = 0.0, rhs = 0.0;
  double abs_err = 0.0, rel_err = 0.0;
  bool pass = false;
};

enum class ReportFormat { kJson, kCsv };

// Fills abs_err/rel_err/pass from lhs, rhs and a relative tolerance.
VerificationReport make_report(std::string case_name, int m, int n, int d,
                               std::uint64_t seed, double lhs, double rhs, double rel_tol);

// Serializes reports; CSV columns are fixed:
// case,m,n,d,seed,lhs,rhs,abs_err,rel_err,pass
void emit_report(const std::vector<VerificationReport>& results, ReportFormat format,
                 const std::string& path);

// Reads back a JSON report file (round-trip support).
std::vector<VerificationReport> read_report_json(const std::string& path);

bool all_pass(const std::vector<VerificationReport>& results);

}  // namespace chaosforge
