#include "chaosforge/report.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "json.hpp"

namespace chaosforge {

using nlohmann::json;

VerificationReport make_report(std::string case_name, int m, int n, int d,
                               std::uint64_t seed, double lhs, double rhs, double rel_tol) {
  VerificationReport r;
  r.case_name = std::move(case_name);
  r.m = m;
  r.n = n;
  r.d = d;
  r.seed = seed;
  r.lhs = lhs;
  r.rhs = rhs;
  r.abs_err = std::abs(lhs - rhs);
  r.rel_err = r.abs_err / std::max(1.0, std::abs(lhs));
  r.pass = r.rel_err <= rel_tol;
  return r;
}

namespace {

json report_to_json(const VerificationReport& r) {
  return json{{"case", r.case_name}, {"m", r.m},           {"n", r.n},
              {"d", r.d},            {"seed", r.seed},     {"lhs", r.lhs},
              {"rhs", r.rhs},        {"abs_err", r.abs_err}, {"rel_err", r.rel_err},
              {"pass", r.pass}};
}

std::string csv_double(double v) {
  std::ostringstream os;
  os << std::setprecision(17) << v;
  return os.str();
}

}  // namespace

void emit_report(const std::vector<VerificationReport>& results, ReportFormat format,
                 const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write report: " + path);
  if (format == ReportFormat::kJson) {
    json arr = json::array();
    for (const auto& r : results) arr.push_back(report_to_json(r));
    out << arr.dump(2) << "\n";
  } else {
    out << "case,m,n,d,seed,lhs,rhs,abs_err,rel_err,pass\n";
    for (const auto& r : results) {
      out << r.case_name << ',' << r.m << ',' << r.n << ',' << r.d << ',' << r.seed << ','
          << csv_double(r.lhs) << ',' << csv_double(r.rhs) << ',' << csv_double(r.abs_err)
          << ',' << csv_double(r.rel_err) << ',' << (r.pass ? "true" : "false") << "\n";
    }
  }
  if (!out) throw std::runtime_error("failed writing report: " + path);
}

std::vector<VerificationReport> read_report_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read report: " + path);
  json arr;
  in >> arr;
  std::vector<VerificationReport> results;
  for (const auto& j : arr) {
    VerificationReport r;
    r.case_name = j.at("case").get<std::string>();
    r.m = j.at("m").get<int>();
    r.n = j.at("n").get<int>();
    r.d = j.at("d").get<int>();
    r.seed = j.at("seed").get<std::uint64_t>();
    r.lhs = j.at("lhs").get<double>();
    r.rhs = j.at("rhs").get<double>();
    r.abs_err = j.at("abs_err").get<double>();
    r.rel_err = j.at("rel_err").get<double>();
    r.pass = j.at("pass").get<bool>();
    results.push_back(std::move(r));
  }
  return results;
}

bool all_pass(const std::vector<VerificationReport>& results) {
  for (const auto& r : results)
    if (!r.pass) return false;
  return true;
}

}  // namespace chaosforge
