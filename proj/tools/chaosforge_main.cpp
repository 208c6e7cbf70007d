#include <complex>
#include <cstdint>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "chaosforge/families.hpp"
#include "chaosforge/hermite.hpp"
#include "chaosforge/io.hpp"
#include "chaosforge/mc.hpp"
#include "chaosforge/report.hpp"
#include "chaosforge/sweep.hpp"
#include "chaosforge/verify.hpp"
#include "chaosforge/version.hpp"

namespace {

using chaosforge::Complex;

void print_banner(std::uint64_t seed) {
  std::cout << chaosforge::kToolName << " " << chaosforge::kToolVersion << "\n"
            << "seed: " << seed << "\n";
}

std::string fmt_complex(Complex z) {
  std::ostringstream os;
  os << std::setprecision(17) << z.real();
  if (z.imag() >= 0.0)
    os << " + " << std::setprecision(17) << z.imag() << "i";
  else
    os << " - " << std::setprecision(17) << -z.imag() << "i";
  return os.str();
}

int run_hermite_eval(int m, int n, double z_re, double z_im, double rho) {
  print_banner(0);
  const Complex z(z_re, z_im);
  std::cout << "J(" << m << "," << n << "; z=" << fmt_complex(z) << ", rho="
            << std::setprecision(17) << rho << ")\n"
            << "value: " << fmt_complex(chaosforge::hermite_eval(m, n, z, rho)) << "\n"
            << "dz:    " << fmt_complex(chaosforge::hermite_dz(m, n, z, rho)) << "\n"
            << "dzbar: " << fmt_complex(chaosforge::hermite_dzbar(m, n, z, rho)) << "\n"
            << "drho:  " << fmt_complex(chaosforge::hermite_drho(m, n, z, rho)) << "\n";
  return 0;
}

int run_verify_cmd(const std::string& suite, std::uint64_t seed, const std::string& out,
                   const std::string& format) {
  print_banner(seed);
  const std::vector<chaosforge::VerificationReport> reports =
      chaosforge::run_verify(suite, seed);
  int passed = 0;
  for (const auto& r : reports) {
    if (r.pass) ++passed;
    std::cout << (r.pass ? "[pass] " : "[FAIL] ") << r.case_name
              << "  rel_err=" << std::setprecision(3) << r.rel_err << "\n";
  }
  std::cout << "suite " << suite << ": " << passed << "/" << reports.size()
            << " checks passed\n";
  if (!out.empty()) {
    const auto fmt = (format == "csv") ? chaosforge::ReportFormat::kCsv
                                       : chaosforge::ReportFormat::kJson;
    chaosforge::emit_report(reports, fmt, out);
    std::cout << "report written: " << out << "\n";
  }
  return chaosforge::all_pass(reports) ? 0 : 1;
}

int run_sweep_cmd(const std::string& family, int m, int n, const std::vector<int>& dims,
                  std::uint64_t seed, int count, const std::string& file,
                  std::int64_t mc_samples, const std::string& out) {
  print_banner(seed);
  chaosforge::SweepConfig config;
  if (family == "diagonal")
    config.family = chaosforge::Family::kDiagonal;
  else if (family == "random-sparse")
    config.family = chaosforge::Family::kRandomSparse;
  else if (family == "file")
    config.family = chaosforge::Family::kFile;
  else
    throw std::invalid_argument("unknown family: " + family);
  config.m = m;
  config.n = n;
  config.dims = dims;
  config.seed = seed;
  config.count = count;
  config.path = file;
  config.mc_samples = mc_samples;

  const chaosforge::SweepResult result = chaosforge::run_sweep(config);
  for (const auto& row : result.rows) {
    std::cout << "k=" << row.k << " d=" << row.d << " gap=" << std::setprecision(17)
              << row.gap << " bound=" << row.bound;
    if (row.mc_m4)
      std::cout << " mc_m4=" << row.mc_m4->first << " mc_se=" << row.mc_m4->second;
    std::cout << "\n";
  }
  std::cout << "sym_le_nonsym: " << (result.sym_le_nonsym ? "true" : "false") << "\n"
            << "gap_decreasing: " << (result.gap_decreasing ? "true" : "false") << "\n"
            << "norms_decreasing: " << (result.norms_decreasing ? "true" : "false") << "\n"
            << "gap_within_bound: " << (result.gap_within_bound ? "true" : "false") << "\n";
  const nlohmann::json j = chaosforge::sweep_to_json(result);
  if (!out.empty()) {
    chaosforge::save_json_file(j, out);
    std::cout << "sweep written: " << out << "\n";
  } else {
    std::cout << j.dump(2) << "\n";
  }
  // The two direction checks are invariants for every kernel; the decay
  // flags are descriptive (a constant sequence legitimately reports false).
  return (result.sym_le_nonsym && result.gap_within_bound) ? 0 : 1;
}

int run_mc_cmd(const std::string& kernel_path, const std::string& moment,
               std::int64_t n_samples, std::uint64_t seed) {
  print_banner(seed);
  const nlohmann::json j = chaosforge::load_json_file(kernel_path);
  const chaosforge::KernelTensor f = chaosforge::kernel_from_json(j);
  chaosforge::MomentSelector sel;
  if (moment == "m2")
    sel = chaosforge::MomentSelector::kM2;
  else if (moment == "m4")
    sel = chaosforge::MomentSelector::kM4;
  else if (moment == "f2")
    sel = chaosforge::MomentSelector::kF2;
  else
    throw std::invalid_argument("unknown moment: " + moment);
  const chaosforge::McResult r = chaosforge::mc_estimate(f, sel, n_samples, seed);
  std::cout << "kernel: d=" << f.d() << " m=" << f.m() << " n=" << f.n() << "\n"
            << "moment: " << moment << "  samples: " << n_samples << "\n"
            << "estimate: " << fmt_complex(r.estimate) << "\n"
            << "stderr: " << std::setprecision(17) << r.stderror << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite-dimensional complex Wiener chaos calculus harness"};
  app.set_version_flag("--version", std::string(chaosforge::kToolName) + " " +
                                        chaosforge::kToolVersion);
  app.require_subcommand(1);

  // hermite eval
  auto* hermite = app.add_subcommand("hermite", "complex Hermite polynomial utilities");
  hermite->require_subcommand(1);
  auto* heval = hermite->add_subcommand("eval", "evaluate J(m,n; z, rho) and derivatives");
  int h_m = 0, h_n = 0;
  double h_zre = 0.0, h_zim = 0.0, h_rho = 1.0;
  heval->add_option("--m", h_m, "unbarred degree")->required()->check(CLI::NonNegativeNumber);
  heval->add_option("--n", h_n, "barred degree")->required()->check(CLI::NonNegativeNumber);
  heval->add_option("--z-re", h_zre, "Re z")->required();
  heval->add_option("--z-im", h_zim, "Im z")->required();
  heval->add_option("--rho", h_rho, "variance parameter")->capture_default_str();

  // verify
  auto* verify = app.add_subcommand("verify", "run a named identity suite");
  std::string v_suite, v_out, v_format = "json";
  std::uint64_t v_seed = 20260815;
  verify->add_option("--suite", v_suite, "suite name")
      ->required()
      ->check(CLI::IsMember(chaosforge::verify_suites()));
  verify->add_option("--seed", v_seed, "master seed")->capture_default_str();
  verify->add_option("--out", v_out, "report output path");
  verify->add_option("--format", v_format, "report format")
      ->capture_default_str()
      ->check(CLI::IsMember({"json", "csv"}));

  // sweep
  auto* sweep = app.add_subcommand("sweep", "kernel-sequence convergence sweep");
  std::string s_family = "diagonal", s_file, s_out;
  int s_m = 1, s_n = 1, s_count = 0;
  std::vector<int> s_dims;
  std::uint64_t s_seed = 20260815;
  std::int64_t s_mc = 0;
  sweep->add_option("--family", s_family, "diagonal | random-sparse | file")
      ->capture_default_str()
      ->check(CLI::IsMember({"diagonal", "random-sparse", "file"}));
  sweep->add_option("--m", s_m, "unbarred slot count")->capture_default_str();
  sweep->add_option("--n", s_n, "barred slot count")->capture_default_str();
  sweep->add_option("--dims", s_dims, "increasing dimensions, e.g. 1,2,4,8")
      ->delimiter(',');
  sweep->add_option("--seed", s_seed, "master seed")->capture_default_str();
  sweep->add_option("--count", s_count, "sequence length for the file family");
  sweep->add_option("--file", s_file, "kernel JSON path for the file family");
  sweep->add_option("--mc-samples", s_mc, "adds a Monte Carlo fourth-moment column");
  sweep->add_option("--out", s_out, "sweep JSON output path");

  // mc
  auto* mc = app.add_subcommand("mc", "Monte Carlo moment estimate for one kernel");
  std::string m_kernel, m_moment = "m2";
  std::int64_t m_n = 100000;
  std::uint64_t m_seed = 20260815;
  mc->add_option("--kernel", m_kernel, "kernel JSON path")->required();
  mc->add_option("--moment", m_moment, "m2 | m4 | f2")
      ->capture_default_str()
      ->check(CLI::IsMember({"m2", "m4", "f2"}));
  mc->add_option("--n", m_n, "sample count (>= 1000)")->capture_default_str();
  mc->add_option("--seed", m_seed, "master seed")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (heval->parsed()) return run_hermite_eval(h_m, h_n, h_zre, h_zim, h_rho);
    if (verify->parsed()) return run_verify_cmd(v_suite, v_seed, v_out, v_format);
    if (sweep->parsed())
      return run_sweep_cmd(s_family, s_m, s_n, s_dims, s_seed, s_count, s_file, s_mc, s_out);
    if (mc->parsed()) return run_mc_cmd(m_kernel, m_moment, m_n, m_seed);
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
