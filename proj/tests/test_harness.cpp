#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "chaosforge/families.hpp"
#include "chaosforge/io.hpp"
#include "chaosforge/mc.hpp"
#include "chaosforge/moments.hpp"
#include "chaosforge/parallel.hpp"
#include "chaosforge/report.hpp"
#include "chaosforge/sweep.hpp"
#include "chaosforge/verify.hpp"

using namespace chaosforge;

namespace {

struct EnvGuard {
  explicit EnvGuard(const char* value) {
    if (value)
      setenv("CHAOSFORGE_THREADS", value, 1);
    else
      unsetenv("CHAOSFORGE_THREADS");
  }
  ~EnvGuard() { unsetenv("CHAOSFORGE_THREADS"); }
};

std::string tmp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / name).string();
}

}  // namespace

TEST_CASE("gen_diagonal worked values") {
  const KernelTensor f1 = gen_diagonal(1, 1, 1);
  CHECK(f1.size() == 1);
  CHECK(std::abs(f1[0] - Complex(1.0, 0.0)) < 1e-15);

  for (const int d : {1, 2, 3, 5}) {
    const KernelTensor f = gen_diagonal(2, 1, d);
    CHECK(std::abs(norm(f) - 1.0) < 1e-12);
  }

  const KernelTensor f2 = gen_diagonal(1, 1, 2);
  CHECK(norm_squared(contract(f2, f2, 1, 0)) == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("gen_random_sparse is unit-norm and symmetric") {
  ChaosRng rng(41);
  const KernelTensor f = gen_random_sparse(2, 1, 3, rng);
  CHECK(std::abs(norm(f) - 1.0) < 1e-12);
  const KernelTensor fs = symmetrize(f);
  for (Eigen::Index x = 0; x < f.size(); ++x) CHECK(std::abs(f[x] - fs[x]) < 1e-13);
}

TEST_CASE("diagonal sweep demonstrates the convergence equivalence") {
  SweepConfig config;
  config.family = Family::kDiagonal;
  config.m = 1;
  config.n = 1;
  config.dims = {1, 2, 4, 8};
  config.seed = 99;
  const SweepResult result = run_sweep(config);
  REQUIRE(result.rows.size() == 4);

  for (const auto& row : result.rows) {
    const double want = 6.0 / row.d;
    CHECK(std::abs(row.gap - want) <= 1e-9 * std::max(1.0, want));
    CHECK(row.gap <= row.bound * (1.0 + 1e-9));
    for (const auto& [ij, norms] : row.profile.entries) {
      const double w = 1.0 / row.d;
      if (norms.ff) CHECK(std::abs(*norms.ff * *norms.ff - w) < 1e-12);
      if (norms.fh) CHECK(std::abs(*norms.fh * *norms.fh - w) < 1e-12);
    }
  }
  CHECK(result.sym_le_nonsym);
  CHECK(result.gap_decreasing);
  CHECK(result.norms_decreasing);
  CHECK(result.gap_within_bound);

  // gap * d is constant along the diagonal family.
  const double c0 = result.rows[0].gap * result.rows[0].d;
  for (const auto& row : result.rows)
    CHECK(std::abs(row.gap * row.d - c0) <= 1e-9 * std::max(1.0, c0));

  const nlohmann::json j = sweep_to_json(result);
  CHECK(j.at("rows").size() == 4);
  CHECK(j.at("flags").at("gap_decreasing").get<bool>());
  CHECK(j.at("family").get<std::string>() == "diagonal");
}

TEST_CASE("random-sparse sweep keeps the direction invariants") {
  SweepConfig config;
  config.family = Family::kRandomSparse;
  config.m = 2;
  config.n = 0;
  config.dims = {2, 4, 8};
  config.seed = 17;
  const SweepResult result = run_sweep(config);
  REQUIRE(result.rows.size() == 3);
  CHECK(result.sym_le_nonsym);
  CHECK(result.gap_within_bound);
  for (const auto& row : result.rows) CHECK(std::isfinite(row.gap));
}

TEST_CASE("constant file sequence is a negative control") {
  const std::string path = tmp_path("chaosforge_const_kernel.json");
  save_json_file(kernel_to_json(gen_diagonal(1, 1, 2)), path);

  SweepConfig config;
  config.family = Family::kFile;
  config.m = 1;
  config.n = 1;
  config.path = path;
  config.count = 3;
  const SweepResult result = run_sweep(config);
  REQUIRE(result.rows.size() == 3);
  CHECK(result.sym_le_nonsym);
  CHECK(result.gap_within_bound);
  CHECK(!result.gap_decreasing);
  CHECK(!result.norms_decreasing);
  CHECK(result.rows[0].gap == doctest::Approx(result.rows[2].gap).epsilon(1e-12));
  std::filesystem::remove(path);
}

TEST_CASE("sweep validation errors") {
  SweepConfig config;
  config.family = Family::kDiagonal;
  config.m = 1;
  config.n = 0;  // m+n < 2
  config.dims = {1, 2};
  CHECK_THROWS_AS(run_sweep(config), std::domain_error);

  config.n = 1;
  config.dims = {2, 2};
  CHECK_THROWS_AS(run_sweep(config), std::domain_error);
  config.dims = {4, 2};
  CHECK_THROWS_AS(run_sweep(config), std::domain_error);
  config.dims = {};
  CHECK_THROWS_AS(run_sweep(config), std::domain_error);

  SweepConfig file_spec;
  file_spec.family = Family::kFile;
  file_spec.m = 1;
  file_spec.n = 1;
  file_spec.count = 0;
  CHECK_THROWS_AS(run_sweep(file_spec), std::domain_error);
}

TEST_CASE("monte carlo estimates hit the oracle values") {
  const KernelTensor f = make_kernel(1, 1, 1, {Complex(1.0, 0.0)});
  const McResult m2 = mc_estimate(f, MomentSelector::kM2, 100000, 7);
  CHECK(std::abs(m2.estimate - Complex(1.0, 0.0)) < 5.0 * m2.stderror);
  CHECK(m2.stderror > 0.0);

  const McResult m4 = mc_estimate(f, MomentSelector::kM4, 100000, 7);
  CHECK(std::abs(m4.estimate - Complex(9.0, 0.0)) < 5.0 * m4.stderror);

  const McResult f2 = mc_estimate(f, MomentSelector::kF2, 100000, 7);
  CHECK(std::abs(f2.estimate - Complex(1.0, 0.0)) < 5.0 * f2.stderror);
}

TEST_CASE("monte carlo is deterministic across worker counts") {
  const KernelTensor f = gen_diagonal(1, 1, 2);
  McResult base;
  {
    EnvGuard env(nullptr);
    base = mc_estimate(f, MomentSelector::kM4, 20000, 123);
    const McResult again = mc_estimate(f, MomentSelector::kM4, 20000, 123);
    CHECK(base.estimate == again.estimate);
    CHECK(base.stderror == again.stderror);
  }
  for (const char* workers : {"2", "5", "64"}) {
    EnvGuard env(workers);
    const McResult r = mc_estimate(f, MomentSelector::kM4, 20000, 123);
    CHECK(r.estimate == base.estimate);
    CHECK(r.stderror == base.stderror);
  }
  {
    EnvGuard env("not_a_number");
    const McResult r = mc_estimate(f, MomentSelector::kM4, 20000, 123);
    CHECK(r.estimate == base.estimate);
  }
}

TEST_CASE("monte carlo edge cases") {
  const KernelTensor zero(1, 1, 1);
  const McResult r = mc_estimate(zero, MomentSelector::kM2, 2000, 5);
  CHECK(r.estimate == Complex(0.0, 0.0));
  CHECK(r.stderror == 0.0);

  const KernelTensor f = make_kernel(1, 1, 1, {Complex(1.0, 0.0)});
  CHECK_THROWS_AS(mc_estimate(f, MomentSelector::kM2, 999, 5), std::domain_error);
}

TEST_CASE("parallel_for covers every index exactly once") {
  std::vector<int> hits(1000, 0);
  EnvGuard env("8");
  parallel_for(1000, [&](std::int64_t i) { hits[static_cast<std::size_t>(i)] += 1; });
  for (const int h : hits) CHECK(h == 1);
}

TEST_CASE("report serialization round-trips") {
  std::vector<VerificationReport> reports;
  reports.push_back(make_report("demo/a", 1, 1, 2, 42, 6.0, 6.0 + 1e-12, 1e-9));
  reports.push_back(make_report("demo/b", 2, 0, 1, 43, 16.0, 17.0, 1e-9));
  CHECK(reports[0].pass);
  CHECK(!reports[1].pass);
  CHECK(!all_pass(reports));

  const std::string jpath = tmp_path("chaosforge_report.json");
  emit_report(reports, ReportFormat::kJson, jpath);
  const auto back = read_report_json(jpath);
  REQUIRE(back.size() == 2);
  CHECK(back[0].case_name == "demo/a");
  CHECK(back[0].lhs == reports[0].lhs);
  CHECK(back[0].rhs == reports[0].rhs);
  CHECK(back[0].rel_err == reports[0].rel_err);
  CHECK(back[0].seed == 42);
  CHECK(back[0].pass);
  CHECK(back[1].m == 2);
  CHECK(!back[1].pass);
  std::filesystem::remove(jpath);
}

TEST_CASE("csv report layout") {
  const std::string cpath = tmp_path("chaosforge_report.csv");
  emit_report({}, ReportFormat::kCsv, cpath);
  {
    std::ifstream in(cpath);
    std::string line;
    REQUIRE(std::getline(in, line));
    CHECK(line == "case,m,n,d,seed,lhs,rhs,abs_err,rel_err,pass");
    CHECK(!std::getline(in, line));
  }

  emit_report({make_report("one", 1, 1, 1, 9, 1.0, 1.0, 1e-9)}, ReportFormat::kCsv, cpath);
  {
    std::ifstream in(cpath);
    std::string header, row;
    REQUIRE(std::getline(in, header));
    REQUIRE(std::getline(in, row));
    int commas = 0;
    for (const char c : row)
      if (c == ',') ++commas;
    CHECK(commas == 9);  // 10 fields
    CHECK(row.substr(0, 4) == "one,");
  }
  std::filesystem::remove(cpath);

  CHECK_THROWS_AS(emit_report({}, ReportFormat::kCsv, "/nonexistent_dir_xyz/r.csv"),
                  std::runtime_error);
}

TEST_CASE("kernel and element json round-trips") {
  ChaosRng rng(44);
  const KernelTensor f = random_kernel(2, 2, 1, rng);
  const KernelTensor back = kernel_from_json(kernel_to_json(f));
  CHECK(back.same_shape(f));
  for (Eigen::Index x = 0; x < f.size(); ++x) CHECK(back[x] == f[x]);

  ChaosElement F(2, Complex(0.5, -2.0));
  F.add_kernel(random_kernel(2, 1, 1, rng));
  F.add_kernel(random_kernel(2, 2, 2, rng));
  const ChaosElement Fb = element_from_json(element_to_json(F));
  CHECK(Fb.constant() == F.constant());
  REQUIRE(Fb.grades().size() == 2);
  const KernelTensor k11 = F.kernel_at(1, 1);
  const KernelTensor k11b = Fb.kernel_at(1, 1);
  double worst = 0.0;
  for (Eigen::Index x = 0; x < k11.size(); ++x)
    worst = std::max(worst, std::abs(k11[x] - k11b[x]));
  CHECK(worst < 1e-14);

  nlohmann::json bad = kernel_to_json(f);
  bad["entries"].erase(0);
  CHECK_THROWS_AS(kernel_from_json(bad), ShapeError);
  bad = kernel_to_json(f);
  bad["entries"][0] = nlohmann::json::array({1.0});
  CHECK_THROWS_AS(kernel_from_json(bad), ValidationError);

  CHECK_THROWS_AS(load_json_file("/nonexistent_dir_xyz/k.json"), std::runtime_error);
}

TEST_CASE("verify plumbing") {
  CHECK(verify_suites().size() == 5);
  CHECK_THROWS_AS(run_verify("no_such_suite", 1), std::invalid_argument);

  // Corpus construction is deterministic and cycles grades and dims.
  const auto corpus = identity_corpus(11, 24);
  REQUIRE(corpus.size() == 24);
  CHECK(corpus[0].m == 1);
  CHECK(corpus[0].n == 1);
  CHECK(corpus[0].d == 1);
  CHECK(corpus[1].m == 2);
  CHECK(corpus[1].n == 0);
  CHECK(corpus[6].d == 2);
  CHECK(corpus[12].d == 3);
  CHECK(corpus[18].d == 1);
  const auto corpus2 = identity_corpus(11, 24);
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    CHECK(corpus[i].seed == corpus2[i].seed);
    for (Eigen::Index x = 0; x < corpus[i].kernel.size(); ++x)
      CHECK(corpus[i].kernel[x] == corpus2[i].kernel[x]);
  }
}

TEST_CASE("hermite suite passes end to end") {
  const auto reports = run_verify("hermite", 2026);
  CHECK(!reports.empty());
  CHECK(all_pass(reports));
}
