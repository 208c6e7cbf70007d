#include "chaosforge/sweep.hpp"

#include <cmath>
#include <stdexcept>

#include "chaosforge/chaos.hpp"
#include "chaosforge/combinatorics.hpp"
#include "chaosforge/families.hpp"
#include "chaosforge/io.hpp"
#include "chaosforge/mc.hpp"

namespace chaosforge {

using nlohmann::json;

namespace {

double profile_gap_bound(const ContractionProfile& prof) {
  const int m = prof.m, n = prof.n, l = prof.l, mn = std::min(m, n);
  const auto fh_at = [&](int i, int j) {
    const auto it = prof.entries.find({i, j});
    return (it != prof.entries.end() && it->second.fh) ? *it->second.fh : 0.0;
  };
  const auto Nw = [&](int x) {
    return binom(m, x) * binom(m, x) * binom(n, x) * binom(n, x) * fact(x) * fact(x) *
           fact(m - x) * fact(n - x);
  };
  double bound = 0.0;
  for (int a = 0; a <= mn; ++a) {
    for (int b = 0; b <= mn; ++b) {
      if (a + b == 0) continue;
      if (m == n && a == m && b == m) continue;
      const auto it = prof.entries.find({a, b});
      const double ff = (it != prof.entries.end() && it->second.ff) ? *it->second.ff : 0.0;
      bound += Nw(a) * Nw(b) * ff * ff;
    }
  }
  // ||psi_r|| <= sum of the weighted plain contraction norms (triangle
  // inequality plus symmetrization being a norm contraction).
  for (int r = 1; r <= l - 1; ++r) {
    double psi = 0.0;
    for (int i = std::max(0, r - n); i <= std::min(m, r); ++i) {
      const int j = r - i;
      psi += binom(m, i) * binom(m, i) * binom(n, j) * binom(n, j) * fact(i) * fact(j) *
             fh_at(i, j);
    }
    bound += fact(l - r) * fact(l - r) * psi * psi;
  }
  return bound;
}

std::vector<KernelTensor> build_sequence(const SweepConfig& config) {
  std::vector<KernelTensor> seq;
  switch (config.family) {
    case Family::kDiagonal:
      for (int d : config.dims) seq.push_back(gen_diagonal(config.m, config.n, d));
      break;
    case Family::kRandomSparse:
      for (std::size_t k = 0; k < config.dims.size(); ++k) {
        ChaosRng rng(derive_seed(config.seed, k));
        seq.push_back(gen_random_sparse(config.m, config.n, config.dims[k], rng));
      }
      break;
    case Family::kFile: {
      if (config.count < 1)
        throw std::domain_error("sweep: file family needs count >= 1");
      const KernelTensor K = kernel_from_json(load_json_file(config.path));
      for (int k = 0; k < config.count; ++k) seq.push_back(K);
      break;
    }
  }
  return seq;
}

}  // namespace

SweepResult run_sweep(const SweepConfig& config) {
  if (config.m + config.n < 2) throw std::domain_error("sweep: requires m+n >= 2");
  if (config.family != Family::kFile) {
    if (config.dims.empty()) throw std::domain_error("sweep: dims must be nonempty");
    for (std::size_t k = 0; k < config.dims.size(); ++k) {
      if (config.dims[k] < 1 || (k > 0 && config.dims[k] <= config.dims[k - 1]))
        throw std::domain_error("sweep: dims must be strictly increasing and >= 1");
    }
  }

  SweepResult result;
  result.config = config;
  const std::vector<KernelTensor> seq = build_sequence(config);
  for (std::size_t k = 0; k < seq.size(); ++k) {
    SweepRow row;
    row.k = static_cast<int>(k);
    row.d = seq[k].d();
    row.profile = contraction_profile(seq[k]);
    row.gap = gap_exact(seq[k]);
    row.bound = profile_gap_bound(row.profile);
    if (config.mc_samples >= 1000) {
      const McResult mc =
          mc_estimate(seq[k], MomentSelector::kM4, config.mc_samples,
                      derive_seed(config.seed, 1000 + k));
      row.mc_m4 = std::pair{mc.estimate.real(), mc.stderror};
    }
    result.rows.push_back(std::move(row));
  }

  result.sym_le_nonsym = true;
  result.gap_within_bound = true;
  for (const auto& row : result.rows) {
    for (const auto& [ij, norms] : row.profile.entries) {
      if (norms.ff && *norms.ff_sym > *norms.ff * (1.0 + 1e-12) + 1e-12)
        result.sym_le_nonsym = false;
      if (norms.fh && *norms.fh_sym > *norms.fh * (1.0 + 1e-12) + 1e-12)
        result.sym_le_nonsym = false;
    }
    if (row.gap > row.bound * (1.0 + 1e-9) + 1e-12) result.gap_within_bound = false;
  }
  result.gap_decreasing = true;
  result.norms_decreasing = true;
  for (std::size_t k = 1; k < result.rows.size(); ++k) {
    const auto& prev = result.rows[k - 1];
    const auto& cur = result.rows[k];
    if (!(cur.gap < prev.gap)) result.gap_decreasing = false;
    for (const auto& [ij, norms] : cur.profile.entries) {
      const auto it = prev.profile.entries.find(ij);
      if (it == prev.profile.entries.end()) continue;
      if (norms.ff && it->second.ff && !(*norms.ff < *it->second.ff))
        result.norms_decreasing = false;
      if (norms.fh && it->second.fh && !(*norms.fh < *it->second.fh))
        result.norms_decreasing = false;
    }
  }
  return result;
}

json profile_to_json(const ContractionProfile& prof) {
  json entries = json::array();
  for (const auto& [ij, norms] : prof.entries) {
    json e{{"i", ij.first}, {"j", ij.second}};
    if (norms.ff) {
      e["ff"] = *norms.ff;
      e["ff_sym"] = *norms.ff_sym;
    }
    if (norms.fh) {
      e["fh"] = *norms.fh;
      e["fh_sym"] = *norms.fh_sym;
    }
    entries.push_back(std::move(e));
  }
  return json{{"m", prof.m},           {"n", prof.n}, {"l", prof.l},
              {"lprime", prof.lprime}, {"d", prof.d}, {"entries", std::move(entries)}};
}

json sweep_to_json(const SweepResult& result) {
  const char* family = result.config.family == Family::kDiagonal      ? "diagonal"
                       : result.config.family == Family::kRandomSparse ? "random-sparse"
                                                                     : "file";
  json rows = json::array();
  for (const auto& row : result.rows) {
    json r{{"k", row.k},
           {"d", row.d},
           {"gap", row.gap},
           {"bound", row.bound},
           {"profile", profile_to_json(row.profile)}};
    if (row.mc_m4)
      r["mc_m4"] = json{{"estimate", row.mc_m4->first}, {"stderr", row.mc_m4->second}};
    rows.push_back(std::move(r));
  }
  return json{{"family", family},
              {"m", result.config.m},
              {"n", result.config.n},
              {"seed", result.config.seed},
              {"dims", result.config.dims},
              {"rows", std::move(rows)},
              {"flags",
               json{{"sym_le_nonsym", result.sym_le_nonsym},
                    {"gap_decreasing", result.gap_decreasing},
                    {"norms_decreasing", result.norms_decreasing},
                    {"gap_within_bound", result.gap_within_bound}}}};
}

}  // namespace chaosforge
