#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "chaosforge/moments.hpp"

#include "json.hpp"

namespace chaosforge {

enum class Family { kDiagonal, kRandomSparse, kFile };

// Description of a kernel sequence {f_k}. The generator families produce one
// element per entry of dims (strictly increasing); the file family repeats
// the kernel loaded from path count times (a no-decay negative control).
struct SweepConfig {
  Family family = Family::kDiagonal;
  int m = 1, n = 1;
  std::vector<int> dims;
  std::uint64_t seed = 0;
  int count = 0;
  std::string path;
  std::int64_t mc_samples = 0;  // >= 1000 adds a Monte Carlo |F|^4 column
};

struct SweepRow {
  int k = 0;
  int d = 0;
  double gap = 0.0;
  // Upper bound for the gap assembled from non-symmetrized profile norms
  // alone (triangle inequality on the psi terms), demonstrating that
  // vanishing contraction norms force a vanishing gap.
  double bound = 0.0;
  ContractionProfile profile;
  std::optional<std::pair<double, double>> mc_m4;  // estimate, stderr
};

struct SweepResult {
  SweepConfig config;
  std::vector<SweepRow> rows;
  bool sym_le_nonsym = false;    // symmetrized <= plain norm at every entry
  bool gap_decreasing = false;   // strict decrease along the sequence
  bool norms_decreasing = false; // strict decrease of every plain norm
  bool gap_within_bound = false; // gap <= bound at every row
};

SweepResult run_sweep(const SweepConfig& config);

nlohmann::json profile_to_json(const ContractionProfile& prof);
nlohmann::json sweep_to_json(const SweepResult& result);

}  // namespace chaosforge
