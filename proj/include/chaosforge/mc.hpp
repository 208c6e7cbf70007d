#pragma once

#include <cstdint>

#include "chaosforge/kernel_tensor.hpp"

namespace chaosforge {

enum class MomentSelector { kM2, kM4, kF2 };

struct McResult {
  Complex estimate;
  double stderror = 0.0;
};

// Sample mean of |F|^2, |F|^4 or F^2 for F = I_{m,n}(f~) over n_samples
// draws, with standard error = sample stddev / sqrt(n). Draws are split
// over 64 fixed logical shards with seeds derived from (seed, shard) and
// recombined in shard order, so the result is byte-identical for any
// worker count. Requires n_samples >= 1000.
McResult mc_estimate(const KernelTensor& f, MomentSelector which, std::int64_t n_samples,
                     std::uint64_t seed);

}  // namespace chaosforge
