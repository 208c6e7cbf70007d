#include "chaosforge/mc.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "chaosforge/chaos.hpp"
#include "chaosforge/parallel.hpp"

namespace chaosforge {

namespace {

constexpr std::int64_t kShards = 64;

}  // namespace

McResult mc_estimate(const KernelTensor& f, MomentSelector which, std::int64_t n_samples,
                     std::uint64_t seed) {
  if (n_samples < 1000) throw std::domain_error("mc_estimate: needs at least 1000 samples");
  const ChaosElement F = make_integral(f);
  const int d = f.d();

  struct Partial {
    Complex sum{0.0, 0.0};
    double sq = 0.0;
  };
  std::vector<Partial> partials(static_cast<std::size_t>(kShards));

  const std::int64_t base = n_samples / kShards;
  const std::int64_t extra = n_samples % kShards;
  parallel_for(kShards, [&](std::int64_t shard) {
    const std::int64_t count = base + (shard < extra ? 1 : 0);
    ChaosRng rng(derive_seed(seed, static_cast<std::uint64_t>(shard)));
    Partial p;
    for (std::int64_t k = 0; k < count; ++k) {
      const GaussianSample s = sample_gaussian(d, rng);
      const Complex v = evaluate(F, s);
      Complex x;
      switch (which) {
        case MomentSelector::kM2: x = std::norm(v); break;
        case MomentSelector::kM4: x = std::norm(v) * std::norm(v); break;
        case MomentSelector::kF2: x = v * v; break;
      }
      p.sum += x;
      p.sq += std::norm(x);
    }
    partials[static_cast<std::size_t>(shard)] = p;
  });

  Complex sum{0.0, 0.0};
  double sq = 0.0;
  for (const auto& p : partials) {
    sum += p.sum;
    sq += p.sq;
  }
  const double n = static_cast<double>(n_samples);
  const Complex mean = sum / n;
  const double var = std::max(0.0, (sq - n * std::norm(mean)) / (n - 1.0));
  return McResult{mean, std::sqrt(var / n)};
}

}  // namespace chaosforge
