#pragma once

#include <complex>
#include <cstdint>
#include <random>
#include <vector>

namespace chaosforge {

// Deterministic random source. std::normal_distribution and friends are
// implementation defined, so reproducibility across platforms requires
// pinning the whole path from raw engine output to the final draw: a fixed
// 53-bit uniform and the Marsaglia polar transform for normals.
class ChaosRng {
 public:
  explicit ChaosRng(std::uint64_t seed) : eng_(seed) {}

  // Uniform draw in [0, 1) with 53 significant bits.
  double uniform() {
    return static_cast<double>(eng_() >> 11) * 0x1.0p-53;
  }

  // Standard real normal via the polar method.
  double normal();

  // Standard complex normal Z = (X + iY)/sqrt(2): E[Z conj(Z)] = 1, E[Z^2] = 0.
  std::complex<double> complex_normal();

 private:
  std::mt19937_64 eng_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

// Stateless mixing of (master seed, index) into an independent stream seed;
// used for per-case corpus seeds and per-shard Monte Carlo seeds.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index);

// One realization of d independent standard complex Gaussians.
struct GaussianSample {
  int d = 0;
  std::vector<std::complex<double>> values;
};

GaussianSample sample_gaussian(int d, ChaosRng& rng);

}  // namespace chaosforge
