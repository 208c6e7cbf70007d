#include "chaosforge/rng.hpp"

#include <cmath>
#include <stdexcept>

namespace chaosforge {

double ChaosRng::normal() {
  if (have_spare_) {
    have_spare_ = false;
    return spare_;
  }
  double u, v, s;
  do {
    u = 2.0 * uniform() - 1.0;
    v = 2.0 * uniform() - 1.0;
    s = u * u + v * v;
  } while (s >= 1.0 || s == 0.0);
  const double f = std::sqrt(-2.0 * std::log(s) / s);
  spare_ = v * f;
  have_spare_ = true;
  return u * f;
}

std::complex<double> ChaosRng::complex_normal() {
  const double x = normal();
  const double y = normal();
  return {x * M_SQRT1_2, y * M_SQRT1_2};
}

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
  // splitmix64 finalizer over master advanced by the golden-ratio increment.
  std::uint64_t x = master + 0x9E3779B97F4A7C15ULL * (index + 1);
  x ^= x >> 30;
  x *= 0xBF58476D1CE4E5B9ULL;
  x ^= x >> 27;
  x *= 0x94D049BB133111EBULL;
  x ^= x >> 31;
  return x;
}

GaussianSample sample_gaussian(int d, ChaosRng& rng) {
  if (d < 1) throw std::domain_error("sample_gaussian: d must be >= 1");
  GaussianSample s;
  s.d = d;
  s.values.resize(static_cast<std::size_t>(d));
  for (int c = 0; c < d; ++c) s.values[static_cast<std::size_t>(c)] = rng.complex_normal();
  return s;
}

}  // namespace chaosforge
