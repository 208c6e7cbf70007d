#include "chaosforge/families.hpp"

#include <cmath>

namespace chaosforge {

KernelTensor gen_diagonal(int m, int n, int d) {
  KernelTensor f(d, m, n);
  const double w = 1.0 / std::sqrt(static_cast<double>(d));
  for (int a = 0; a < d; ++a) {
    std::int64_t flat = 0;
    for (int s = 0; s < m + n; ++s) flat = flat * d + a;
    f[flat] += w;
  }
  return f;
}

KernelTensor gen_random_sparse(int m, int n, int d, ChaosRng& rng) {
  KernelTensor f(d, m, n);
  const Eigen::Index N = f.size();
  for (int k = 0; k < d; ++k) {
    const auto pos = static_cast<Eigen::Index>(rng.uniform() * static_cast<double>(N));
    f[std::min(pos, N - 1)] += rng.complex_normal();
  }
  KernelTensor sym = symmetrize(f);
  const double len = norm(sym);
  if (len > 0.0) sym = Complex(1.0 / len) * sym;
  return sym;
}

}  // namespace chaosforge
