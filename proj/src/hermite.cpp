#include "chaosforge/hermite.hpp"

#include <stdexcept>

#include "chaosforge/combinatorics.hpp"

namespace chaosforge {

using Complex = std::complex<double>;

Complex hermite_eval(int m, int n, Complex z, double rho) {
  if (m < 0 || n < 0) throw std::domain_error("hermite_eval: negative index");
  const Complex zb = std::conj(z);
  // Column b of the table holds J_{a,b} for a = 0..m; raise m first along
  // b = 0, then raise n one column at a time.
  std::vector<Complex> col(static_cast<std::size_t>(m) + 1);
  col[0] = 1.0;
  for (int a = 1; a <= m; ++a) col[a] = z * col[a - 1];
  std::vector<Complex> next(col.size());
  for (int b = 1; b <= n; ++b) {
    next[0] = zb * col[0];
    for (int a = 1; a <= m; ++a)
      next[a] = zb * col[a] - static_cast<double>(a) * rho * col[a - 1];
    col.swap(next);
  }
  return col[static_cast<std::size_t>(m)];
}

std::vector<std::int64_t> hermite_coeffs(int m, int n) {
  if (m < 0 || n < 0) throw std::domain_error("hermite_coeffs: negative index");
  const int kmax = std::min(m, n);
  if (kmax > 20) throw std::domain_error("hermite_coeffs: exceeds exact integer range");
  std::vector<std::int64_t> c(static_cast<std::size_t>(kmax) + 1);
  for (int k = 0; k <= kmax; ++k) {
    const std::int64_t v = fact_i64(k) * binom_i64(m, k) * binom_i64(n, k);
    c[static_cast<std::size_t>(k)] = (k % 2 == 0) ? v : -v;
  }
  return c;
}

Complex hermite_dz(int m, int n, Complex z, double rho) {
  if (m < 0 || n < 0) throw std::domain_error("hermite_dz: negative index");
  if (m == 0) return 0.0;
  return static_cast<double>(m) * hermite_eval(m - 1, n, z, rho);
}

Complex hermite_dzbar(int m, int n, Complex z, double rho) {
  if (m < 0 || n < 0) throw std::domain_error("hermite_dzbar: negative index");
  if (n == 0) return 0.0;
  return static_cast<double>(n) * hermite_eval(m, n - 1, z, rho);
}

Complex hermite_drho(int m, int n, Complex z, double rho) {
  if (m < 0 || n < 0) throw std::domain_error("hermite_drho: negative index");
  if (m == 0 || n == 0) return 0.0;
  return -static_cast<double>(m) * static_cast<double>(n) *
         hermite_eval(m - 1, n - 1, z, rho);
}

}  // namespace chaosforge
