#pragma once

#include <complex>
#include <cstdint>
#include <vector>

namespace chaosforge {

// Ito's two-index complex Hermite polynomials J_{m,n}(z, rho), defined by
// J_{0,0} = 1 and the raising recursions
//   J_{m+1,n} = z J_{m,n} - n rho J_{m,n-1}
//   J_{m,n+1} = conj(z) J_{m,n} - m rho J_{m-1,n}.

// Value of J_{m,n} computed by the recursions, raising m first then n.
std::complex<double> hermite_eval(int m, int n, std::complex<double> z, double rho);

// Signed integer coefficients c_k = (-1)^k k! C(m,k) C(n,k) of the closed
// form sum_k c_k rho^k z^(m-k) conj(z)^(n-k), k = 0..min(m,n).
std::vector<std::int64_t> hermite_coeffs(int m, int n);

// Partial derivatives: m J_{m-1,n}, n J_{m,n-1}, -m n J_{m-1,n-1}; zero
// whenever an index would go negative.
std::complex<double> hermite_dz(int m, int n, std::complex<double> z, double rho);
std::complex<double> hermite_dzbar(int m, int n, std::complex<double> z, double rho);
std::complex<double> hermite_drho(int m, int n, std::complex<double> z, double rho);

}  // namespace chaosforge
