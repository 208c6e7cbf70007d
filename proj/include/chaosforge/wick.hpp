#pragma once

#include <complex>
#include <cstdint>
#include <map>

#include "chaosforge/rng.hpp"

namespace chaosforge {

// Total-degree cap for the exact oracle. Everything the library verifies
// stays at or below E|F|^4 for grade (2,2), which is degree 16 exactly.
inline constexpr int kDegreeCap = 16;

// Largest dimension the packed monomial key supports.
inline constexpr int kWickMaxDim = 12;

// Monomial key: exponents of z_c and conj(z_c) for c = 0..d-1, packed 5 bits
// each (coordinate-major, z before conj(z); first 12 exponent slots in lo,
// the rest in hi). The default value is the constant monomial.
struct WickKey {
  std::uint64_t lo = 0, hi = 0;
  auto operator<=>(const WickKey&) const = default;
};

int wick_get(const WickKey& k, int coord, bool conjugated);
void wick_set(WickKey& k, int coord, bool conjugated, int value);

// Polynomial in z_1..z_d, conj(z_1)..conj(z_d) with complex coefficients;
// the representation behind the exact Wick/Isserlis moment oracle.
class WickPolynomial {
 public:
  explicit WickPolynomial(int d);

  int d() const { return d_; }
  const std::map<WickKey, std::complex<double>>& terms() const { return terms_; }

  void add_term(const WickKey& key, std::complex<double> coeff);
  int total_degree() const;

 private:
  int d_;
  std::map<WickKey, std::complex<double>> terms_;
};

WickPolynomial wick_add(const WickPolynomial& A, const WickPolynomial& B);

// Product with the degree cap enforced on the result.
WickPolynomial wick_mul(const WickPolynomial& A, const WickPolynomial& B);

// Complex conjugate: conjugates coefficients and swaps z/conj(z) exponents.
WickPolynomial wick_conj(const WickPolynomial& A);

// Exact Gaussian expectation: independent coordinates with
// E[z^p conj(z)^q] = [p == q] p!.
std::complex<double> wick_expectation(const WickPolynomial& P);

// Evaluates the polynomial at a sample point.
std::complex<double> wick_eval(const WickPolynomial& P, const GaussianSample& s);

}  // namespace chaosforge
