#pragma once

#include <map>
#include <utility>
#include <vector>

#include "chaosforge/kernel_tensor.hpp"
#include "chaosforge/rng.hpp"
#include "chaosforge/wick.hpp"

namespace chaosforge {

// Grade (m, n): degree m in Z and n in conj(Z).
using Grade = std::pair<int, int>;

// Finite linear combination of multiple integrals I_{m,n}(f): a map from
// grade to kernel plus the grade-(0,0) constant. Kernels are stored
// symmetrized; the map never holds the (0,0) grade.
class ChaosElement {
 public:
  explicit ChaosElement(int d, Complex constant = 0.0);

  int d() const { return d_; }
  Complex constant() const { return constant_; }
  void set_constant(Complex c) { constant_ = c; }
  const std::map<Grade, KernelTensor>& grades() const { return grades_; }

  // Accumulates weight * I_{m,n}(symmetrize(K)); scalar shapes fold into
  // the constant. A weight of exactly zero is a no-op and does not
  // materialize the grade.
  void add_kernel(const KernelTensor& K, Complex weight = 1.0);

  // Same accumulation for K already symmetric in each slot group; skips
  // the symmetrization pass so integer-weighted operators stay exact.
  void add_presymmetrized(const KernelTensor& K, Complex weight = 1.0);

  // Kernel of one grade; zero tensor if the grade is absent.
  KernelTensor kernel_at(int m, int n) const;

 private:
  int d_;
  Complex constant_;
  std::map<Grade, KernelTensor> grades_;
};

// I_{m,n}(f~) as a one-grade element.
ChaosElement make_integral(const KernelTensor& f);

ChaosElement elem_add(const ChaosElement& F, const ChaosElement& G);
ChaosElement elem_scale(Complex c, const ChaosElement& F);

// Pathwise value: per grade, sum over multi-indices of f[alpha; beta] times
// the product over coordinates of J_{a_c, b_c}(Z_c, 1) where a_c, b_c count
// occurrences of c in alpha, beta.
Complex evaluate(const ChaosElement& F, const GaussianSample& s);

// Product formula: I_{m,n}(f) I_{p,q}(g) expands over contractions with
// coefficient C(m,i) C(q,i) C(n,j) C(p,j) i! j!, accumulated over all grade
// pairs; result kernels symmetrized.
ChaosElement multiply(const ChaosElement& F, const ChaosElement& G);

// Complex conjugate of the random variable: conj_flip gradewise.
ChaosElement conjugate_elem(const ChaosElement& F);

// Exact monomial expansion through the per-coordinate Hermite closed form.
WickPolynomial to_polynomial(const ChaosElement& F);

// Exact Gaussian expectation of a monomial expansion.
Complex exact_expectation(const WickPolynomial& P);

// Exact mixed moment E[prod F_k or conj(F_k)]; the bool flags conjugation.
Complex exact_moment(const std::vector<std::pair<ChaosElement, bool>>& factors);

// Isometry pairing E[F conj(G)]: sum over common grades of m! n!
// inner(f, g) plus the product of constants (second conjugated).
Complex l2_inner(const ChaosElement& F, const ChaosElement& G);

// Kernel with independent standard complex Gaussian entries, symmetrized.
KernelTensor random_kernel(int d, int m, int n, ChaosRng& rng);

}  // namespace chaosforge
