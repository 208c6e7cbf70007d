#pragma once

#include <utility>
#include <vector>

#include "chaosforge/chaos.hpp"

namespace chaosforge {

// H-valued random variable: component k is the chaos coefficient of basis
// vector e_k.
struct VectorChaos {
  int d = 0;
  std::vector<ChaosElement> components;
};

// D I_{m,n}(f) = m I_{m-1,n}(f(..., k; ...)): component k fixes the last
// unbarred slot of each kernel to k.
VectorChaos mall_D(const ChaosElement& F);

// Dbar I_{m,n}(f) = n I_{m,n-1}(f(...; ..., k)): last barred slot fixed.
// Components semantically carry conjugated basis vectors; in coordinates
// this is the same d-slot array, paired through h_inner.
VectorChaos mall_Dbar(const ChaosElement& F);

// Ornstein-Uhlenbeck operators: diagonal on chaos with eigenvalue m
// (respectively n); constants map to 0.
ChaosElement ou_L(const ChaosElement& F);
ChaosElement ou_Lbar(const ChaosElement& F);

// Pointwise H-inner product sum_k u_k conj(v_k), conjugate-linear in the
// second argument.
ChaosElement h_inner(const VectorChaos& u, const VectorChaos& v);

// Numerical Wirtinger pair (d/dz_k, d/dzbar_k) of the evaluated element via
// central differences in the real and imaginary directions, step 1e-5.
std::pair<Complex, Complex> wirtinger_fd(const ChaosElement& F, const GaussianSample& s,
                                         int k);

}  // namespace chaosforge
