#pragma once

#include "chaosforge/kernel_tensor.hpp"
#include "chaosforge/rng.hpp"

namespace chaosforge {

// Diagonal kernel d^(-1/2) sum_a e_a^{(x)m} (x) conj(e_a)^{(x)n}: unit norm
// with every proper contraction norm squared equal to 1/d.
KernelTensor gen_diagonal(int m, int n, int d);

// Unit-norm kernel with d Gaussian entries at random positions, symmetrized;
// a generic non-structured sequence member for sweeps.
KernelTensor gen_random_sparse(int m, int n, int d, ChaosRng& rng);

}  // namespace chaosforge
