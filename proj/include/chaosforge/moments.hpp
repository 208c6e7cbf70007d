#pragma once

#include <map>
#include <optional>

#include "chaosforge/kernel_tensor.hpp"

namespace chaosforge {

// Contraction norms of f against itself and against h = conj_flip(f), for
// all (i, j) with 0 < i+j <= l-1. A family is absent (nullopt) when its
// contraction counts are out of range for the shape, never stored as zero.
struct ProfileNorms {
  std::optional<double> ff, ff_sym;  // ||f (x)_{i,j} f||, symmetrized variant
  std::optional<double> fh, fh_sym;  // ||f (x)_{i,j} h||, symmetrized variant
};

struct ContractionProfile {
  int m = 0, n = 0, l = 0, lprime = 0, d = 0;
  std::map<std::pair<int, int>, ProfileNorms> entries;
};

// Weighted symmetrized-contraction builders. f has shape (m, n) and h must
// be shaped like conj_flip(f); callers pass h = conj_flip(f).
//   psi_r      = sum_{i+j=r, i<=m, j<=n} C(m,i)^2 C(n,j)^2 i! j! f (x~)_{i,j} h
//   theta_r    = same terms scaled by i/m (i = 0 drops; m = 0 rejected)
//   varphi_r   = sum_{i+j=r, i,j<=min(m,n)} C(m,i) C(n,i) C(m,j) C(n,j) i! j! f (x~)_{i,j} f
//   varsigma_r = same terms scaled by i/m
// Domains: psi/theta 1 <= r <= l-1; varphi/varsigma 1 <= r <= l'-1 when
// m = n and 1 <= r <= l' when m != n (the wider range is forced by the
// oracle-validated gap identity below).
KernelTensor build_psi(const KernelTensor& f, const KernelTensor& h, int r);
KernelTensor build_theta(const KernelTensor& f, const KernelTensor& h, int r);
KernelTensor build_varsigma(const KernelTensor& f, int r);
KernelTensor build_varphi(const KernelTensor& f, int r);

// E|F|^4 - 2 (E|F|^2)^2 - |E F^2|^2 for F = I_{m,n}(f~), computed entirely
// through the exact Wick oracle.
double gap_exact(const KernelTensor& f);

// The same gap as contraction inner products:
//   2 sum_{r=1}^{l-1} ((l-r)!)^2 <theta_r, psi_r>
//   + sum_{r=1}^{R} (2m-r)! (2n-r)! <varsigma_r, varphi_r>
// with R = l'-1 when m = n and R = l' when m != n. Kernels with m = 0 are
// routed through conj_flip (the gap is conjugation invariant).
double gap_contractions(const KernelTensor& f);

// Two expansions of the gap as weighted sums of squared contraction norms.
// Expansion a:
//   sum over 0 <= a,b <= min(m,n), a+b > 0, excluding a = b = m when m = n:
//     N(a) N(b) ||f (x)_{a,b} f||^2,  N(x) = C(m,x)^2 C(n,x)^2 x!^2 (m-x)! (n-x)!
//   + sum_{r=1}^{l-1} ((l-r)!)^2 ||psi_r||^2.
// Expansion b:
//   sum over 0 <= a <= m, 0 <= b <= n, (a,b) not in {(0,0), (m,n)}:
//     M(a) M'(b) ||f (x)_{a,b} h||^2,
//     M(a) = C(m,a)^4 a!^2 ((m-a)!)^2, M'(b) = C(n,b)^4 b!^2 ((n-b)!)^2
//   + sum_{r=1}^{R} (2m-r)! (2n-r)! ||varphi_r||^2, same R as above.
// Both weights and ranges are corrected relative to their commonly printed
// forms; the exact oracle forces them (see tests for the worked cases).
double lemma31_expansion_a(const KernelTensor& f);
double lemma31_expansion_b(const KernelTensor& f);

// All four norm families over 0 < i+j <= l-1; requires m+n >= 2.
ContractionProfile contraction_profile(const KernelTensor& f);

}  // namespace chaosforge
