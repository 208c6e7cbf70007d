#pragma once

#include <Eigen/Core>
#include <complex>
#include <cstdint>
#include <vector>

#include "chaosforge/errors.hpp"

namespace chaosforge {

using Complex = std::complex<double>;
using CVec = Eigen::VectorXcd;

// Dense coefficient tensor f over H = C^d with m unbarred and n barred
// slots. Entries are stored flat in row-major multi-index order: the m
// unbarred indices first, then the n barred ones, last index fastest.
class KernelTensor {
 public:
  KernelTensor() : d_(1), m_(0), n_(0), entries_(CVec::Zero(1)) {}
  KernelTensor(int d, int m, int n);
  KernelTensor(int d, int m, int n, CVec entries);

  int d() const { return d_; }
  int m() const { return m_; }
  int n() const { return n_; }
  int l() const { return m_ + n_; }
  int lprime() const { return 2 * (m_ < n_ ? m_ : n_); }
  Eigen::Index size() const { return entries_.size(); }

  const CVec& entries() const { return entries_; }
  CVec& entries() { return entries_; }

  Complex operator[](Eigen::Index flat) const { return entries_[flat]; }
  Complex& operator[](Eigen::Index flat) { return entries_[flat]; }

  bool same_shape(const KernelTensor& o) const {
    return d_ == o.d_ && m_ == o.m_ && n_ == o.n_;
  }

 private:
  int d_, m_, n_;
  CVec entries_;
};

// d^(m+n) with a size guard; validates d >= 1, m >= 0, n >= 0.
std::int64_t tensor_size(int d, int m, int n);

// Builds a tensor from a flat entry list; rejects wrong lengths and
// non-finite values. No symmetrization is applied.
KernelTensor make_kernel(int d, int m, int n, const std::vector<Complex>& entries);

// Average over all permutations acting separately on each slot group.
KernelTensor symmetrize(const KernelTensor& K);

// H of shape (n, m) with H[beta; alpha] = conj(K[alpha; beta]); the kernel
// of the conjugated integral.
KernelTensor conj_flip(const KernelTensor& K);

// Plain Einstein contraction: pairs the last i unbarred slots of A with the
// last i barred slots of B, and the last j barred slots of A with the last
// j unbarred slots of B. No conjugation inside; conjugation enters only
// through conj_flip'ed arguments.
KernelTensor contract(const KernelTensor& A, const KernelTensor& B, int i, int j);

// symmetrize(contract(A, B, i, j)).
KernelTensor sym_contract(const KernelTensor& A, const KernelTensor& B, int i, int j);

// Frobenius pairing, conjugate-linear in the second argument.
Complex inner(const KernelTensor& A, const KernelTensor& B);
double norm(const KernelTensor& A);
double norm_squared(const KernelTensor& A);

KernelTensor operator+(const KernelTensor& A, const KernelTensor& B);
KernelTensor operator-(const KernelTensor& A, const KernelTensor& B);
KernelTensor operator*(Complex c, const KernelTensor& A);

}  // namespace chaosforge
