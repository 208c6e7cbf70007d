#include "chaosforge/kernel_tensor.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace chaosforge {

namespace {

constexpr std::int64_t kMaxEntries = 100'000'000;
constexpr int kMaxSlots = 24;

}  // namespace

std::int64_t tensor_size(int d, int m, int n) {
  if (d < 1) throw ShapeError("kernel dimension must be >= 1");
  if (m < 0 || n < 0) throw ShapeError("slot counts must be >= 0");
  if (m + n > kMaxSlots) throw ShapeError("too many slots");
  std::int64_t s = 1;
  for (int k = 0; k < m + n; ++k) {
    s *= d;
    if (s > kMaxEntries) throw ShapeError("kernel too large");
  }
  return s;
}

KernelTensor::KernelTensor(int d, int m, int n)
    : d_(d), m_(m), n_(n), entries_(CVec::Zero(tensor_size(d, m, n))) {}

KernelTensor::KernelTensor(int d, int m, int n, CVec entries)
    : d_(d), m_(m), n_(n), entries_(std::move(entries)) {
  if (entries_.size() != tensor_size(d, m, n))
    throw ShapeError("entry count does not match d^(m+n)");
}

KernelTensor make_kernel(int d, int m, int n, const std::vector<Complex>& entries) {
  const std::int64_t want = tensor_size(d, m, n);
  if (static_cast<std::int64_t>(entries.size()) != want)
    throw ShapeError("entry count does not match d^(m+n)");
  CVec v(want);
  for (std::int64_t x = 0; x < want; ++x) {
    const Complex c = entries[static_cast<std::size_t>(x)];
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag()))
      throw ValidationError("kernel entries must be finite");
    v[x] = c;
  }
  return KernelTensor(d, m, n, std::move(v));
}

KernelTensor symmetrize(const KernelTensor& K) {
  const int d = K.d(), m = K.m(), n = K.n();
  if (d == 1 || (m <= 1 && n <= 1)) return K;
  const Eigen::Index N = K.size();

  // The symmetrization of K at a multi-index equals the mean of K over the
  // index class obtained by permuting each slot group, because every class
  // member is hit by the same number of group elements. One pass computes
  // class sums keyed by the digit-sorted canonical index, a second pass
  // reads the means back; no permutation enumeration needed.
  std::vector<Eigen::Index> canon(static_cast<std::size_t>(N));
  CVec sums = CVec::Zero(N);
  std::vector<std::int32_t> counts(static_cast<std::size_t>(N), 0);
  std::array<int, kMaxSlots> digit{};
  for (Eigen::Index x = 0; x < N; ++x) {
    Eigen::Index rem = x;
    for (int s = m + n - 1; s >= 0; --s) {
      digit[s] = static_cast<int>(rem % d);
      rem /= d;
    }
    std::sort(digit.begin(), digit.begin() + m);
    std::sort(digit.begin() + m, digit.begin() + m + n);
    Eigen::Index c = 0;
    for (int s = 0; s < m + n; ++s) c = c * d + digit[s];
    canon[static_cast<std::size_t>(x)] = c;
    sums[c] += K[x];
    counts[static_cast<std::size_t>(c)] += 1;
  }
  CVec out(N);
  for (Eigen::Index x = 0; x < N; ++x) {
    const Eigen::Index c = canon[static_cast<std::size_t>(x)];
    out[x] = sums[c] / static_cast<double>(counts[static_cast<std::size_t>(c)]);
  }
  return KernelTensor(d, m, n, std::move(out));
}

KernelTensor conj_flip(const KernelTensor& K) {
  const int d = K.d(), m = K.m(), n = K.n();
  const std::int64_t dm = tensor_size(d, m, 0);
  const std::int64_t dn = tensor_size(d, n, 0);
  KernelTensor H(d, n, m);
  for (std::int64_t b = 0; b < dn; ++b)
    for (std::int64_t a = 0; a < dm; ++a)
      H[b * dm + a] = std::conj(K[a * dn + b]);
  return H;
}

KernelTensor contract(const KernelTensor& A, const KernelTensor& B, int i, int j) {
  if (A.d() != B.d()) throw ShapeError("contract: dimension mismatch");
  if (i < 0 || i > std::min(A.m(), B.n()) || j < 0 || j > std::min(A.n(), B.m()))
    throw ArityError("contract: contraction counts out of range");
  const int d = A.d();
  const int M = A.m() + B.m() - i - j;
  const int N = A.n() + B.n() - i - j;
  KernelTensor out(d, M, N);

  const std::int64_t nUA = tensor_size(d, A.m() - i, 0);
  const std::int64_t nUB = tensor_size(d, B.m() - j, 0);
  const std::int64_t nBA = tensor_size(d, A.n() - j, 0);
  const std::int64_t nBB = tensor_size(d, B.n() - i, 0);
  const std::int64_t nI = tensor_size(d, i, 0);
  const std::int64_t nJ = tensor_size(d, j, 0);
  const std::int64_t dAn = tensor_size(d, A.n(), 0);
  const std::int64_t dBn = tensor_size(d, B.n(), 0);

  // Flat layout of the result: A's kept unbarred slots, then B's, then A's
  // kept barred slots, then B's, preserving each source's slot order.
  std::int64_t o = 0;
  for (std::int64_t uA = 0; uA < nUA; ++uA)
    for (std::int64_t uB = 0; uB < nUB; ++uB)
      for (std::int64_t bA = 0; bA < nBA; ++bA)
        for (std::int64_t bB = 0; bB < nBB; ++bB, ++o) {
          Complex acc = 0.0;
          for (std::int64_t s = 0; s < nI; ++s)
            for (std::int64_t t = 0; t < nJ; ++t)
              acc += A[(uA * nI + s) * dAn + (bA * nJ + t)] *
                     B[(uB * nJ + t) * dBn + (bB * nI + s)];
          out[o] = acc;
        }
  return out;
}

KernelTensor sym_contract(const KernelTensor& A, const KernelTensor& B, int i, int j) {
  return symmetrize(contract(A, B, i, j));
}

Complex inner(const KernelTensor& A, const KernelTensor& B) {
  if (!A.same_shape(B)) throw ShapeError("inner: shape mismatch");
  // Eigen's dot conjugates its first operand; ours conjugates the second.
  return B.entries().dot(A.entries());
}

double norm_squared(const KernelTensor& A) { return A.entries().squaredNorm(); }

double norm(const KernelTensor& A) { return A.entries().norm(); }

KernelTensor operator+(const KernelTensor& A, const KernelTensor& B) {
  if (!A.same_shape(B)) throw ShapeError("kernel sum: shape mismatch");
  return KernelTensor(A.d(), A.m(), A.n(), A.entries() + B.entries());
}

KernelTensor operator-(const KernelTensor& A, const KernelTensor& B) {
  if (!A.same_shape(B)) throw ShapeError("kernel difference: shape mismatch");
  return KernelTensor(A.d(), A.m(), A.n(), A.entries() - B.entries());
}

KernelTensor operator*(Complex c, const KernelTensor& A) {
  return KernelTensor(A.d(), A.m(), A.n(), c * A.entries());
}

}  // namespace chaosforge
