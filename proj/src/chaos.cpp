#include "chaosforge/chaos.hpp"

#include <algorithm>
#include <array>

#include "chaosforge/combinatorics.hpp"
#include "chaosforge/hermite.hpp"

namespace chaosforge {

namespace {

constexpr int kMaxSlots = 24;

// Multiplicity counts (a_c, b_c) of each coordinate in the multi-index pair
// encoded by a flat position.
void count_digits(std::int64_t flat, int d, int m, int n, int* a, int* b) {
  std::fill(a, a + d, 0);
  std::fill(b, b + d, 0);
  std::int64_t rem = flat;
  for (int s = 0; s < n; ++s) {
    b[rem % d] += 1;
    rem /= d;
  }
  for (int s = 0; s < m; ++s) {
    a[rem % d] += 1;
    rem /= d;
  }
}

// Table J[a][b] = J_{a,b}(z, 1) for a <= mmax, b <= nmax.
std::vector<std::vector<Complex>> hermite_table(Complex z, int mmax, int nmax) {
  std::vector<std::vector<Complex>> J(static_cast<std::size_t>(mmax) + 1,
                                      std::vector<Complex>(static_cast<std::size_t>(nmax) + 1));
  const Complex zb = std::conj(z);
  J[0][0] = 1.0;
  for (int a = 1; a <= mmax; ++a) J[a][0] = z * J[a - 1][0];
  for (int b = 1; b <= nmax; ++b) {
    J[0][b] = zb * J[0][b - 1];
    for (int a = 1; a <= mmax; ++a)
      J[a][b] = zb * J[a][b - 1] - static_cast<double>(a) * J[a - 1][b - 1];
  }
  return J;
}

}  // namespace

ChaosElement::ChaosElement(int d, Complex constant) : d_(d), constant_(constant) {
  if (d < 1) throw ShapeError("chaos element dimension must be >= 1");
}

void ChaosElement::add_kernel(const KernelTensor& K, Complex weight) {
  if (K.d() != d_) throw ShapeError("add_kernel: dimension mismatch");
  if (weight == Complex(0.0)) return;
  if (K.m() == 0 && K.n() == 0) {
    add_presymmetrized(K, weight);
  } else {
    add_presymmetrized(symmetrize(K), weight);
  }
}

void ChaosElement::add_presymmetrized(const KernelTensor& K, Complex weight) {
  if (K.d() != d_) throw ShapeError("add_kernel: dimension mismatch");
  if (weight == Complex(0.0)) return;
  if (K.m() == 0 && K.n() == 0) {
    constant_ += weight * K[0];
    return;
  }
  const Grade g{K.m(), K.n()};
  auto it = grades_.find(g);
  if (it == grades_.end()) {
    grades_.emplace(g, weight * K);
  } else {
    it->second.entries() += weight * K.entries();
  }
}

KernelTensor ChaosElement::kernel_at(int m, int n) const {
  auto it = grades_.find(Grade{m, n});
  if (it != grades_.end()) return it->second;
  return KernelTensor(d_, m, n);
}

ChaosElement make_integral(const KernelTensor& f) {
  ChaosElement F(f.d());
  F.add_kernel(f);
  return F;
}

ChaosElement elem_add(const ChaosElement& F, const ChaosElement& G) {
  if (F.d() != G.d()) throw ShapeError("elem_add: dimension mismatch");
  ChaosElement R(F.d(), F.constant() + G.constant());
  for (const auto& [g, K] : F.grades()) R.add_presymmetrized(K);
  for (const auto& [g, K] : G.grades()) R.add_presymmetrized(K);
  return R;
}

ChaosElement elem_scale(Complex c, const ChaosElement& F) {
  ChaosElement R(F.d(), c * F.constant());
  for (const auto& [g, K] : F.grades()) R.add_presymmetrized(K, c);
  return R;
}

Complex evaluate(const ChaosElement& F, const GaussianSample& s) {
  if (F.d() != s.d) throw ShapeError("evaluate: dimension mismatch");
  const int d = F.d();
  int mmax = 0, nmax = 0;
  for (const auto& [g, K] : F.grades()) {
    mmax = std::max(mmax, g.first);
    nmax = std::max(nmax, g.second);
  }
  std::vector<std::vector<std::vector<Complex>>> J;
  J.reserve(static_cast<std::size_t>(d));
  for (int c = 0; c < d; ++c)
    J.push_back(hermite_table(s.values[static_cast<std::size_t>(c)], mmax, nmax));

  Complex total = F.constant();
  std::array<int, kWickMaxDim> a{}, b{};
  for (const auto& [g, K] : F.grades()) {
    const auto [m, n] = g;
    const Eigen::Index N = K.size();
    for (Eigen::Index x = 0; x < N; ++x) {
      const Complex v = K[x];
      if (v == Complex(0.0)) continue;
      count_digits(x, d, m, n, a.data(), b.data());
      Complex prod = v;
      for (int c = 0; c < d; ++c)
        if (a[c] + b[c] > 0) prod *= J[static_cast<std::size_t>(c)][a[c]][b[c]];
      total += prod;
    }
  }
  return total;
}

ChaosElement multiply(const ChaosElement& F, const ChaosElement& G) {
  if (F.d() != G.d()) throw ShapeError("multiply: dimension mismatch");
  ChaosElement R(F.d(), F.constant() * G.constant());
  for (const auto& [g, K] : G.grades()) R.add_kernel(K, F.constant());
  for (const auto& [g, K] : F.grades()) R.add_kernel(K, G.constant());
  for (const auto& [gf, f] : F.grades()) {
    const auto [m, n] = gf;
    for (const auto& [gg, g] : G.grades()) {
      const auto [p, q] = gg;
      for (int i = 0; i <= std::min(m, q); ++i) {
        for (int j = 0; j <= std::min(n, p); ++j) {
          const double w = binom(m, i) * binom(q, i) * binom(n, j) * binom(p, j) *
                           fact(i) * fact(j);
          R.add_kernel(contract(f, g, i, j), w);
        }
      }
    }
  }
  return R;
}

ChaosElement conjugate_elem(const ChaosElement& F) {
  // conj_flip of a groupwise-symmetric kernel is groupwise symmetric.
  ChaosElement R(F.d(), std::conj(F.constant()));
  for (const auto& [g, K] : F.grades()) R.add_presymmetrized(conj_flip(K));
  return R;
}

WickPolynomial to_polynomial(const ChaosElement& F) {
  WickPolynomial P(F.d());
  const int d = F.d();
  if (F.constant() != Complex(0.0)) P.add_term(WickKey{}, F.constant());

  std::array<int, kWickMaxDim> a{}, b{};
  std::vector<std::pair<WickKey, Complex>> cur, nxt;
  for (const auto& [g, K] : F.grades()) {
    const auto [m, n] = g;
    const Eigen::Index N = K.size();
    for (Eigen::Index x = 0; x < N; ++x) {
      const Complex v = K[x];
      if (v == Complex(0.0)) continue;
      count_digits(x, d, m, n, a.data(), b.data());
      // Expand prod_c J_{a_c, b_c}(z_c, 1) coordinate by coordinate.
      cur.assign(1, {WickKey{}, v});
      for (int c = 0; c < d; ++c) {
        if (a[c] + b[c] == 0) continue;
        const auto coeffs = hermite_coeffs(a[c], b[c]);
        nxt.clear();
        for (const auto& [key, cv] : cur) {
          for (int k = 0; k < static_cast<int>(coeffs.size()); ++k) {
            WickKey key2 = key;
            wick_set(key2, c, false, a[c] - k);
            wick_set(key2, c, true, b[c] - k);
            nxt.emplace_back(key2, cv * static_cast<double>(coeffs[static_cast<std::size_t>(k)]));
          }
        }
        cur.swap(nxt);
      }
      for (const auto& [key, cv] : cur) P.add_term(key, cv);
    }
  }
  return P;
}

Complex exact_expectation(const WickPolynomial& P) { return wick_expectation(P); }

Complex exact_moment(const std::vector<std::pair<ChaosElement, bool>>& factors) {
  if (factors.empty()) return 1.0;
  const int d = factors.front().first.d();
  int degree = 0;
  for (const auto& [F, conj_flag] : factors) {
    if (F.d() != d) throw ShapeError("exact_moment: dimension mismatch");
    int top = 0;
    for (const auto& [g, K] : F.grades()) top = std::max(top, g.first + g.second);
    degree += top;
  }
  if (degree > kDegreeCap)
    throw DegreeCapError("exact_moment: product exceeds the oracle degree cap");

  WickPolynomial P(d);
  P.add_term(WickKey{}, 1.0);
  for (const auto& [F, conj_flag] : factors) {
    WickPolynomial Q = to_polynomial(F);
    if (conj_flag) Q = wick_conj(Q);
    P = wick_mul(P, Q);
  }
  return wick_expectation(P);
}

Complex l2_inner(const ChaosElement& F, const ChaosElement& G) {
  if (F.d() != G.d()) throw ShapeError("l2_inner: dimension mismatch");
  Complex total = F.constant() * std::conj(G.constant());
  for (const auto& [g, K] : F.grades()) {
    const auto it = G.grades().find(g);
    if (it == G.grades().end()) continue;
    total += fact(g.first) * fact(g.second) * inner(K, it->second);
  }
  return total;
}

KernelTensor random_kernel(int d, int m, int n, ChaosRng& rng) {
  KernelTensor K(d, m, n);
  const Eigen::Index N = K.size();
  for (Eigen::Index x = 0; x < N; ++x) K[x] = rng.complex_normal();
  return symmetrize(K);
}

}  // namespace chaosforge
