#include "chaosforge/moments.hpp"

#include <cmath>
#include <stdexcept>

#include "chaosforge/chaos.hpp"
#include "chaosforge/combinatorics.hpp"

namespace chaosforge {

namespace {

void check_flip_shape(const KernelTensor& f, const KernelTensor& h) {
  if (h.d() != f.d() || h.m() != f.n() || h.n() != f.m())
    throw ShapeError("builder: h must be shaped like conj_flip(f)");
}

// Upper summation index of the varsigma/varphi sums.
int varphi_rmax(int m, int n) {
  const int lp = 2 * std::min(m, n);
  return (m == n) ? lp - 1 : lp;
}

double real_checked(Complex v, double scale, const char* what) {
  if (std::abs(v.imag()) > 1e-10 * std::max(1.0, std::max(scale, std::abs(v.real()))))
    throw std::runtime_error(std::string(what) + ": imaginary residue out of tolerance");
  return v.real();
}

}  // namespace

KernelTensor build_psi(const KernelTensor& f, const KernelTensor& h, int r) {
  check_flip_shape(f, h);
  const int m = f.m(), n = f.n(), l = f.l();
  if (r < 1 || r > l - 1) throw std::domain_error("build_psi: r out of [1, l-1]");
  KernelTensor acc(f.d(), l - r, l - r);
  for (int i = std::max(0, r - n); i <= std::min(m, r); ++i) {
    const int j = r - i;
    const double w = binom(m, i) * binom(m, i) * binom(n, j) * binom(n, j) * fact(i) * fact(j);
    acc = acc + w * contract(f, h, i, j);
  }
  return symmetrize(acc);
}

KernelTensor build_theta(const KernelTensor& f, const KernelTensor& h, int r) {
  check_flip_shape(f, h);
  const int m = f.m(), n = f.n(), l = f.l();
  if (m == 0) throw std::domain_error("build_theta: undefined for m = 0");
  if (r < 1 || r > l - 1) throw std::domain_error("build_theta: r out of [1, l-1]");
  KernelTensor acc(f.d(), l - r, l - r);
  for (int i = std::max(1, r - n); i <= std::min(m, r); ++i) {
    const int j = r - i;
    const double w = binom(m, i) * binom(m, i) * binom(n, j) * binom(n, j) * fact(i) * fact(j) *
                     static_cast<double>(i) / static_cast<double>(m);
    acc = acc + w * contract(f, h, i, j);
  }
  return symmetrize(acc);
}

KernelTensor build_varphi(const KernelTensor& f, int r) {
  const int m = f.m(), n = f.n(), mn = std::min(m, n);
  if (r < 1 || r > varphi_rmax(m, n))
    throw std::domain_error("build_varphi: r out of range");
  KernelTensor acc(f.d(), 2 * m - r, 2 * n - r);
  for (int i = std::max(0, r - mn); i <= std::min(mn, r); ++i) {
    const int j = r - i;
    const double w = binom(m, i) * binom(n, i) * binom(m, j) * binom(n, j) * fact(i) * fact(j);
    acc = acc + w * contract(f, f, i, j);
  }
  return symmetrize(acc);
}

KernelTensor build_varsigma(const KernelTensor& f, int r) {
  const int m = f.m(), n = f.n(), mn = std::min(m, n);
  if (m == 0) throw std::domain_error("build_varsigma: undefined for m = 0");
  if (r < 1 || r > varphi_rmax(m, n))
    throw std::domain_error("build_varsigma: r out of range");
  KernelTensor acc(f.d(), 2 * m - r, 2 * n - r);
  for (int i = std::max(1, r - mn); i <= std::min(mn, r); ++i) {
    const int j = r - i;
    const double w = binom(m, i) * binom(n, i) * binom(m, j) * binom(n, j) * fact(i) * fact(j) *
                     static_cast<double>(i) / static_cast<double>(m);
    acc = acc + w * contract(f, f, i, j);
  }
  return symmetrize(acc);
}

double gap_exact(const KernelTensor& f) {
  const KernelTensor fs = symmetrize(f);
  const ChaosElement F = make_integral(fs);
  const Complex m4 = exact_moment({{F, false}, {F, true}, {F, false}, {F, true}});
  const Complex m2 = exact_moment({{F, false}, {F, true}});
  const Complex f2 = exact_moment({{F, false}, {F, false}});
  const double m4r = real_checked(m4, std::abs(m4), "gap_exact: E|F|^4");
  const double m2r = real_checked(m2, std::abs(m2), "gap_exact: E|F|^2");
  return m4r - 2.0 * m2r * m2r - std::norm(f2);
}

double gap_contractions(const KernelTensor& f) {
  const KernelTensor fs = symmetrize(f);
  const int m = fs.m(), n = fs.n();
  if (m == 0) {
    if (n == 0) return 0.0;
    return gap_contractions(conj_flip(fs));
  }
  const int l = fs.l();
  const KernelTensor h = conj_flip(fs);
  Complex s1 = 0.0;
  for (int r = 1; r <= l - 1; ++r) {
    const double w = fact(l - r) * fact(l - r);
    s1 += w * inner(build_theta(fs, h, r), build_psi(fs, h, r));
  }
  Complex s2 = 0.0;
  for (int r = 1; r <= varphi_rmax(m, n); ++r) {
    const double w = fact(2 * m - r) * fact(2 * n - r);
    s2 += w * inner(build_varsigma(fs, r), build_varphi(fs, r));
  }
  const Complex total = 2.0 * s1 + s2;
  return real_checked(total, std::abs(total), "gap_contractions");
}

double lemma31_expansion_a(const KernelTensor& f) {
  const KernelTensor fs = symmetrize(f);
  const int m = fs.m(), n = fs.n(), l = fs.l(), mn = std::min(m, n);
  const auto N = [&](int x) {
    return binom(m, x) * binom(m, x) * binom(n, x) * binom(n, x) * fact(x) * fact(x) *
           fact(m - x) * fact(n - x);
  };
  double total = 0.0;
  for (int a = 0; a <= mn; ++a) {
    for (int b = 0; b <= mn; ++b) {
      if (a + b == 0) continue;
      if (m == n && a == m && b == m) continue;
      total += N(a) * N(b) * norm_squared(contract(fs, fs, a, b));
    }
  }
  const KernelTensor h = conj_flip(fs);
  for (int r = 1; r <= l - 1; ++r)
    total += fact(l - r) * fact(l - r) * norm_squared(build_psi(fs, h, r));
  return total;
}

double lemma31_expansion_b(const KernelTensor& f) {
  const KernelTensor fs = symmetrize(f);
  const int m = fs.m(), n = fs.n();
  const auto M = [](int x, int top) {
    const double c = binom(top, x);
    return c * c * c * c * fact(x) * fact(x) * fact(top - x) * fact(top - x);
  };
  const KernelTensor h = conj_flip(fs);
  double total = 0.0;
  for (int a = 0; a <= m; ++a) {
    for (int b = 0; b <= n; ++b) {
      if (a == 0 && b == 0) continue;
      if (a == m && b == n) continue;
      total += M(a, m) * M(b, n) * norm_squared(contract(fs, h, a, b));
    }
  }
  for (int r = 1; r <= varphi_rmax(m, n); ++r)
    total += fact(2 * m - r) * fact(2 * n - r) * norm_squared(build_varphi(fs, r));
  return total;
}

ContractionProfile contraction_profile(const KernelTensor& f) {
  if (f.l() < 2) throw std::domain_error("contraction_profile: requires m+n >= 2");
  const KernelTensor fs = symmetrize(f);
  const int m = fs.m(), n = fs.n(), l = fs.l(), mn = std::min(m, n);
  const KernelTensor h = conj_flip(fs);
  ContractionProfile prof;
  prof.m = m;
  prof.n = n;
  prof.l = l;
  prof.lprime = fs.lprime();
  prof.d = fs.d();
  for (int i = 0; i <= l - 1; ++i) {
    for (int j = 0; i + j <= l - 1; ++j) {
      if (i + j == 0) continue;
      ProfileNorms norms;
      if (i <= mn && j <= mn) {
        norms.ff = norm(contract(fs, fs, i, j));
        norms.ff_sym = norm(sym_contract(fs, fs, i, j));
      }
      if (i <= m && j <= n) {
        norms.fh = norm(contract(fs, h, i, j));
        norms.fh_sym = norm(sym_contract(fs, h, i, j));
      }
      if (norms.ff || norms.fh) prof.entries.emplace(std::pair{i, j}, norms);
    }
  }
  return prof;
}

}  // namespace chaosforge
