#include "chaosforge/verify.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "chaosforge/combinatorics.hpp"
#include "chaosforge/hermite.hpp"
#include "chaosforge/malliavin.hpp"
#include "chaosforge/moments.hpp"
#include "chaosforge/parallel.hpp"

namespace chaosforge {

namespace {

constexpr std::pair<int, int> kCorpusGrades[] = {{1, 1}, {2, 0}, {0, 2},
                                                 {2, 1}, {1, 2}, {2, 2}};
constexpr int kCorpusDims[] = {1, 2, 3};

// Worst-case tracker: keeps the (lhs, rhs) pair with the largest
// abs_err / max(1, |lhs|) seen so far.
struct Worst {
  double lhs = 0.0, rhs = 0.0, rel = -1.0;
  void update(double a, double b) {
    const double r = std::abs(a - b) / std::max(1.0, std::abs(a));
    if (r > rel) {
      rel = r;
      lhs = a;
      rhs = b;
    }
  }
  void update(Complex a, Complex b) {
    const double r = std::abs(a - b) / std::max(1.0, std::abs(a));
    if (r > rel) {
      rel = r;
      lhs = std::abs(a);
      rhs = std::abs(b);
    }
  }
};

// Evaluation points inside |z| <= 2. Most coordinates are exactly
// representable in binary, which keeps the high-degree checks measuring
// algorithmic error instead of input rounding noise.
const std::vector<Complex>& z_grid() {
  static const std::vector<Complex> g = {{0.0, 0.0},   {2.0, 0.0},  {0.0, -2.0},
                                         {1.0, 1.0},   {1.5, -1.25}, {0.5, -1.75},
                                         {-0.75, 0.5}, {0.6, -1.1}, {-0.9, 0.2}};
  return g;
}

// Accumulated in extended precision so the cross-check against the double
// recursion isolates the recursion's own rounding.
Complex closed_form_eval(int m, int n, Complex z, double rho) {
  using Lx = std::complex<long double>;
  const auto coeffs = hermite_coeffs(m, n);
  const Lx lz(z.real(), z.imag());
  const Lx lzb(z.real(), -z.imag());
  Lx total = 0.0L;
  for (int k = 0; k < static_cast<int>(coeffs.size()); ++k) {
    Lx term = static_cast<long double>(coeffs[static_cast<std::size_t>(k)]);
    for (int p = 0; p < k; ++p) term *= static_cast<long double>(rho);
    for (int p = 0; p < m - k; ++p) term *= lz;
    for (int p = 0; p < n - k; ++p) term *= lzb;
    total += term;
  }
  return Complex(static_cast<double>(total.real()), static_cast<double>(total.imag()));
}

// Raising n first, then m: the reversed order of hermite_eval.
Complex eval_n_first(int m, int n, Complex z, double rho) {
  const Complex zb = std::conj(z);
  std::vector<Complex> col(static_cast<std::size_t>(n) + 1);
  col[0] = 1.0;
  for (int b = 1; b <= n; ++b) col[b] = zb * col[b - 1];
  std::vector<Complex> next(col.size());
  for (int a = 1; a <= m; ++a) {
    next[0] = z * col[0];
    for (int b = 1; b <= n; ++b)
      next[b] = z * col[b] - static_cast<double>(b) * rho * col[b - 1];
    col.swap(next);
  }
  return col[static_cast<std::size_t>(n)];
}

// J_{m,n}(z_1, 1) as a d = 1 monomial expansion.
WickPolynomial hermite_poly_1d(int m, int n) {
  WickPolynomial P(1);
  const auto coeffs = hermite_coeffs(m, n);
  for (int k = 0; k < static_cast<int>(coeffs.size()); ++k) {
    WickKey key;
    wick_set(key, 0, false, m - k);
    wick_set(key, 0, true, n - k);
    P.add_term(key, static_cast<double>(coeffs[static_cast<std::size_t>(k)]));
  }
  return P;
}

std::vector<VerificationReport> suite_hermite(std::uint64_t seed) {
  std::vector<VerificationReport> out;

  for (const double rho : {0.5, 1.0, 2.0}) {
    Worst worst;
    for (int m = 0; m <= 10; ++m)
      for (int n = 0; n <= 10; ++n)
        for (const Complex z : z_grid())
          worst.update(hermite_eval(m, n, z, rho), closed_form_eval(m, n, z, rho));
    out.push_back(make_report("hermite/closed_vs_recursion/rho=" + std::to_string(rho), 10,
                              10, 1, seed, worst.lhs, worst.rhs, 1e-12));
  }

  {
    Worst worst;
    for (int m = 0; m <= 10; ++m)
      for (int n = 0; n <= 10; ++n)
        for (const Complex z : z_grid())
          for (const double rho : {0.5, 1.0, 2.0})
            worst.update(hermite_eval(m, n, z, rho), eval_n_first(m, n, z, rho));
    out.push_back(make_report("hermite/recursion_order", 10, 10, 1, seed, worst.lhs,
                              worst.rhs, 1e-12));
  }

  {
    const double h = 1e-5;
    const Complex iu(0.0, 1.0);
    Worst wz, wzb, wrho;
    for (int m = 0; m <= 5; ++m) {
      for (int n = 0; n <= 5; ++n) {
        for (const Complex z : z_grid()) {
          for (const double rho : {0.5, 1.0, 2.0}) {
            const Complex dx =
                (hermite_eval(m, n, z + h, rho) - hermite_eval(m, n, z - h, rho)) / (2 * h);
            const Complex dy = (hermite_eval(m, n, z + iu * h, rho) -
                                hermite_eval(m, n, z - iu * h, rho)) /
                               (2 * h);
            wz.update(hermite_dz(m, n, z, rho), (dx - iu * dy) / 2.0);
            wzb.update(hermite_dzbar(m, n, z, rho), (dx + iu * dy) / 2.0);
            const Complex dr =
                (hermite_eval(m, n, z, rho + h) - hermite_eval(m, n, z, rho - h)) / (2 * h);
            wrho.update(hermite_drho(m, n, z, rho), dr);
          }
        }
      }
    }
    out.push_back(
        make_report("hermite/dz_vs_fd", 5, 5, 1, seed, wz.lhs, wz.rhs, 1e-6));
    out.push_back(
        make_report("hermite/dzbar_vs_fd", 5, 5, 1, seed, wzb.lhs, wzb.rhs, 1e-6));
    out.push_back(
        make_report("hermite/drho_vs_fd", 5, 5, 1, seed, wrho.lhs, wrho.rhs, 1e-6));
  }

  {
    // Exact orthogonality under the Wick oracle at rho = 1.
    Worst worst;
    worst.rel = 0.0;
    for (int m = 0; m <= 3; ++m)
      for (int n = 0; n <= 3; ++n)
        for (int p = 0; p <= 3; ++p)
          for (int q = 0; q <= 3; ++q) {
            const WickPolynomial prod =
                wick_mul(hermite_poly_1d(m, n), wick_conj(hermite_poly_1d(p, q)));
            const Complex got = wick_expectation(prod);
            const double want = (m == p && n == q) ? fact(m) * fact(n) : 0.0;
            worst.update(Complex(want, 0.0), got);
          }
    out.push_back(make_report("hermite/orthogonality_exact", 3, 3, 1, seed, worst.lhs,
                              worst.rhs, 0.0));
  }

  return out;
}

std::vector<VerificationReport> suite_chaos(std::uint64_t seed) {
  std::vector<VerificationReport> out;

  {
    // Empirical moments of the Gaussian source, d = 1, 1e5 draws.
    ChaosRng rng(derive_seed(seed, 901));
    const int N = 100000;
    Complex sum = 0.0, sum_sq = 0.0;
    double sum_abs2 = 0.0;
    for (int k = 0; k < N; ++k) {
      const Complex z = rng.complex_normal();
      sum += z;
      sum_sq += z * z;
      sum_abs2 += std::norm(z);
    }
    const double rootn = std::sqrt(static_cast<double>(N));
    const auto se_report = [&](const char* name, double exact, double est, double se) {
      VerificationReport r = make_report(name, 0, 0, 1, seed, exact, est, 1.0);
      r.pass = r.abs_err <= 5.0 * se;
      return r;
    };
    // SE of the mean of a unit-variance statistic is 1/sqrt(N); good enough
    // for a 5-sigma acceptance band.
    out.push_back(se_report("chaos/gaussian_mean", 0.0, std::abs(sum) / N, 1.0 / rootn));
    out.push_back(se_report("chaos/gaussian_abs2", 1.0, sum_abs2 / N, 1.0 / rootn));
    out.push_back(se_report("chaos/gaussian_square", 0.0, std::abs(sum_sq) / N, 1.5 / rootn));
  }

  {
    // evaluate on the rank-one kernel: |Z|^2 - 1.
    ChaosRng rng(derive_seed(seed, 902));
    const ChaosElement F = make_integral(make_kernel(1, 1, 1, {1.0}));
    Worst worst;
    for (int k = 0; k < 25; ++k) {
      const GaussianSample s = sample_gaussian(1, rng);
      worst.update(std::norm(s.values[0]) - 1.0, evaluate(F, s).real());
    }
    out.push_back(
        make_report("chaos/evaluate_rank_one", 1, 1, 1, seed, worst.lhs, worst.rhs, 1e-12));
  }

  {
    // evaluate on e1 (x) conj(e2): Z_1 conj(Z_2).
    ChaosRng rng(derive_seed(seed, 903));
    KernelTensor K(2, 1, 1);
    K[1] = 1.0;  // alpha = 1 -> coordinate 0, beta -> coordinate 1
    const ChaosElement F = make_integral(K);
    Worst worst;
    for (int k = 0; k < 25; ++k) {
      const GaussianSample s = sample_gaussian(2, rng);
      worst.update(s.values[0] * std::conj(s.values[1]), evaluate(F, s));
    }
    out.push_back(
        make_report("chaos/evaluate_cross", 1, 1, 2, seed, worst.lhs, worst.rhs, 1e-12));
  }

  {
    // Pointwise product consistency across grade pairs and dimensions.
    const std::pair<int, int> grades[] = {{1, 0}, {1, 1}, {2, 0}, {2, 1}};
    for (const int d : {1, 2, 3}) {
      Worst worst;
      std::uint64_t idx = 0;
      for (const auto [m, n] : grades) {
        for (const auto [p, q] : grades) {
          ChaosRng rng(derive_seed(seed, 910 + 16 * d + idx++));
          const ChaosElement F = make_integral(random_kernel(d, m, n, rng));
          const ChaosElement G = make_integral(random_kernel(d, p, q, rng));
          const ChaosElement FG = multiply(F, G);
          for (int k = 0; k < 100; ++k) {
            const GaussianSample s = sample_gaussian(d, rng);
            worst.update(evaluate(F, s) * evaluate(G, s), evaluate(FG, s));
          }
        }
      }
      out.push_back(make_report("chaos/product_pointwise/d=" + std::to_string(d), 2, 1, d,
                                seed, worst.lhs, worst.rhs, 1e-9));
    }
  }

  {
    // conjugate_elem agrees with pointwise conjugation.
    ChaosRng rng(derive_seed(seed, 904));
    ChaosElement F(2, Complex(0.3, -0.8));
    F.add_kernel(random_kernel(2, 2, 1, rng));
    F.add_kernel(random_kernel(2, 1, 1, rng));
    const ChaosElement Fc = conjugate_elem(F);
    Worst worst;
    for (int k = 0; k < 25; ++k) {
      const GaussianSample s = sample_gaussian(2, rng);
      worst.update(std::conj(evaluate(F, s)), evaluate(Fc, s));
    }
    out.push_back(
        make_report("chaos/conjugate_pointwise", 2, 1, 2, seed, worst.lhs, worst.rhs, 1e-12));
  }

  {
    // Monomial expansion evaluates like the element itself.
    Worst worst;
    for (const int d : {1, 2, 3}) {
      ChaosRng rng(derive_seed(seed, 905 + static_cast<std::uint64_t>(d)));
      ChaosElement F(d, Complex(-0.4, 0.2));
      F.add_kernel(random_kernel(d, 2, 2, rng));
      F.add_kernel(random_kernel(d, 1, 0, rng));
      const WickPolynomial P = to_polynomial(F);
      for (int k = 0; k < 25; ++k) {
        const GaussianSample s = sample_gaussian(d, rng);
        worst.update(evaluate(F, s), wick_eval(P, s));
      }
    }
    out.push_back(make_report("chaos/to_polynomial_pointwise", 2, 2, 3, seed, worst.lhs,
                              worst.rhs, 1e-10));
  }

  {
    // Isometry: E|I_{m,n}(f)|^2 = m! n! ||f~||^2.
    Worst worst;
    std::uint64_t idx = 0;
    for (const auto [m, n] : kCorpusGrades) {
      for (const int d : kCorpusDims) {
        ChaosRng rng(derive_seed(seed, 920 + idx++));
        const KernelTensor f = random_kernel(d, m, n, rng);
        const ChaosElement F = make_integral(f);
        const Complex got = exact_moment({{F, false}, {F, true}});
        worst.update(Complex(fact(m) * fact(n) * norm_squared(f), 0.0), got);
      }
    }
    out.push_back(make_report("chaos/isometry", 2, 2, 3, seed, worst.lhs, worst.rhs, 1e-10));
  }

  {
    // l2_inner cross-checked against the oracle on multi-grade elements.
    Worst worst;
    for (const int d : {1, 2, 3}) {
      ChaosRng rng(derive_seed(seed, 930 + static_cast<std::uint64_t>(d)));
      ChaosElement F(d, Complex(0.7, 0.1));
      F.add_kernel(random_kernel(d, 1, 1, rng));
      F.add_kernel(random_kernel(d, 2, 1, rng));
      ChaosElement G(d, Complex(-0.2, 0.5));
      G.add_kernel(random_kernel(d, 1, 1, rng));
      G.add_kernel(random_kernel(d, 2, 1, rng));
      G.add_kernel(random_kernel(d, 0, 2, rng));
      worst.update(exact_moment({{F, false}, {G, true}}), l2_inner(F, G));
    }
    out.push_back(
        make_report("chaos/l2_vs_oracle", 2, 1, 3, seed, worst.lhs, worst.rhs, 1e-10));
  }

  {
    // Dual-oracle fourth moment on a small set (the acceptance gate runs
    // the full corpus).
    Worst worst;
    std::uint64_t idx = 0;
    for (const auto [m, n] : {std::pair{1, 1}, {2, 1}, {2, 2}}) {
      for (const int d : {1, 2}) {
        ChaosRng rng(derive_seed(seed, 940 + idx++));
        const ChaosElement F = make_integral(random_kernel(d, m, n, rng));
        const Complex a = exact_moment({{F, false}, {F, true}, {F, false}, {F, true}});
        const ChaosElement FF = multiply(F, conjugate_elem(F));
        const Complex b = l2_inner(FF, FF);
        worst.update(a, b);
      }
    }
    out.push_back(
        make_report("chaos/dual_fourth_moment", 2, 2, 2, seed, worst.lhs, worst.rhs, 1e-9));
  }

  {
    // Pure integrals are centered. The oracle's monomial expectations cancel
    // across merged terms, so the zero holds to roundoff, not bitwise.
    Worst worst;
    worst.rel = 0.0;
    std::uint64_t idx = 0;
    for (const auto [m, n] : kCorpusGrades) {
      for (const int d : kCorpusDims) {
        ChaosRng rng(derive_seed(seed, 950 + idx++));
        const ChaosElement F = make_integral(random_kernel(d, m, n, rng));
        worst.update(Complex(0.0, 0.0), exact_moment({{F, false}}));
      }
    }
    out.push_back(
        make_report("chaos/centering", 2, 2, 3, seed, worst.lhs, worst.rhs, 1e-13));
  }

  return out;
}

std::vector<VerificationReport> suite_malliavin(std::uint64_t seed) {
  std::vector<VerificationReport> out;
  const std::pair<int, int> grades[] = {{1, 1}, {2, 0}, {0, 2}, {2, 1}, {1, 2}, {2, 2}};

  {
    // D and Dbar against Wirtinger finite differences (absolute 1e-6).
    Worst wd, wdb;
    std::uint64_t idx = 0;
    for (const auto [m, n] : grades) {
      for (const int d : kCorpusDims) {
        ChaosRng rng(derive_seed(seed, 100 + idx++));
        const ChaosElement F = make_integral(random_kernel(d, m, n, rng));
        const VectorChaos DF = mall_D(F);
        const VectorChaos DbF = mall_Dbar(F);
        for (int rep = 0; rep < 50; ++rep) {
          const GaussianSample s = sample_gaussian(d, rng);
          for (int k = 0; k < d; ++k) {
            const auto [dz, dzb] = wirtinger_fd(F, s, k);
            const Complex got_d = evaluate(DF.components[static_cast<std::size_t>(k)], s);
            const Complex got_db = evaluate(DbF.components[static_cast<std::size_t>(k)], s);
            // Track the absolute error directly: lhs is the FD value.
            if (std::abs(dz - got_d) > wd.rel) {
              wd.rel = std::abs(dz - got_d);
              wd.lhs = std::abs(dz);
              wd.rhs = std::abs(got_d);
            }
            if (std::abs(dzb - got_db) > wdb.rel) {
              wdb.rel = std::abs(dzb - got_db);
              wdb.lhs = std::abs(dzb);
              wdb.rhs = std::abs(got_db);
            }
          }
        }
      }
    }
    VerificationReport r1 = make_report("malliavin/D_vs_fd", 2, 2, 3, seed, wd.lhs, wd.rhs, 1.0);
    r1.abs_err = wd.rel;
    r1.rel_err = wd.rel / std::max(1.0, std::abs(wd.lhs));
    r1.pass = wd.rel <= 1e-6;
    out.push_back(r1);
    VerificationReport r2 =
        make_report("malliavin/Dbar_vs_fd", 2, 2, 3, seed, wdb.lhs, wdb.rhs, 1.0);
    r2.abs_err = wdb.rel;
    r2.rel_err = wdb.rel / std::max(1.0, std::abs(wdb.lhs));
    r2.pass = wdb.rel <= 1e-6;
    out.push_back(r2);
  }

  {
    // conj(DF) = Dbar(conj F), componentwise in L2.
    Worst worst;
    worst.rel = 0.0;
    std::uint64_t idx = 0;
    for (const auto [m, n] : grades) {
      for (const int d : {1, 2, 3}) {
        ChaosRng rng(derive_seed(seed, 130 + idx++));
        const ChaosElement F = make_integral(random_kernel(d, m, n, rng));
        const VectorChaos lhs = mall_Dbar(conjugate_elem(F));
        const VectorChaos rhs = mall_D(F);
        double dist2 = 0.0;
        for (int k = 0; k < d; ++k) {
          const ChaosElement diff =
              elem_add(lhs.components[static_cast<std::size_t>(k)],
                       elem_scale(-1.0, conjugate_elem(rhs.components[static_cast<std::size_t>(k)])));
          dist2 += std::abs(l2_inner(diff, diff));
        }
        worst.update(Complex(0.0, 0.0), Complex(std::sqrt(dist2), 0.0));
      }
    }
    out.push_back(make_report("malliavin/conjugation_identity", 2, 2, 3, seed, worst.lhs,
                              worst.rhs, 1e-10));
  }

  {
    // Spectral eigenrelations, bitwise on stored kernels.
    bool exact = true;
    std::uint64_t idx = 0;
    for (const auto [m, n] : grades) {
      for (const int d : kCorpusDims) {
        ChaosRng rng(derive_seed(seed, 160 + idx++));
        const KernelTensor f = random_kernel(d, m, n, rng);
        const ChaosElement F = make_integral(f);
        const KernelTensor fs = F.kernel_at(m, n);
        const KernelTensor got_l = ou_L(F).kernel_at(m, n);
        const KernelTensor got_lb = ou_Lbar(F).kernel_at(m, n);
        for (Eigen::Index x = 0; x < fs.size(); ++x) {
          if (got_l[x] != static_cast<double>(m) * fs[x]) exact = false;
          if (got_lb[x] != static_cast<double>(n) * fs[x]) exact = false;
        }
        if (ou_L(F).constant() != Complex(0.0) || ou_Lbar(F).constant() != Complex(0.0))
          exact = false;
      }
    }
    VerificationReport r =
        make_report("malliavin/ou_eigenrelation_exact", 2, 2, 3, seed, 1.0, exact ? 1.0 : 0.0, 0.0);
    out.push_back(r);
  }

  {
    // Integration by parts: E[Z(e_k) conj(F)] = E[conj((DF)_k)].
    Worst worst;
    std::uint64_t idx = 0;
    for (const auto [m, n] : {std::pair{1, 1}, {2, 1}, {2, 2}, {1, 2}}) {
      for (const int d : kCorpusDims) {
        ChaosRng rng(derive_seed(seed, 190 + idx++));
        ChaosElement F(d);
        F.add_kernel(random_kernel(d, m, n, rng));
        F.add_kernel(random_kernel(d, 1, 0, rng));
        const VectorChaos DF = mall_D(F);
        for (int k = 0; k < d; ++k) {
          KernelTensor ek(d, 1, 0);
          ek[k] = 1.0;
          const ChaosElement Zk = make_integral(ek);
          const Complex lhs = exact_moment({{Zk, false}, {F, true}});
          const Complex rhs =
              std::conj(exact_moment({{DF.components[static_cast<std::size_t>(k)], false}}));
          worst.update(lhs, rhs);
        }
      }
    }
    out.push_back(make_report("malliavin/integration_by_parts", 2, 2, 3, seed, worst.lhs,
                              worst.rhs, 1e-10));
  }

  {
    // Duality for L = delta D: E[L(G) conj(F)] = E[<DG, DF>_H].
    Worst worst;
    std::uint64_t idx = 0;
    for (const int d : kCorpusDims) {
      ChaosRng rng(derive_seed(seed, 220 + idx++));
      ChaosElement F(d, Complex(0.4, -0.1));
      F.add_kernel(random_kernel(d, 1, 1, rng));
      F.add_kernel(random_kernel(d, 2, 2, rng));
      ChaosElement G(d, Complex(-0.3, 0.6));
      G.add_kernel(random_kernel(d, 1, 1, rng));
      G.add_kernel(random_kernel(d, 2, 2, rng));
      const Complex lhs = exact_moment({{ou_L(G), false}, {F, true}});
      const Complex rhs = exact_moment({{h_inner(mall_D(G), mall_D(F)), false}});
      worst.update(lhs, rhs);
    }
    out.push_back(
        make_report("malliavin/ou_duality", 2, 2, 3, seed, worst.lhs, worst.rhs, 1e-10));
  }

  {
    // Product rule: D(F^2 conj(F)) = 2 |F|^2 DF + F^2 D(conj F), pointwise.
    Worst worst;
    const std::pair<int, int> pr_grades[] = {{1, 1}, {2, 1}, {2, 2}};
    std::uint64_t idx = 0;
    for (const auto [m, n] : pr_grades) {
      for (const int d : {1, 2}) {
        ChaosRng rng(derive_seed(seed, 250 + idx++));
        const ChaosElement F = make_integral(random_kernel(d, m, n, rng));
        const ChaosElement Fc = conjugate_elem(F);
        const ChaosElement FF = multiply(F, F);
        const ChaosElement absF2 = multiply(F, Fc);
        const VectorChaos lhs = mall_D(multiply(FF, Fc));
        const VectorChaos DF = mall_D(F);
        const VectorChaos DFc = mall_D(Fc);
        for (int rep = 0; rep < 50; ++rep) {
          const GaussianSample s = sample_gaussian(d, rng);
          for (int k = 0; k < d; ++k) {
            const Complex a =
                evaluate(lhs.components[static_cast<std::size_t>(k)], s);
            const Complex b =
                2.0 * evaluate(absF2, s) * evaluate(DF.components[static_cast<std::size_t>(k)], s) +
                evaluate(FF, s) * evaluate(DFc.components[static_cast<std::size_t>(k)], s);
            worst.update(a, b);
          }
        }
      }
    }
    out.push_back(
        make_report("malliavin/product_rule", 2, 2, 2, seed, worst.lhs, worst.rhs, 1e-8));
  }

  {
    // Step expansions of the fourth-moment proof.
    Worst w1, w2;
    const std::pair<int, int> step_grades[] = {{1, 1}, {2, 0}, {2, 1}, {1, 2}, {2, 2}};
    std::uint64_t idx = 0;
    for (const auto [m, n] : step_grades) {
      for (const int d : kCorpusDims) {
        ChaosRng rng(derive_seed(seed, 280 + idx++));
        const KernelTensor f = random_kernel(d, m, n, rng);
        const KernelTensor h = conj_flip(f);
        const ChaosElement F = make_integral(f);
        const ChaosElement Fc = conjugate_elem(F);
        const VectorChaos DF = mall_D(F);
        const double md = static_cast<double>(m);
        const int l = m + n;

        // (1/m) E[|F|^2 ||DF||^2] = (E|F|^2)^2 + sum ((l-r)!)^2 <theta, psi>.
        const ChaosElement absF2 = multiply(F, Fc);
        const ChaosElement normDF = h_inner(DF, DF);
        const double lhs1 = l2_inner(absF2, normDF).real() / md;
        const double e2 = l2_inner(F, F).real();
        double rhs1 = e2 * e2;
        for (int r = 1; r <= l - 1; ++r)
          rhs1 += fact(l - r) * fact(l - r) *
                  inner(build_theta(f, h, r), build_psi(f, h, r)).real();
        w1.update(lhs1, rhs1);

        // (1/m) E[<DF, D(conj F)> conj(F^2)]
        //   = |E F^2|^2 + sum (2m-r)! (2n-r)! <varsigma, varphi>.
        const ChaosElement V = h_inner(DF, mall_D(Fc));
        const ChaosElement F2 = multiply(F, F);
        const double lhs2 = l2_inner(V, F2).real() / md;
        const Complex ef2 = exact_moment({{F, false}, {F, false}});
        double rhs2 = std::norm(ef2);
        const int rmax = (m == n) ? 2 * std::min(m, n) - 1 : 2 * std::min(m, n);
        for (int r = 1; r <= rmax; ++r)
          rhs2 += fact(2 * m - r) * fact(2 * n - r) *
                  inner(build_varsigma(f, r), build_varphi(f, r)).real();
        w2.update(lhs2, rhs2);
      }
    }
    out.push_back(make_report("malliavin/step1_identity", 2, 2, 3, seed, w1.lhs, w1.rhs, 1e-9));
    out.push_back(make_report("malliavin/step2_identity", 2, 2, 3, seed, w2.lhs, w2.rhs, 1e-9));
  }

  return out;
}

std::vector<VerificationReport> suite_identities(std::uint64_t seed) {
  const std::vector<CorpusCase> corpus = identity_corpus(seed);
  std::vector<VerificationReport> rows(corpus.size());
  std::vector<double> gaps(corpus.size());
  parallel_for(static_cast<std::int64_t>(corpus.size()), [&](std::int64_t i) {
    const CorpusCase& c = corpus[static_cast<std::size_t>(i)];
    const double lhs = gap_exact(c.kernel);
    const double rhs = gap_contractions(c.kernel);
    gaps[static_cast<std::size_t>(i)] = lhs;
    rows[static_cast<std::size_t>(i)] =
        make_report("identities/main/" + std::to_string(c.index), c.m, c.n, c.d, c.seed,
                    lhs, rhs, 1e-9);
  });
  std::vector<VerificationReport> out(rows.begin(), rows.end());

  {
    const double min_gap = *std::min_element(gaps.begin(), gaps.end());
    VerificationReport r =
        make_report("identities/nonnegativity", 0, 0, 0, seed, 0.0, min_gap, 1.0);
    r.pass = min_gap >= -1e-10;
    out.push_back(r);
  }

  {
    // Phase invariance of the gap and of every profile norm.
    Worst worst;
    worst.rel = 0.0;
    const Complex phase = std::polar(1.0, 0.7);
    for (std::size_t i = 0; i < 6 && i < corpus.size(); ++i) {
      const KernelTensor& f = corpus[i].kernel;
      worst.update(gap_contractions(f), gap_contractions(phase * f));
      if (f.l() >= 2) {
        const ContractionProfile a = contraction_profile(f);
        const ContractionProfile b = contraction_profile(phase * f);
        for (const auto& [ij, na] : a.entries) {
          const auto& nb = b.entries.at(ij);
          if (na.ff) worst.update(*na.ff, *nb.ff);
          if (na.fh) worst.update(*na.fh, *nb.fh);
          if (na.ff_sym) worst.update(*na.ff_sym, *nb.ff_sym);
          if (na.fh_sym) worst.update(*na.fh_sym, *nb.fh_sym);
        }
      }
    }
    out.push_back(
        make_report("identities/phase_invariance", 2, 2, 3, seed, worst.lhs, worst.rhs, 1e-10));
  }

  {
    // gap(c f) = |c|^4 gap(f).
    Worst worst;
    const Complex c(1.3, -0.4);
    const double c4 = std::norm(c) * std::norm(c);
    for (std::size_t i = 0; i < 6 && i < corpus.size(); ++i) {
      const KernelTensor& f = corpus[i].kernel;
      worst.update(c4 * gap_contractions(f), gap_contractions(c * f));
    }
    out.push_back(
        make_report("identities/scaling_law", 2, 2, 3, seed, worst.lhs, worst.rhs, 1e-10));
  }

  {
    // E[F^2] vanishes exactly whenever m != n.
    Worst worst;
    worst.rel = 0.0;
    int checked = 0;
    for (const auto& c : corpus) {
      if (c.m == c.n || checked >= 24) continue;
      ++checked;
      const ChaosElement F = make_integral(c.kernel);
      worst.update(Complex(0.0, 0.0), exact_moment({{F, false}, {F, false}}));
    }
    out.push_back(
        make_report("identities/f2_vanishes_offdiag", 2, 1, 3, seed, worst.lhs, worst.rhs, 0.0));
  }

  {
    // The gap is invariant under f <-> conj_flip(f).
    Worst worst;
    for (std::size_t i = 0; i < 12 && i < corpus.size(); ++i) {
      const KernelTensor& f = corpus[i].kernel;
      worst.update(gap_contractions(f), gap_contractions(conj_flip(f)));
    }
    out.push_back(
        make_report("identities/conj_flip_invariance", 2, 2, 3, seed, worst.lhs, worst.rhs, 1e-9));
  }

  return out;
}

std::vector<VerificationReport> suite_lemma31(std::uint64_t seed) {
  const std::vector<CorpusCase> corpus = identity_corpus(seed);
  std::vector<VerificationReport> rows(2 * corpus.size());
  parallel_for(static_cast<std::int64_t>(corpus.size()), [&](std::int64_t i) {
    const CorpusCase& c = corpus[static_cast<std::size_t>(i)];
    const double exact = gap_exact(c.kernel);
    rows[static_cast<std::size_t>(2 * i)] =
        make_report("lemma31/expansion_a/" + std::to_string(c.index), c.m, c.n, c.d,
                    c.seed, exact, lemma31_expansion_a(c.kernel), 1e-9);
    rows[static_cast<std::size_t>(2 * i + 1)] =
        make_report("lemma31/expansion_b/" + std::to_string(c.index), c.m, c.n, c.d,
                    c.seed, exact, lemma31_expansion_b(c.kernel), 1e-9);
  });
  return rows;
}

}  // namespace

std::vector<CorpusCase> identity_corpus(std::uint64_t master_seed, int count) {
  std::vector<CorpusCase> corpus;
  corpus.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    CorpusCase c;
    c.index = i;
    const auto [m, n] = kCorpusGrades[i % 6];
    c.m = m;
    c.n = n;
    c.d = kCorpusDims[(i / 6) % 3];
    c.seed = derive_seed(master_seed, static_cast<std::uint64_t>(i));
    ChaosRng rng(c.seed);
    c.kernel = random_kernel(c.d, c.m, c.n, rng);
    corpus.push_back(std::move(c));
  }
  return corpus;
}

const std::vector<std::string>& verify_suites() {
  static const std::vector<std::string> suites = {"hermite", "chaos", "malliavin",
                                                  "identities", "lemma31"};
  return suites;
}

std::vector<VerificationReport> run_verify(const std::string& suite, std::uint64_t seed) {
  if (suite == "hermite") return suite_hermite(seed);
  if (suite == "chaos") return suite_chaos(seed);
  if (suite == "malliavin") return suite_malliavin(seed);
  if (suite == "identities") return suite_identities(seed);
  if (suite == "lemma31") return suite_lemma31(seed);
  throw std::invalid_argument("unknown verify suite: " + suite);
}

}  // namespace chaosforge
