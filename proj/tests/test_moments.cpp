#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>
#include <utility>

#include "chaosforge/chaos.hpp"
#include "chaosforge/families.hpp"
#include "chaosforge/moments.hpp"

using namespace chaosforge;

namespace {

double relgap(double a, double b) { return std::abs(a - b) / std::max(1.0, std::abs(a)); }

const std::pair<int, int> kGrades[] = {{1, 1}, {2, 0}, {0, 2}, {2, 1}, {1, 2}, {2, 2}};

}  // namespace

TEST_CASE("builder worked values on the rank-one kernel") {
  const KernelTensor f = make_kernel(1, 1, 1, {Complex(1.0, 0.0)});
  const KernelTensor h = conj_flip(f);

  const KernelTensor psi1 = build_psi(f, h, 1);
  CHECK(psi1.m() == 1);
  CHECK(psi1.n() == 1);
  CHECK(psi1[0] == Complex(2.0, 0.0));

  const KernelTensor theta1 = build_theta(f, h, 1);
  CHECK(theta1[0] == Complex(1.0, 0.0));

  const KernelTensor phi1 = build_varphi(f, 1);
  CHECK(phi1.m() == 1);
  CHECK(phi1.n() == 1);
  CHECK(phi1[0] == Complex(2.0, 0.0));

  const KernelTensor sigma1 = build_varsigma(f, 1);
  CHECK(sigma1[0] == Complex(1.0, 0.0));
}

TEST_CASE("builder domains and shape guards") {
  const KernelTensor f = make_kernel(1, 1, 1, {Complex(1.0, 0.0)});
  const KernelTensor h = conj_flip(f);
  CHECK_THROWS_AS(build_psi(f, h, 0), std::domain_error);
  CHECK_THROWS_AS(build_psi(f, h, 2), std::domain_error);
  CHECK_THROWS_AS(build_theta(f, h, 0), std::domain_error);
  CHECK_THROWS_AS(build_varphi(f, 0), std::domain_error);
  CHECK_THROWS_AS(build_varphi(f, 2), std::domain_error);  // m = n: r <= l'-1 = 1
  CHECK_THROWS_AS(build_varsigma(f, 0), std::domain_error);

  // h must be shaped like conj_flip(f).
  const KernelTensor wrong = make_kernel(1, 2, 0, {Complex(1.0, 0.0)});
  CHECK_THROWS_AS(build_psi(f, wrong, 1), ShapeError);

  // The mirrored builders reject m = 0.
  const KernelTensor g = make_kernel(1, 0, 2, {Complex(1.0, 0.0)});
  CHECK_THROWS_AS(build_theta(g, conj_flip(g), 1), std::domain_error);
  CHECK_THROWS_AS(build_varsigma(g, 1), std::domain_error);

  // m != n widens the mirrored range to r = l'.
  ChaosRng rng(31);
  const KernelTensor f21 = random_kernel(1, 2, 1, rng);
  CHECK_NOTHROW(build_varphi(f21, 2));
  CHECK_THROWS_AS(build_varphi(f21, 3), std::domain_error);
  const KernelTensor f22 = random_kernel(1, 2, 2, rng);
  CHECK_NOTHROW(build_varphi(f22, 3));
  CHECK_THROWS_AS(build_varphi(f22, 4), std::domain_error);
}

TEST_CASE("hand-expanded gaps: 6, 16, and 0") {
  const KernelTensor e11 = make_kernel(1, 1, 1, {Complex(1.0, 0.0)});
  CHECK(std::abs(gap_exact(e11) - 6.0) < 1e-10);
  CHECK(std::abs(gap_contractions(e11) - 6.0) < 1e-10);

  const KernelTensor e20 = make_kernel(1, 2, 0, {Complex(1.0, 0.0)});
  CHECK(std::abs(gap_exact(e20) - 16.0) < 1e-10);
  CHECK(std::abs(gap_contractions(e20) - 16.0) < 1e-10);

  // Grade (1,0) is complex-normal already: the gap vanishes.
  const KernelTensor e10 = make_kernel(1, 1, 0, {Complex(1.0, 0.0)});
  CHECK(std::abs(gap_exact(e10)) < 1e-12);
  CHECK(std::abs(gap_contractions(e10)) < 1e-12);

  // A complex phase-and-scale: gap scales by |c|^4.
  const KernelTensor scaled = Complex(0.0, 2.0) * e11;
  CHECK(std::abs(gap_exact(scaled) - 96.0) < 1e-9);
  CHECK(std::abs(gap_contractions(scaled) - 96.0) < 1e-9);
}

TEST_CASE("both norm expansions reproduce the worked gaps") {
  const KernelTensor e11 = make_kernel(1, 1, 1, {Complex(1.0, 0.0)});
  CHECK(std::abs(lemma31_expansion_a(e11) - 6.0) < 1e-10);
  CHECK(std::abs(lemma31_expansion_b(e11) - 6.0) < 1e-10);

  const KernelTensor e20 = make_kernel(1, 2, 0, {Complex(1.0, 0.0)});
  CHECK(std::abs(lemma31_expansion_a(e20) - 16.0) < 1e-10);
  CHECK(std::abs(lemma31_expansion_b(e20) - 16.0) < 1e-10);

  const KernelTensor e02 = make_kernel(1, 0, 2, {Complex(1.0, 0.0)});
  CHECK(std::abs(lemma31_expansion_a(e02) - 16.0) < 1e-10);
  CHECK(std::abs(lemma31_expansion_b(e02) - 16.0) < 1e-10);
}

TEST_CASE("oracle and contraction routes agree on a mini corpus") {
  for (const auto [m, n] : kGrades) {
    for (const int d : {1, 2}) {
      ChaosRng rng(700 + 10 * m + n + d);
      const KernelTensor f = random_kernel(d, m, n, rng);
      const double exact = gap_exact(f);
      CHECK(relgap(exact, gap_contractions(f)) < 1e-9);
      CHECK(relgap(exact, lemma31_expansion_a(f)) < 1e-9);
      CHECK(relgap(exact, lemma31_expansion_b(f)) < 1e-9);
      CHECK(exact >= -1e-10);
    }
  }
}

TEST_CASE("gap invariances") {
  ChaosRng rng(32);
  const KernelTensor f = random_kernel(2, 2, 1, rng);
  const double base = gap_contractions(f);

  const Complex phase = std::polar(1.0, 1.1);
  CHECK(relgap(base, gap_contractions(phase * f)) < 1e-10);

  const Complex c(0.8, -1.1);
  const double c4 = std::norm(c) * std::norm(c);
  CHECK(relgap(c4 * base, gap_contractions(c * f)) < 1e-10);

  CHECK(relgap(base, gap_contractions(conj_flip(f))) < 1e-9);
  CHECK(relgap(base, gap_exact(conj_flip(f))) < 1e-9);
}

TEST_CASE("second moment of F^2 vanishes exactly off the diagonal") {
  ChaosRng rng(33);
  for (const auto [m, n] : {std::pair{2, 0}, {0, 2}, {2, 1}, {1, 2}}) {
    const ChaosElement F = make_integral(random_kernel(2, m, n, rng));
    CHECK(exact_moment({{F, false}, {F, false}}) == Complex(0.0, 0.0));
  }
}

TEST_CASE("contraction profile families and absences") {
  ChaosRng rng(34);

  const KernelTensor f11 = random_kernel(2, 1, 1, rng);
  const ContractionProfile p11 = contraction_profile(f11);
  CHECK(p11.m == 1);
  CHECK(p11.l == 2);
  CHECK(p11.entries.size() == 2);
  for (const auto& [ij, norms] : p11.entries) {
    CHECK(norms.ff.has_value());
    CHECK(norms.fh.has_value());
    CHECK(norms.ff_sym.has_value());
    CHECK(norms.fh_sym.has_value());
  }

  // Grade (2,0): no ff contractions exist (min(m,n) = 0), fh only.
  const KernelTensor f20 = random_kernel(2, 2, 0, rng);
  const ContractionProfile p20 = contraction_profile(f20);
  REQUIRE(p20.entries.count({1, 0}) == 1);
  CHECK(!p20.entries.at({1, 0}).ff.has_value());
  CHECK(p20.entries.at({1, 0}).fh.has_value());
  CHECK(p20.entries.count({0, 1}) == 0);

  // Grade (2,1): (0,2) is out of range for both families.
  const KernelTensor f21 = random_kernel(2, 2, 1, rng);
  const ContractionProfile p21 = contraction_profile(f21);
  CHECK(p21.entries.count({0, 2}) == 0);
  CHECK(p21.entries.count({2, 0}) == 1);
  CHECK(!p21.entries.at({2, 0}).ff.has_value());
  CHECK(p21.entries.at({2, 0}).fh.has_value());
  CHECK(p21.entries.at({1, 1}).ff.has_value());

  // Symmetrization never grows a norm.
  for (const auto& [ij, norms] : p21.entries) {
    if (norms.ff) CHECK(*norms.ff_sym <= *norms.ff * (1.0 + 1e-12));
    if (norms.fh) CHECK(*norms.fh_sym <= *norms.fh * (1.0 + 1e-12));
  }

  const KernelTensor tiny = make_kernel(1, 1, 0, {Complex(1.0, 0.0)});
  CHECK_THROWS_AS(contraction_profile(tiny), std::domain_error);
}

TEST_CASE("diagonal family: every contraction norm squared is 1/d") {
  for (const auto [m, n] : {std::pair{1, 1}, {2, 1}, {2, 2}}) {
    for (const int d : {1, 2, 3, 4}) {
      const KernelTensor f = gen_diagonal(m, n, d);
      CHECK(std::abs(norm(f) - 1.0) < 1e-12);
      const ContractionProfile prof = contraction_profile(f);
      for (const auto& [ij, norms] : prof.entries) {
        const double want = 1.0 / static_cast<double>(d);
        if (norms.ff) CHECK(std::abs(*norms.ff * *norms.ff - want) < 1e-12);
        if (norms.fh) CHECK(std::abs(*norms.fh * *norms.fh - want) < 1e-12);
        if (norms.ff_sym) CHECK(std::abs(*norms.ff_sym * *norms.ff_sym - want) < 1e-12);
        if (norms.fh_sym) CHECK(std::abs(*norms.fh_sym * *norms.fh_sym - want) < 1e-12);
      }
    }
  }
}

TEST_CASE("gap of the diagonal kernel scales as 1/d at grade (1,1)") {
  for (const int d : {1, 2, 4, 8}) {
    const KernelTensor f = gen_diagonal(1, 1, d);
    CHECK(relgap(6.0 / d, gap_contractions(f)) < 1e-9);
    CHECK(relgap(6.0 / d, gap_exact(f)) < 1e-9);
  }
}

TEST_CASE("expansions and gap agree for non-symmetric inputs too") {
  // All entry points symmetrize internally, so a raw asymmetric tensor and
  // its symmetrization must give the same numbers.
  ChaosRng rng(35);
  KernelTensor K(2, 2, 0);
  for (Eigen::Index x = 0; x < K.size(); ++x) K[x] = rng.complex_normal();
  CHECK(relgap(gap_exact(K), gap_exact(symmetrize(K))) < 1e-12);
  CHECK(relgap(gap_contractions(K), gap_contractions(symmetrize(K))) < 1e-12);
  CHECK(relgap(lemma31_expansion_a(K), lemma31_expansion_a(symmetrize(K))) < 1e-12);
}
