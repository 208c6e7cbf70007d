#include "chaosforge/wick.hpp"

#include "chaosforge/combinatorics.hpp"
#include "chaosforge/errors.hpp"

namespace chaosforge {

using Complex = std::complex<double>;

namespace {

constexpr int kSlotsPerWord = 12;
constexpr std::uint64_t kExpMask = 0x1F;

int slot_of(int coord, bool conjugated) { return 2 * coord + (conjugated ? 1 : 0); }

WickKey key_sum(const WickKey& a, const WickKey& b, int d) {
  // Exponents are capped at kDegreeCap total, so 5-bit lanes cannot carry.
  WickKey r;
  r.lo = a.lo + b.lo;
  r.hi = a.hi + b.hi;
  (void)d;
  return r;
}

}  // namespace

int wick_get(const WickKey& k, int coord, bool conjugated) {
  const int s = slot_of(coord, conjugated);
  const std::uint64_t w = s < kSlotsPerWord ? k.lo : k.hi;
  const int off = 5 * (s % kSlotsPerWord);
  return static_cast<int>((w >> off) & kExpMask);
}

void wick_set(WickKey& k, int coord, bool conjugated, int value) {
  const int s = slot_of(coord, conjugated);
  std::uint64_t& w = s < kSlotsPerWord ? k.lo : k.hi;
  const int off = 5 * (s % kSlotsPerWord);
  w = (w & ~(kExpMask << off)) | (static_cast<std::uint64_t>(value & kExpMask) << off);
}

WickPolynomial::WickPolynomial(int d) : d_(d) {
  if (d < 1 || d > kWickMaxDim) throw ShapeError("wick oracle supports 1 <= d <= 12");
}

void WickPolynomial::add_term(const WickKey& key, Complex coeff) {
  auto [it, fresh] = terms_.try_emplace(key, coeff);
  if (!fresh) it->second += coeff;
}

int WickPolynomial::total_degree() const {
  int best = 0;
  for (const auto& [key, coeff] : terms_) {
    if (coeff == Complex(0.0)) continue;
    int deg = 0;
    for (int c = 0; c < d_; ++c)
      deg += wick_get(key, c, false) + wick_get(key, c, true);
    best = std::max(best, deg);
  }
  return best;
}

WickPolynomial wick_add(const WickPolynomial& A, const WickPolynomial& B) {
  if (A.d() != B.d()) throw ShapeError("wick_add: dimension mismatch");
  WickPolynomial R = A;
  for (const auto& [key, coeff] : B.terms()) R.add_term(key, coeff);
  return R;
}

WickPolynomial wick_mul(const WickPolynomial& A, const WickPolynomial& B) {
  if (A.d() != B.d()) throw ShapeError("wick_mul: dimension mismatch");
  if (A.total_degree() + B.total_degree() > kDegreeCap)
    throw DegreeCapError("wick_mul: product exceeds the oracle degree cap");
  WickPolynomial R(A.d());
  for (const auto& [ka, ca] : A.terms()) {
    if (ca == Complex(0.0)) continue;
    for (const auto& [kb, cb] : B.terms()) {
      if (cb == Complex(0.0)) continue;
      R.add_term(key_sum(ka, kb, A.d()), ca * cb);
    }
  }
  return R;
}

WickPolynomial wick_conj(const WickPolynomial& A) {
  WickPolynomial R(A.d());
  for (const auto& [key, coeff] : A.terms()) {
    WickKey flipped;
    for (int c = 0; c < A.d(); ++c) {
      wick_set(flipped, c, false, wick_get(key, c, true));
      wick_set(flipped, c, true, wick_get(key, c, false));
    }
    R.add_term(flipped, std::conj(coeff));
  }
  return R;
}

Complex wick_expectation(const WickPolynomial& P) {
  Complex total = 0.0;
  for (const auto& [key, coeff] : P.terms()) {
    if (coeff == Complex(0.0)) continue;
    double w = 1.0;
    bool matched = true;
    for (int c = 0; c < P.d(); ++c) {
      const int p = wick_get(key, c, false);
      const int q = wick_get(key, c, true);
      if (p != q) {
        matched = false;
        break;
      }
      w *= fact(p);
    }
    if (matched) total += coeff * w;
  }
  return total;
}

Complex wick_eval(const WickPolynomial& P, const GaussianSample& s) {
  if (P.d() != s.d) throw ShapeError("wick_eval: dimension mismatch");
  Complex total = 0.0;
  for (const auto& [key, coeff] : P.terms()) {
    Complex term = coeff;
    for (int c = 0; c < P.d(); ++c) {
      const Complex z = s.values[static_cast<std::size_t>(c)];
      for (int k = wick_get(key, c, false); k > 0; --k) term *= z;
      const Complex zb = std::conj(z);
      for (int k = wick_get(key, c, true); k > 0; --k) term *= zb;
    }
    total += term;
  }
  return total;
}

}  // namespace chaosforge
