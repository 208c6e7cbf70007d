#include "chaosforge/combinatorics.hpp"

#include <array>
#include <stdexcept>

namespace chaosforge {

namespace {

constexpr int kMaxBinomN = 62;

const std::array<std::array<std::int64_t, kMaxBinomN + 1>, kMaxBinomN + 1>& pascal() {
  static const auto table = [] {
    std::array<std::array<std::int64_t, kMaxBinomN + 1>, kMaxBinomN + 1> t{};
    for (int n = 0; n <= kMaxBinomN; ++n) {
      t[n][0] = 1;
      for (int k = 1; k <= n; ++k)
        t[n][k] = t[n - 1][k - 1] + (k <= n - 1 ? t[n - 1][k] : 0);
    }
    return t;
  }();
  return table;
}

}  // namespace

std::int64_t fact_i64(int n) {
  if (n < 0 || n > 20) throw std::domain_error("fact_i64: n out of [0, 20]");
  std::int64_t r = 1;
  for (int k = 2; k <= n; ++k) r *= k;
  return r;
}

double fact(int n) {
  if (n < 0) throw std::domain_error("fact: negative argument");
  double r = 1.0;
  for (int k = 2; k <= n; ++k) r *= k;
  return r;
}

std::int64_t binom_i64(int n, int k) {
  if (n < 0 || n > kMaxBinomN) throw std::domain_error("binom_i64: n out of [0, 62]");
  if (k < 0 || k > n) return 0;
  return pascal()[n][k];
}

double binom(int n, int k) { return static_cast<double>(binom_i64(n, k)); }

std::int64_t ipow(std::int64_t base, int exp) {
  if (exp < 0) throw std::domain_error("ipow: negative exponent");
  std::int64_t r = 1;
  for (int k = 0; k < exp; ++k) r *= base;
  return r;
}

}  // namespace chaosforge
