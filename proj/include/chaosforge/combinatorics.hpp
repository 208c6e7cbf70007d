#pragma once

#include <cstdint>

namespace chaosforge {

// n! as a double. Exact for n <= 18; callers that need exact integer
// arithmetic stay well below that.
double fact(int n);

// Binomial coefficient C(n, k) as a double, exact for n <= 62.
double binom(int n, int k);

// n! as a 64-bit integer; requires n <= 20.
std::int64_t fact_i64(int n);

// C(n, k) as a 64-bit integer; requires n <= 62.
std::int64_t binom_i64(int n, int k);

// base^exp for small nonnegative integers.
std::int64_t ipow(std::int64_t base, int exp);

}  // namespace chaosforge
