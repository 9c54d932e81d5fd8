#pragma once

#include <gmpxx.h>

namespace kks {

/// binom(n, j) for any integer n: zero when j < 0, otherwise the falling
/// factorial n (n-1) ... (n-j+1) / j!.
mpz_class binom(long n, long j);

/// Indicator of a proposition.
constexpr int delta(bool condition) { return condition ? 1 : 0; }

constexpr int sign_power(long exponent) { return exponent % 2 == 0 ? 1 : -1; }

}  // namespace kks
