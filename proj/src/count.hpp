#pragma once

#include <gmpxx.h>

#include "errors.hpp"

namespace riordan {

// Exact nonnegative counts. Everything in the counting layer is arbitrary
// precision; no floating point anywhere.
using Count = mpz_class;

// C(n, k) with the empty convention: 0 whenever k < 0, n < 0 or n < k.
Count binomial(long n, long k);

// Exact conversion; gmpxx has no long long constructor.
Count to_count(long long v);

Count factorial(unsigned long n);

// num / den, throwing InternalError when the division is not exact.
Count exact_div(const Count& num, const Count& den, const char* what);

}  // namespace riordan
