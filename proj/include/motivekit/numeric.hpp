#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include "motivekit/error.hpp"

namespace motivekit {

// Polynomial coefficients and counts are exact integers of unbounded size.
using Int = boost::multiprecision::cpp_int;

// Largest v such that p^v divides n.  Requires n >= 1 and p >= 2.
int p_valuation(long long n, long long p);

// True iff C(n, k) is not divisible by the prime p, decided digit-wise in
// base p: every base-p digit of k must be <= the matching digit of n.
bool binom_nonzero_mod_p(long long n, long long k, long long p);

bool is_prime(long long n);

// Base^exp for small operands used in table formulas.
long long ipow(long long base, int exp);

}  // namespace motivekit
