#include "motivekit/numeric.hpp"

namespace motivekit {

int p_valuation(long long n, long long p) {
  if (n < 1) fail(errc::invalid_argument, "p_valuation requires n >= 1");
  if (p < 2) fail(errc::invalid_argument, "p_valuation requires p >= 2");
  int v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

bool binom_nonzero_mod_p(long long n, long long k, long long p) {
  if (n < 0 || k < 0) fail(errc::invalid_argument, "binomial arguments must be non-negative");
  if (p < 2 || !is_prime(p)) fail(errc::invalid_argument, "p must be prime");
  while (n > 0 || k > 0) {
    if (k % p > n % p) return false;
    n /= p;
    k /= p;
  }
  return true;
}

bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

long long ipow(long long base, int exp) {
  long long r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

}  // namespace motivekit
