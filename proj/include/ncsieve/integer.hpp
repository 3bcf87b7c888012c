#pragma once

#include <gmpxx.h>

#include <numeric>
#include <span>
#include <stdexcept>
#include <string>

namespace ncsieve {

using Integer = mpz_class;

inline Integer binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return r;
}

inline Integer factorial(long n) {
  if (n < 0) throw std::invalid_argument("factorial of a negative number");
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

// (sum parts)! / prod(parts!)
inline Integer multinomial(std::span<const long> parts) {
  long total = 0;
  Integer r = 1;
  for (long p : parts) {
    if (p < 0) throw std::invalid_argument("multinomial with a negative part");
    total += p;
    r *= binomial(total, p);
  }
  return r;
}

// Cat_n = C(2n, n) / (n + 1)
inline Integer catalan(long n) {
  if (n < 0) throw std::invalid_argument("catalan of a negative index");
  Integer r = binomial(2 * n, n);
  mpz_divexact_ui(r.get_mpz_t(), r.get_mpz_t(), static_cast<unsigned long>(n + 1));
  return r;
}

inline long mod_floor(long a, long m) {
  long r = a % m;
  return r < 0 ? r + m : r;
}

inline std::string to_string(const Integer& z) { return z.get_str(10); }

}  // namespace ncsieve
