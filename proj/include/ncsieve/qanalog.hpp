#pragma once

#include <array>
#include <numeric>
#include <span>
#include <stdexcept>
#include <vector>

#include "ncsieve/integer.hpp"
#include "ncsieve/polynomial.hpp"

namespace ncsieve {

// [n]_q = 1 + q + ... + q^{n-1}; [0]_q = 0.
inline IntPolynomial q_int(long n) {
  if (n < 0) throw std::invalid_argument("q_int: negative argument");
  return IntPolynomial(std::vector<Integer>(static_cast<std::size_t>(n), Integer(1)));
}

inline IntPolynomial q_factorial(long n) {
  if (n < 0) throw std::invalid_argument("q_factorial: negative argument");
  IntPolynomial r{1};
  for (long i = 2; i <= n; ++i) r *= q_int(i);
  return r;
}

inline IntPolynomial q_binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) throw std::invalid_argument("q_binomial: need 0 <= k <= n");
  return exact_divide(q_factorial(n), q_factorial(k) * q_factorial(n - k), "q-binomial");
}

inline IntPolynomial q_multinomial(long n, std::span<const long> parts) {
  long total = 0;
  IntPolynomial den{1};
  for (long p : parts) {
    if (p < 0) throw std::invalid_argument("q_multinomial: negative part");
    total += p;
    den *= q_factorial(p);
  }
  if (total != n) throw std::invalid_argument("q_multinomial: parts do not sum to n");
  return exact_divide(q_factorial(n), den, "q-multinomial");
}

// MacMahon's q-Catalan number [2n choose n]_q / [n+1]_q.
inline IntPolynomial q_catalan(long n) {
  if (n < 0) throw std::invalid_argument("q_catalan: negative argument");
  return exact_divide(q_binomial(2 * n, n), q_int(n + 1), "q-Catalan");
}

// One summand of the fake-degree sum: the triple (k, x, y) with 2k + x + y = n - 1.
struct FakeDegreeTerm {
  long k;
  long x;
  long y;

  std::array<long, 3> parts() const { return {2 * k, x, y}; }
};

inline std::vector<FakeDegreeTerm> fake_degree_terms(long n) {
  if (n < 1) throw std::invalid_argument("fake_degree_terms: need n >= 1");
  std::vector<FakeDegreeTerm> out;
  const long total = n - 1;
  for (long k = 0; 2 * k <= total; ++k) {
    for (long x = 0; 2 * k + x <= total; ++x) out.push_back({k, x, total - 2 * k - x});
  }
  return out;
}

/**
 * sum over 2k + x + y = n - 1 of
 *   [n-1; 2k, x, y]_q * Cat_k(q) * q^{k + C(x,2) + C(y,2)}.
 */
inline IntPolynomial fake_degree_poly(long n) {
  IntPolynomial sum;
  for (const auto& t : fake_degree_terms(n)) {
    const auto parts = t.parts();
    const long shift = t.k + t.x * (t.x - 1) / 2 + t.y * (t.y - 1) / 2;
    sum += (q_multinomial(n - 1, parts) * q_catalan(t.k)).shifted(static_cast<std::size_t>(shift));
  }
  return sum;
}

// Order of zeta_{n-1}^ell, i.e. (n-1) / gcd(n-1, ell).
inline long root_order(long n_minus_1, long ell) {
  return n_minus_1 / std::gcd(n_minus_1, mod_floor(ell, n_minus_1));
}

// Closed form of Cat_n(zeta_{n-1}^ell), by the order m of the root:
// m = 1 gives Cat_n, m = 2 gives C(n, (n-1)/2), m > 2 gives C(2(n-1)/m, (n-1)/m).
inline Integer catalan_at_root_closed(long n, long ell) {
  if (n < 2) throw std::invalid_argument("catalan_at_root_closed: need n >= 2");
  const long m = root_order(n - 1, ell);
  if (m == 1) return catalan(n);
  if (m == 2) return binomial(n, (n - 1) / 2);
  return binomial(2 * (n - 1) / m, (n - 1) / m);
}

// [total; parts]_q at q = zeta_total^ell: the ordinary multinomial of parts/m
// when the root order m divides every part, else 0.
inline Integer multinomial_at_root_closed(long total, std::span<const long> parts, long ell) {
  if (total < 1) throw std::invalid_argument("multinomial_at_root_closed: need total >= 1");
  long sum = 0;
  for (long p : parts) sum += p;
  if (sum != total) throw std::invalid_argument("multinomial_at_root_closed: parts do not sum to total");
  const long m = root_order(total, ell);
  std::vector<long> reduced;
  for (long p : parts) {
    if (p % m != 0) return 0;
    reduced.push_back(p / m);
  }
  return multinomial(reduced);
}

}  // namespace ncsieve
