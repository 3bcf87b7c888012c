#pragma once

// Brute-force and numeric oracles used only by the tests. None of these share
// code paths with the library routines they check.

#include <cmath>
#include <complex>
#include <numbers>
#include <set>
#include <string>
#include <vector>

#include "ncsieve/integer.hpp"
#include "ncsieve/polynomial.hpp"

namespace oracle {

using ncsieve::Integer;

// Every family of pairwise disjoint balls and arcs on {1..N}, crossing or not,
// as mate arrays (0 empty, v ball, partner for arcs).
inline void all_families(int v, int ground, std::vector<int>& mate, std::vector<std::vector<int>>& out) {
  if (v > ground) {
    out.push_back(mate);
    return;
  }
  if (mate[v - 1] != 0) {
    all_families(v + 1, ground, mate, out);
    return;
  }
  all_families(v + 1, ground, mate, out);  // empty
  mate[v - 1] = v;
  all_families(v + 1, ground, mate, out);  // ball
  for (int w = v + 1; w <= ground; ++w) {
    if (mate[w - 1] != 0) continue;
    mate[v - 1] = w;
    mate[w - 1] = v;
    all_families(v + 1, ground, mate, out);
    mate[w - 1] = 0;
  }
  mate[v - 1] = 0;
}

inline bool noncrossing(const std::vector<int>& mate) {
  const int ground = static_cast<int>(mate.size());
  for (int a = 1; a <= ground; ++a) {
    const int b = mate[a - 1];
    if (b <= a) continue;
    for (int c = a + 1; c < b; ++c) {
      const int d = mate[c - 1];
      if (d > b) return false;
    }
  }
  return true;
}

// X_n as a set of mate arrays, by filtering all (1,2)-configurations.
inline std::set<std::vector<int>> noncrossing_families(int n) {
  std::vector<std::vector<int>> all;
  std::vector<int> mate(static_cast<std::size_t>(n - 1), 0);
  all_families(1, n - 1, mate, all);
  std::set<std::vector<int>> out;
  for (auto& m : all) {
    if (noncrossing(m)) out.insert(m);
  }
  return out;
}

// All 0/1 strings of length 2n with n zeros whose prefixes never have more
// ones than zeros.
inline std::vector<std::string> dyck_words(int n) {
  std::vector<std::string> out;
  for (unsigned long mask = 0; mask < (1UL << (2 * n)); ++mask) {
    std::string s;
    int h = 0;
    bool ok = true;
    for (int i = 2 * n - 1; i >= 0; --i) {
      const bool one = (mask >> i) & 1UL;
      s.push_back(one ? '1' : '0');
      h += one ? -1 : 1;
      if (h < 0) ok = false;
    }
    if (ok && h == 0) out.push_back(s);
  }
  return out;
}

inline long maj_of_word(const std::string& s) {
  long total = 0;
  for (std::size_t i = 0; i + 1 < s.size(); ++i) {
    if (s[i] > s[i + 1]) total += static_cast<long>(i) + 1;
  }
  return total;
}

// [n choose k]_q by the q-Pascal rule [n,k] = [n-1,k-1] + q^k [n-1,k].
inline ncsieve::IntPolynomial q_binomial_pascal(int n, int k) {
  std::vector<std::vector<ncsieve::IntPolynomial>> t(
      static_cast<std::size_t>(n + 1), std::vector<ncsieve::IntPolynomial>(static_cast<std::size_t>(n + 1)));
  for (int i = 0; i <= n; ++i) {
    t[i][0] = ncsieve::IntPolynomial{1};
    for (int j = 1; j <= i; ++j) t[i][j] = t[i - 1][j - 1] + t[i - 1][j].shifted(static_cast<std::size_t>(j));
  }
  return t[n][k];
}

// p(exp(2 pi i d / m)) in floating point.
inline std::complex<long double> complex_value(const ncsieve::IntPolynomial& p, long m, long d) {
  const long double angle = 2.0L * std::numbers::pi_v<long double> * static_cast<long double>(d) /
                            static_cast<long double>(m);
  const std::complex<long double> z(std::cos(angle), std::sin(angle));
  std::complex<long double> acc = 0;
  for (long e = p.degree(); e >= 0; --e) acc = acc * z + static_cast<long double>(p[e].get_d());
  return acc;
}

// Nearest integer when the value is within tol of one; used only where the
// magnitudes involved are far below the precision of long double.
inline bool near_integer(std::complex<long double> v, long long& out, long double tol = 1e-6L) {
  const long double re = std::round(v.real());
  if (std::abs(v.imag()) > tol || std::abs(v.real() - re) > tol) return false;
  out = static_cast<long long>(re);
  return true;
}

// {m}_{q,t} at integers by the defining recurrence.
inline Integer fib_value(long m, const Integer& q, const Integer& t) {
  Integer prev = 0;
  Integer cur = 1;
  if (m == 0) return 0;
  for (long i = 1; i < m; ++i) {
    Integer next = q * cur + t * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

// {n choose k} at integer (q, t) with q, t chosen so no {i} vanishes.
inline Integer fibonomial_value(long n, long k, const Integer& q, const Integer& t) {
  Integer num = 1;
  Integer den = 1;
  for (long i = 1; i <= k; ++i) {
    num *= fib_value(n - k + i, q, t);
    den *= fib_value(i, q, t);
  }
  return num / den;
}

}  // namespace oracle
