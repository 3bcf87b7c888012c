#pragma once

#include <map>
#include <stdexcept>
#include <vector>

#include "ncsieve/bivariate.hpp"
#include "ncsieve/cyclotomic.hpp"
#include "ncsieve/qanalog.hpp"

namespace ncsieve {

// {0} = 0, {1} = 1, {n+2} = q{n+1} + t{n}
inline IntPolynomial2 fib_poly(long n) {
  if (n < 0) throw std::invalid_argument("fib_poly: negative index");
  if (n == 0) return {};
  const auto q = IntPolynomial2::first_var();
  const auto t = IntPolynomial2::second_var();
  IntPolynomial2 prev;  // {0}
  IntPolynomial2 cur = IntPolynomial2::constant(1);
  for (long i = 1; i < n; ++i) {
    IntPolynomial2 next = q * cur + t * prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

inline IntPolynomial2 fib_factorial(long n) {
  if (n < 0) throw std::invalid_argument("fib_factorial: negative index");
  auto r = IntPolynomial2::constant(1);
  for (long i = 2; i <= n; ++i) r *= fib_poly(i);
  return r;
}

inline IntPolynomial2 fibonomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) throw std::invalid_argument("fibonomial: need 0 <= k <= n");
  return exact_divide(fib_factorial(n), fib_factorial(k) * fib_factorial(n - k), "Fibonomial");
}

// {2n choose n} / {n+1}
inline IntPolynomial2 fibonomial_catalan(long n) {
  if (n < 1) throw std::invalid_argument("fibonomial_catalan: need n >= 1");
  return exact_divide(fibonomial(2 * n, n), fib_poly(n + 1), "Fibonomial Catalan");
}

// p(X + Y, -XY)
inline HomogeneousPoly2 substitute_roots(const IntPolynomial2& p) {
  const auto x = HomogeneousPoly2::first_var();
  const auto y = HomogeneousPoly2::second_var();
  return p.evaluate(x + y, HomogeneousPoly2::constant(-1) * x * y);
}

// sum_e c_e X^e Y^{degree - e} for the coefficients c_e of p
inline HomogeneousPoly2 homogenize(const IntPolynomial& p, int degree) {
  HomogeneousPoly2 out;
  for (long e = 0; e <= p.degree(); ++e) {
    if (e > degree) throw std::invalid_argument("homogenize: degree too small");
    out.add_term(static_cast<int>(e), degree - static_cast<int>(e), p[e]);
  }
  return out;
}

struct Lemma42Result {
  long n;
  long k;
  bool holds;
  HomogeneousPoly2 lhs;  // fibonomial(n, k) under q -> X+Y, t -> -XY
  HomogeneousPoly2 rhs;  // Y^{k(n-k)} [n choose k]_{X/Y}
};

inline Lemma42Result lemma42_check(long n, long k) {
  Lemma42Result r{n, k, false, substitute_roots(fibonomial(n, k)),
                  homogenize(q_binomial(n, k), static_cast<int>(k * (n - k)))};
  r.holds = r.lhs == r.rhs;
  return r;
}

/**
 * p(q0, t0) in Z[zeta]/(Phi_m). Horner in q over coefficients that are
 * themselves evaluated by Horner in t.
 */
inline CyclotomicValue eval_qt_cyclotomic(const IntPolynomial2& p, const CyclotomicValue& q0,
                                          const CyclotomicValue& t0) {
  if (q0.order() != t0.order()) {
    throw std::invalid_argument("eval_qt_cyclotomic: q and t values have different orders");
  }
  const long order = q0.order();
  std::map<int, std::map<int, Integer>> by_q;
  for (const auto& [e, c] : p.terms()) by_q[e.first][e.second] = c;

  auto eval_t = [&](const std::map<int, Integer>& poly_t) {
    auto acc = CyclotomicValue::integer(order, 0);
    int top = poly_t.empty() ? 0 : poly_t.rbegin()->first;
    for (int j = top; j >= 0; --j) {
      acc *= t0;
      if (auto it = poly_t.find(j); it != poly_t.end()) acc += CyclotomicValue::integer(order, it->second);
    }
    return acc;
  };

  auto acc = CyclotomicValue::integer(order, 0);
  const int top = p.degree_first();
  for (int i = top; i >= 0; --i) {
    acc *= q0;
    if (auto it = by_q.find(i); it != by_q.end()) acc += eval_t(it->second);
  }
  return acc;
}

}  // namespace ncsieve
