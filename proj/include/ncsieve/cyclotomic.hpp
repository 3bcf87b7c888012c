#pragma once

#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "ncsieve/errors.hpp"
#include "ncsieve/integer.hpp"
#include "ncsieve/polynomial.hpp"

namespace ncsieve {

// Phi_m(q), obtained as (q^m - 1) / prod_{d | m, d < m} Phi_d(q).
inline IntPolynomial cyclotomic(long m) {
  if (m < 1) throw std::invalid_argument("cyclotomic order must be positive");
  static std::mutex mu;
  static std::map<long, IntPolynomial> cache;
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(m); it != cache.end()) return it->second;
  }
  IntPolynomial num = IntPolynomial::monomial(static_cast<std::size_t>(m)) - IntPolynomial{1};
  IntPolynomial den{1};
  for (long d = 1; d < m; ++d) {
    if (m % d == 0) den *= cyclotomic(d);
  }
  IntPolynomial phi = exact_divide(num, den, "cyclotomic polynomial");
  std::lock_guard lock(mu);
  return cache.emplace(m, std::move(phi)).first->second;
}

// Entry j is the sum of the coefficients of p at exponents congruent to j
// modulo m, i.e. p reduced modulo q^m - 1.
inline std::vector<Integer> reduce_mod_cyclic(const IntPolynomial& p, long m) {
  if (m < 1) throw std::invalid_argument("modulus must be positive");
  std::vector<Integer> out(static_cast<std::size_t>(m));
  for (long e = 0; e <= p.degree(); ++e) {
    out[static_cast<std::size_t>(e % m)] += p.coeffs()[static_cast<std::size_t>(e)];
  }
  return out;
}

/**
 * An element of Z[q] / (Phi_m(q)), read as a value at a primitive m-th root
 * of unity. The residue is always fully reduced, so two values are equal iff
 * their residues are equal, and a value is a rational integer iff its residue
 * is constant.
 */
class CyclotomicValue {
 public:
  CyclotomicValue() : CyclotomicValue(1, IntPolynomial{}) {}

  CyclotomicValue(long order, const IntPolynomial& p) : order_(order) {
    if (order < 1) throw std::invalid_argument("cyclotomic order must be positive");
    residue_ = divmod(p, cyclotomic(order)).remainder;
  }

  static CyclotomicValue integer(long order, const Integer& z) {
    return {order, IntPolynomial::constant(z)};
  }

  // zeta_order^k for any integer k
  static CyclotomicValue root_power(long order, long k) {
    return {order, IntPolynomial::monomial(static_cast<std::size_t>(mod_floor(k, order)))};
  }

  long order() const { return order_; }
  const IntPolynomial& residue() const { return residue_; }

  bool is_integer() const { return residue_.degree() <= 0; }

  Integer to_integer() const {
    if (!is_integer()) {
      throw InternalError("cyclotomic value of order " + std::to_string(order_) +
                          " is not a rational integer");
    }
    return residue_[0];
  }

  CyclotomicValue& operator+=(const CyclotomicValue& o) {
    check_order(o);
    residue_ += o.residue_;
    return *this;
  }

  CyclotomicValue& operator-=(const CyclotomicValue& o) {
    check_order(o);
    residue_ -= o.residue_;
    return *this;
  }

  CyclotomicValue& operator*=(const CyclotomicValue& o) {
    check_order(o);
    residue_ = divmod(residue_ * o.residue_, cyclotomic(order_)).remainder;
    return *this;
  }

  friend CyclotomicValue operator+(CyclotomicValue a, const CyclotomicValue& b) { return a += b; }
  friend CyclotomicValue operator-(CyclotomicValue a, const CyclotomicValue& b) { return a -= b; }
  friend CyclotomicValue operator*(CyclotomicValue a, const CyclotomicValue& b) { return a *= b; }

  friend bool operator==(const CyclotomicValue&, const CyclotomicValue&) = default;

 private:
  void check_order(const CyclotomicValue& o) const {
    if (o.order_ != order_) {
      throw std::invalid_argument("cyclotomic values of different orders " +
                                  std::to_string(order_) + " and " + std::to_string(o.order_));
    }
  }

  long order_;
  IntPolynomial residue_;
};

/**
 * Exact value p(zeta_m^d).
 *
 * zeta_m^d is a primitive m'-th root of unity with m' = m / gcd(m, d), namely
 * zeta_{m'}^{d'} with d' = d / gcd(m, d). Exponents are mapped e -> e*d' mod m'
 * and the folded polynomial is reduced modulo Phi_{m'}. The result has order
 * m'; d = 0 gives order 1, i.e. the plain value p(1).
 */
inline CyclotomicValue eval_at_root(const IntPolynomial& p, long m, long d) {
  if (m < 1) throw std::invalid_argument("root order must be positive");
  d = mod_floor(d, m);
  const long g = std::gcd(m, d);  // gcd(m, 0) == m
  const long order = m / g;
  const long step = d / g;
  std::vector<Integer> folded(static_cast<std::size_t>(order));
  for (long e = 0; e <= p.degree(); ++e) {
    folded[static_cast<std::size_t>((e % order) * step % order)] +=
        p.coeffs()[static_cast<std::size_t>(e)];
  }
  return {order, IntPolynomial(std::move(folded))};
}

}  // namespace ncsieve
