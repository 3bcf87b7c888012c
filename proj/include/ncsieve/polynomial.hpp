#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "ncsieve/errors.hpp"
#include "ncsieve/integer.hpp"

namespace ncsieve {

/**
 * Dense univariate polynomial in q.
 *
 * coeffs()[e] is the coefficient of q^e. The representation is normalized:
 * the highest stored coefficient is nonzero, and the zero polynomial stores
 * nothing (degree() == -1).
 */
template <class Coeff>
class Polynomial {
 public:
  using coefficient_type = Coeff;

  Polynomial() = default;
  Polynomial(std::initializer_list<Coeff> coeffs) : coeffs_(coeffs) { trim(); }
  explicit Polynomial(std::vector<Coeff> coeffs) : coeffs_(std::move(coeffs)) {
    trim();
  }

  static Polynomial constant(Coeff c) { return Polynomial(std::vector<Coeff>{std::move(c)}); }

  // c * q^e
  static Polynomial monomial(std::size_t e, Coeff c = Coeff(1)) {
    std::vector<Coeff> v(e + 1);
    v[e] = std::move(c);
    return Polynomial(std::move(v));
  }

  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Coeff>& coeffs() const { return coeffs_; }

  Coeff operator[](long e) const {
    if (e < 0 || e > degree()) return Coeff(0);
    return coeffs_[static_cast<std::size_t>(e)];
  }

  const Coeff& leading() const { return coeffs_.back(); }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
  }

  Polynomial& operator-=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
  }

  Polynomial& operator*=(const Polynomial& o) {
    *this = *this * o;
    return *this;
  }

  Polynomial& operator*=(const Coeff& c) {
    for (auto& x : coeffs_) x *= c;
    trim();
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Coeff& c) { return a *= c; }

  friend Polynomial operator-(Polynomial a) {
    for (auto& x : a.coeffs_) x = -x;
    return a;
  }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Coeff> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
        out[i + j] += a.coeffs_[i] * b.coeffs_[j];
      }
    }
    return Polynomial(std::move(out));
  }

  // Multiply by q^k.
  Polynomial shifted(std::size_t k) const {
    if (is_zero()) return {};
    std::vector<Coeff> v(k);
    v.insert(v.end(), coeffs_.begin(), coeffs_.end());
    return Polynomial(std::move(v));
  }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  template <class T>
  T evaluate(const T& x) const {
    T acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + T(*it);
    return acc;
  }

  Coeff sum_of_coefficients() const {
    Coeff s(0);
    for (const auto& c : coeffs_) s += c;
    return s;
  }

  bool has_nonnegative_coefficients() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Coeff& c) { return c >= 0; });
  }

  bool is_palindromic() const {
    return std::equal(coeffs_.begin(), coeffs_.end(), coeffs_.rbegin());
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<Coeff> coeffs_;
};

template <class Coeff>
struct DivisionResult {
  Polynomial<Coeff> quotient;
  Polynomial<Coeff> remainder;
};

// Long division over the integers. The divisor's leading coefficient must
// divide every leading coefficient met along the way; for the monic divisors
// used throughout this library that is automatic.
template <class Coeff>
DivisionResult<Coeff> divmod(const Polynomial<Coeff>& num, const Polynomial<Coeff>& den) {
  if (den.is_zero()) throw std::invalid_argument("polynomial division by zero");
  std::vector<Coeff> rem = num.coeffs();
  const long dd = den.degree();
  const long nd = num.degree();
  if (nd < dd) return {{}, num};
  std::vector<Coeff> quot(static_cast<std::size_t>(nd - dd + 1));
  const Coeff& lead = den.leading();
  for (long i = nd; i >= dd; --i) {
    Coeff& top = rem[static_cast<std::size_t>(i)];
    if (top == 0) continue;
    if (top % lead != 0) {
      throw InternalError("polynomial long division left the integers");
    }
    Coeff factor = top / lead;
    for (long j = 0; j <= dd; ++j) {
      rem[static_cast<std::size_t>(i - dd + j)] -= factor * den[j];
    }
    quot[static_cast<std::size_t>(i - dd)] = std::move(factor);
  }
  return {Polynomial<Coeff>(std::move(quot)), Polynomial<Coeff>(std::move(rem))};
}

// Quotient of a division that is known to be exact; a nonzero remainder is a
// defect and raises InternalError.
template <class Coeff>
Polynomial<Coeff> exact_divide(const Polynomial<Coeff>& num, const Polynomial<Coeff>& den,
                               const char* what = "exact division") {
  auto [q, r] = divmod(num, den);
  if (!r.is_zero()) throw InternalError(std::string(what) + ": nonzero remainder");
  return q;
}

template <class Coeff>
std::ostream& operator<<(std::ostream& os, const Polynomial<Coeff>& p) {
  if (p.is_zero()) return os << "0";
  bool first = true;
  for (long e = 0; e <= p.degree(); ++e) {
    const Coeff& c = p.coeffs()[static_cast<std::size_t>(e)];
    if (c == 0) continue;
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    first = false;
    Coeff a = c < 0 ? Coeff(-c) : c;
    if (e == 0 || a != 1) os << a;
    if (e > 0) os << "q";
    if (e > 1) os << "^" << e;
  }
  return os;
}

using IntPolynomial = Polynomial<Integer>;

}  // namespace ncsieve
