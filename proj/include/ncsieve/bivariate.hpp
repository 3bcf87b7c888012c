#pragma once

#include <map>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ncsieve/errors.hpp"
#include "ncsieve/integer.hpp"

namespace ncsieve {

// Variable-name tags so (q,t)-polynomials and (X,Y)-polynomials stay distinct types.
struct QTVars {
  static constexpr const char* first = "q";
  static constexpr const char* second = "t";
};

struct XYVars {
  static constexpr const char* first = "X";
  static constexpr const char* second = "Y";
};

/**
 * Sparse polynomial in two variables. Terms map (i, j), the exponents of the
 * first and second variable, to a nonzero coefficient; iteration order is
 * lexicographic in (i, j).
 */
template <class Coeff, class Vars>
class SparsePoly2 {
 public:
  using Exponents = std::pair<int, int>;
  using Terms = std::map<Exponents, Coeff>;

  SparsePoly2() = default;
  explicit SparsePoly2(const Coeff& c) { add_term(0, 0, c); }

  static SparsePoly2 constant(const Coeff& c) { return monomial(0, 0, c); }

  static SparsePoly2 monomial(int i, int j, const Coeff& c = Coeff(1)) {
    SparsePoly2 p;
    p.add_term(i, j, c);
    return p;
  }

  static SparsePoly2 first_var() { return monomial(1, 0); }
  static SparsePoly2 second_var() { return monomial(0, 1); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Coeff coefficient(int i, int j) const {
    auto it = terms_.find({i, j});
    return it == terms_.end() ? Coeff(0) : it->second;
  }

  void add_term(int i, int j, const Coeff& c) {
    if (i < 0 || j < 0) throw std::invalid_argument("negative exponent");
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace({i, j}, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  int degree_first() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, e.first);
    return d;
  }

  // -1 for the zero polynomial
  int total_degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, e.first + e.second);
    return d;
  }

  bool is_homogeneous() const {
    const int d = total_degree();
    for (const auto& [e, c] : terms_) {
      if (e.first + e.second != d) return false;
    }
    return true;
  }

  bool has_nonnegative_coefficients() const {
    for (const auto& [e, c] : terms_) {
      if (c < 0) return false;
    }
    return true;
  }

  SparsePoly2& operator+=(const SparsePoly2& o) {
    for (const auto& [e, c] : o.terms_) add_term(e.first, e.second, c);
    return *this;
  }

  SparsePoly2& operator-=(const SparsePoly2& o) {
    for (const auto& [e, c] : o.terms_) add_term(e.first, e.second, Coeff(-c));
    return *this;
  }

  friend SparsePoly2 operator+(SparsePoly2 a, const SparsePoly2& b) { return a += b; }
  friend SparsePoly2 operator-(SparsePoly2 a, const SparsePoly2& b) { return a -= b; }

  friend SparsePoly2 operator*(const SparsePoly2& a, const SparsePoly2& b) {
    SparsePoly2 out;
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        out.add_term(ea.first + eb.first, ea.second + eb.second, Coeff(ca * cb));
      }
    }
    return out;
  }

  SparsePoly2& operator*=(const SparsePoly2& o) {
    *this = *this * o;
    return *this;
  }

  friend bool operator==(const SparsePoly2&, const SparsePoly2&) = default;

  // Evaluation in any commutative ring T constructible from Coeff.
  template <class T>
  T evaluate(const T& x, const T& y) const {
    std::vector<T> xp{T(Coeff(1))};
    std::vector<T> yp{T(Coeff(1))};
    T acc = T(Coeff(0));
    for (const auto& [e, c] : terms_) {
      while (static_cast<int>(xp.size()) <= e.first) xp.push_back(xp.back() * x);
      while (static_cast<int>(yp.size()) <= e.second) yp.push_back(yp.back() * y);
      acc = acc + T(c) * xp[static_cast<std::size_t>(e.first)] * yp[static_cast<std::size_t>(e.second)];
    }
    return acc;
  }

 private:
  Terms terms_;
};

/**
 * Exact division, treating both sides as polynomials in the first variable
 * with coefficients in Z[second]. The divisor's leading coefficient in the
 * first variable must be a single term c * second^e; any step that does not
 * stay integral, or a nonzero remainder, raises InternalError.
 */
template <class Coeff, class Vars>
SparsePoly2<Coeff, Vars> exact_divide(SparsePoly2<Coeff, Vars> num, const SparsePoly2<Coeff, Vars>& den,
                                      const char* what = "bivariate exact division") {
  using P = SparsePoly2<Coeff, Vars>;
  if (den.is_zero()) throw std::invalid_argument("bivariate division by zero");
  const int dq = den.degree_first();
  std::vector<std::pair<int, Coeff>> lead;
  for (const auto& [e, c] : den.terms()) {
    if (e.first == dq) lead.emplace_back(e.second, c);
  }
  if (lead.size() != 1) throw InternalError(std::string(what) + ": divisor leading coefficient is not a monomial");
  const auto [lead_exp, lead_coeff] = lead.front();

  P quotient;
  while (!num.is_zero()) {
    const int nq = num.degree_first();
    if (nq < dq) throw InternalError(std::string(what) + ": nonzero remainder");
    P step;
    for (const auto& [e, c] : num.terms()) {
      if (e.first != nq) continue;
      if (e.second < lead_exp || c % lead_coeff != 0) {
        throw InternalError(std::string(what) + ": nonzero remainder");
      }
      step.add_term(nq - dq, e.second - lead_exp, Coeff(c / lead_coeff));
    }
    num -= step * den;
    quotient += step;
  }
  return quotient;
}

template <class Coeff, class Vars>
std::ostream& operator<<(std::ostream& os, const SparsePoly2<Coeff, Vars>& p) {
  if (p.is_zero()) return os << "0";
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    first = false;
    Coeff a = c < 0 ? Coeff(-c) : c;
    const bool bare = e.first == 0 && e.second == 0;
    if (bare || a != 1) os << a;
    if (e.first) os << Vars::first << (e.first > 1 ? "^" + std::to_string(e.first) : "");
    if (e.second) os << Vars::second << (e.second > 1 ? "^" + std::to_string(e.second) : "");
  }
  return os;
}

using IntPolynomial2 = SparsePoly2<Integer, QTVars>;
using HomogeneousPoly2 = SparsePoly2<Integer, XYVars>;

}  // namespace ncsieve
