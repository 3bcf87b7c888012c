#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "ncsieve/configuration.hpp"
#include "ncsieve/cyclotomic.hpp"
#include "ncsieve/dyck.hpp"
#include "ncsieve/fibonomial.hpp"
#include "ncsieve/qanalog.hpp"

namespace ncsieve {

// One group element checked against the sieving polynomial.
struct CspEntry {
  std::string label;
  long order = 1;            // order of the root of unity the element maps to
  Integer fixed_count;       // by enumeration
  Integer polynomial_value;  // by exact cyclotomic evaluation
  Integer closed_value;      // by closed-form formula
  std::optional<Integer> recurrence_value;  // F(n-1) by recurrence, flip only
  bool match = false;
};

struct CspReport {
  int n = 0;
  std::string group;
  std::vector<CspEntry> entries;
  bool verdict = false;
};

namespace detail {

inline bool all_match(const auto& entries) {
  for (const auto& e : entries) {
    if (!e.match) return false;
  }
  return true;
}

inline Integer integer_value(const CyclotomicValue& v, const std::string& context) {
  if (!v.is_integer()) {
    std::ostringstream os;
    os << context << ": value at a primitive " << v.order() << "-th root of unity is "
       << v.residue() << ", not a rational integer";
    throw InternalError(os.str());
  }
  return v.to_integer();
}

}  // namespace detail

// Cyclic sieving for X_n under C_{n-1} with Cat_n(q): for each d, the number
// of configurations fixed by r^d against Cat_n(zeta_{n-1}^d) and its closed form.
inline CspReport verify_cyclic_csp(int n) {
  if (n < 2) throw std::invalid_argument("verify_cyclic_csp: need n >= 2");
  const int modulus = n - 1;
  std::vector<DihedralElement> elems;
  for (int d = 0; d < modulus; ++d) elems.push_back(DihedralElement::rotation(modulus, d));
  const auto fixed = fixed_point_counts(n, elems);
  const IntPolynomial cat = q_catalan(n);

  CspReport report{n, "C_" + std::to_string(modulus), {}, false};
  for (int d = 0; d < modulus; ++d) {
    const auto value = eval_at_root(cat, modulus, d);
    CspEntry e;
    e.label = d == 0 ? "e" : "r^" + std::to_string(d);
    e.order = value.order();
    e.fixed_count = Integer(static_cast<unsigned long>(fixed[static_cast<std::size_t>(d)]));
    e.polynomial_value = detail::integer_value(value, "Cat_" + std::to_string(n) + " at r^" + std::to_string(d));
    e.closed_value = catalan_at_root_closed(n, d);
    e.match = e.fixed_count == e.polynomial_value && e.polynomial_value == e.closed_value;
    report.entries.push_back(std::move(e));
  }
  report.verdict = detail::all_match(report.entries);
  return report;
}

// F(m) = C(m+1, floor((m+1)/2)), the number of flip-invariant configurations of [m].
inline Integer F_closed(long m) {
  if (m < 0) throw std::invalid_argument("F_closed: negative argument");
  return binomial(m + 1, (m + 1) / 2);
}

/**
 * F(m) = 3 F(m-2) + sum_{i=2}^{floor(m/2)} Cat_{i-1} F(m-2i) for m >= 4,
 * from the bases F(0..3) = 1, 2, 3, 6.
 */
inline Integer F_recurrence(long m) {
  if (m < 0) throw std::invalid_argument("F_recurrence: negative argument");
  static std::mutex mu;
  static std::vector<Integer> memo{1, 2, 3, 6};
  std::lock_guard lock(mu);
  while (static_cast<long>(memo.size()) <= m) {
    const long k = static_cast<long>(memo.size());
    Integer v = 3 * memo[static_cast<std::size_t>(k - 2)];
    for (long i = 2; i <= k / 2; ++i) v += catalan(i - 1) * memo[static_cast<std::size_t>(k - 2 * i)];
    memo.push_back(v);
  }
  return memo[static_cast<std::size_t>(m)];
}

// Sieving for X_n under <tau> with Cat_n(q): identity against Cat_n(1), the
// flip against Cat_n(-1). The flip's closed value is F(n-1), also checked
// against the recurrence.
inline CspReport verify_reflection_csp(int n) {
  if (n < 2) throw std::invalid_argument("verify_reflection_csp: need n >= 2");
  const int modulus = n - 1;
  const std::vector<DihedralElement> elems{DihedralElement::identity(modulus),
                                           DihedralElement::reflection(modulus)};
  const auto fixed = fixed_point_counts(n, elems);
  const IntPolynomial cat = q_catalan(n);

  CspReport report{n, "<tau>", {}, false};
  for (int i = 0; i < 2; ++i) {
    const auto value = eval_at_root(cat, 2, i);
    CspEntry e;
    e.label = i == 0 ? "e" : "tau";
    e.order = value.order();
    e.fixed_count = Integer(static_cast<unsigned long>(fixed[static_cast<std::size_t>(i)]));
    e.polynomial_value = detail::integer_value(value, "Cat_" + std::to_string(n) + " at -1");
    e.closed_value = i == 0 ? catalan(n) : F_closed(n - 1);
    if (i == 1) e.recurrence_value = F_recurrence(n - 1);
    e.match = e.fixed_count == e.polynomial_value && e.polynomial_value == e.closed_value &&
              (!e.recurrence_value || *e.recurrence_value == e.closed_value);
    report.entries.push_back(std::move(e));
  }
  report.verdict = detail::all_match(report.entries);
  return report;
}

struct RootComparison {
  long ell = 0;
  long order = 1;
  Integer fd_value;       // q^{C(n,2)} fd at zeta_{n-1}^ell
  Integer catalan_value;  // Cat_n at zeta_{n-1}^ell
  bool match = false;
};

struct FdReport {
  int n = 0;
  std::vector<Integer> folded_fd;       // q^{C(n,2)} fd reduced mod q^{n-1} - 1
  std::vector<Integer> folded_catalan;  // Cat_n(q) reduced mod q^{n-1} - 1
  std::optional<long> first_mismatch;   // residue class where the vectors differ
  std::vector<RootComparison> roots;
  bool verdict = false;
};

inline IntPolynomial shifted_fake_degree(int n) {
  return fake_degree_poly(n).shifted(static_cast<std::size_t>(n) * (n - 1) / 2);
}

inline FdReport verify_fd_congruence(int n) {
  if (n < 2) throw std::invalid_argument("verify_fd_congruence: need n >= 2");
  const long modulus = n - 1;
  const IntPolynomial fd = shifted_fake_degree(n);
  const IntPolynomial cat = q_catalan(n);
  FdReport report;
  report.n = n;
  report.folded_fd = reduce_mod_cyclic(fd, modulus);
  report.folded_catalan = reduce_mod_cyclic(cat, modulus);
  for (long j = 0; j < modulus; ++j) {
    if (report.folded_fd[static_cast<std::size_t>(j)] != report.folded_catalan[static_cast<std::size_t>(j)]) {
      report.first_mismatch = j;
      break;
    }
  }
  for (long ell = 0; ell < modulus; ++ell) {
    const auto fv = eval_at_root(fd, modulus, ell);
    const auto cv = eval_at_root(cat, modulus, ell);
    const std::string where = " at zeta_" + std::to_string(modulus) + "^" + std::to_string(ell);
    RootComparison r;
    r.ell = ell;
    r.order = fv.order();
    r.fd_value = detail::integer_value(fv, "shifted fake degree" + where);
    r.catalan_value = detail::integer_value(cv, "Cat_" + std::to_string(n) + where);
    r.match = r.fd_value == r.catalan_value;
    report.roots.push_back(std::move(r));
  }
  report.verdict = !report.first_mismatch && detail::all_match(report.roots);
  return report;
}

struct MultinomialRootEntry {
  FakeDegreeTerm term;
  long ell = 0;
  Integer algebraic;  // eval_at_root of the q-multinomial
  Integer closed;     // multinomial_at_root_closed
  bool match = false;
};

struct MultinomialRootReport {
  int n = 0;
  std::vector<MultinomialRootEntry> entries;
  bool verdict = false;
};

// Every q-multinomial [n-1; 2k, x, y]_q of the fake-degree sum, at every
// power of zeta_{n-1}, against its closed form.
inline MultinomialRootReport verify_multinomial_roots(int n) {
  if (n < 2) throw std::invalid_argument("verify_multinomial_roots: need n >= 2");
  const long total = n - 1;
  MultinomialRootReport report{n, {}, false};
  for (const auto& t : fake_degree_terms(n)) {
    const auto parts = t.parts();
    const IntPolynomial p = q_multinomial(total, parts);
    for (long ell = 0; ell < total; ++ell) {
      MultinomialRootEntry e{t, ell, 0, 0, false};
      e.algebraic = detail::integer_value(eval_at_root(p, total, ell), "q-multinomial");
      e.closed = multinomial_at_root_closed(total, parts, ell);
      e.match = e.algebraic == e.closed;
      report.entries.push_back(std::move(e));
    }
  }
  report.verdict = detail::all_match(report.entries);
  return report;
}

struct StatisticsReport {
  int n = 0;
  std::vector<Integer> catalan_coefficients;
  std::vector<Integer> cwt_distribution;  // index = cwt value
  std::vector<Integer> maj_distribution;  // index = maj value
  bool cwt_matches = false;
  bool maj_matches = false;
  std::uint64_t configurations = 0;
  std::uint64_t paths = 0;
  std::uint64_t transport_failures = 0;  // maj(to_dyck(x)) != cwt(x)
  std::uint64_t roundtrip_failures = 0;  // either direction
  std::optional<std::string> witness;    // first failing object
  bool verdict = false;
};

namespace detail {

inline std::vector<Integer> dense_histogram(const std::map<long, std::uint64_t>& hist) {
  std::vector<Integer> out;
  if (hist.empty()) return out;
  out.resize(static_cast<std::size_t>(hist.rbegin()->first) + 1);
  for (const auto& [w, c] : hist) out[static_cast<std::size_t>(w)] = Integer(static_cast<unsigned long>(c));
  return out;
}

}  // namespace detail

inline StatisticsReport verify_statistics(int n) {
  if (n < 1) throw std::invalid_argument("verify_statistics: need n >= 1");
  StatisticsReport report;
  report.n = n;
  report.catalan_coefficients = q_catalan(n).coeffs();
  report.cwt_distribution = detail::dense_histogram(cwt_histogram(n));
  report.maj_distribution = detail::dense_histogram(maj_histogram(n));
  report.cwt_matches = report.cwt_distribution == report.catalan_coefficients;
  report.maj_matches = report.maj_distribution == report.catalan_coefficients;

  auto note = [&](const std::string& w) {
    if (!report.witness) report.witness = w;
  };
  for (const auto& x : enumerate_configurations(n)) {
    ++report.configurations;
    const DyckPath p = to_dyck(x);
    std::ostringstream os;
    os << x;
    if (maj(p) != cwt(x)) {
      ++report.transport_failures;
      note("maj(to_dyck(x)) != cwt(x) for x = " + os.str());
    }
    if (from_dyck(p) != x) {
      ++report.roundtrip_failures;
      note("from_dyck(to_dyck(x)) != x for x = " + os.str());
    }
  }
  for (const auto& p : enumerate_dyck(n)) {
    ++report.paths;
    if (to_dyck(from_dyck(p)) != p) {
      ++report.roundtrip_failures;
      note("to_dyck(from_dyck(p)) != p for p = " + p.bits());
    }
  }
  report.verdict = report.cwt_matches && report.maj_matches && report.transport_failures == 0 &&
                   report.roundtrip_failures == 0;
  return report;
}

enum class ClassKind { Identity, Rotation, Reflection };

struct DihedralClass {
  ClassKind kind = ClassKind::Identity;
  std::string label;
  long ell = 0;                 // rotation amount of the representative
  long size = 1;
  std::vector<DihedralElement> members;
  bool representatives_agree = false;
  Integer permutation_character;  // fixed points, by enumeration
  Integer evaluated_character;    // X(chi_{z1}(C), chi_{-det}(C)) in Z[zeta]
  Integer shortcut_character;     // closed form Cat_n(zeta^{2 ell}) / Cat_n(-1)
  bool match = false;
};

struct DihedralReport {
  int n = 0;
  std::vector<DihedralClass> classes;
  bool verdict = false;
};

// Conjugacy classes of I_2(N) for odd N: {e}, {r^l, r^{N-l}} for 1 <= l <= (N-1)/2,
// and all N reflections.
inline std::vector<DihedralClass> dihedral_classes_odd(int modulus) {
  if (modulus < 1 || modulus % 2 == 0) throw std::invalid_argument("dihedral_classes_odd: need odd modulus");
  std::vector<DihedralClass> out;
  DihedralClass id;
  id.kind = ClassKind::Identity;
  id.label = "{e}";
  id.members = {DihedralElement::identity(modulus)};
  out.push_back(std::move(id));
  for (int ell = 1; 2 * ell < modulus; ++ell) {
    DihedralClass c;
    c.kind = ClassKind::Rotation;
    c.ell = ell;
    c.label = "{r^" + std::to_string(ell) + ",r^" + std::to_string(modulus - ell) + "}";
    c.members = {DihedralElement::rotation(modulus, ell), DihedralElement::rotation(modulus, modulus - ell)};
    out.push_back(std::move(c));
  }
  DihedralClass refl;
  refl.kind = ClassKind::Reflection;
  refl.label = "{s,sr,...}";
  for (int k = 0; k < modulus; ++k) refl.members.push_back(DihedralElement::reflection(modulus, k));
  out.push_back(std::move(refl));
  for (auto& c : out) c.size = static_cast<long>(c.members.size());
  return out;
}

/**
 * Dihedral sieving for X_n under I_2(n-1), n even, with
 * X(q,t) = {2n choose n}_{q,t} / {n+1}_{q,t}.
 *
 * Per class: the permutation character by enumeration, X evaluated exactly
 * at chi_{z1} = zeta^l + zeta^{-l}, chi_{-det} = -1 on rotations and at
 * (0, 1) on reflections, and the closed-form shortcut.
 */
inline DihedralReport verify_dihedral(int n) {
  if (n < 2 || n % 2 != 0) {
    throw std::invalid_argument("verify_dihedral: n must be even and >= 2 (odd n is unsupported)");
  }
  const int modulus = n - 1;
  DihedralReport report;
  report.n = n;
  report.classes = dihedral_classes_odd(modulus);

  std::vector<DihedralElement> all;
  for (const auto& c : report.classes) all.insert(all.end(), c.members.begin(), c.members.end());
  const auto fixed = fixed_point_counts(n, all);
  const IntPolynomial2 xqt = fibonomial_catalan(n);

  std::size_t idx = 0;
  for (auto& c : report.classes) {
    const std::uint64_t first = fixed[idx];
    c.representatives_agree = true;
    for (std::size_t i = 0; i < c.members.size(); ++i, ++idx) {
      if (fixed[idx] != first) c.representatives_agree = false;
    }
    c.permutation_character = Integer(static_cast<unsigned long>(first));

    CyclotomicValue value;
    if (c.kind == ClassKind::Reflection) {
      value = eval_qt_cyclotomic(xqt, CyclotomicValue::integer(1, 0), CyclotomicValue::integer(1, 1));
      c.shortcut_character = binomial(n, n / 2);
    } else {
      const long order = root_order(modulus, c.ell);
      const long step = c.ell / (modulus / order);
      const auto q0 = CyclotomicValue::root_power(order, step) + CyclotomicValue::root_power(order, -step);
      value = eval_qt_cyclotomic(xqt, q0, CyclotomicValue::integer(order, -1));
      c.shortcut_character = catalan_at_root_closed(n, 2 * c.ell);
    }
    c.evaluated_character = detail::integer_value(value, "X(q,t) on class " + c.label);
    c.match = c.representatives_agree && c.permutation_character == c.evaluated_character &&
              c.evaluated_character == c.shortcut_character;
  }
  report.verdict = detail::all_match(report.classes);
  return report;
}

}  // namespace ncsieve
