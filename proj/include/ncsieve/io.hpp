#pragma once

// JSON forms of the library's values and reports (nlohmann/json).
//
// Integers are JSON numbers when they fit in 64 bits and decimal strings
// otherwise. Univariate polynomials are [[exponent, coefficient], ...] in
// ascending exponent order; bivariate ones are [[i, j, coefficient], ...] in
// lexicographic (i, j) order.

#include <json.hpp>

#include <climits>
#include <stdexcept>
#include <string>
#include <vector>

#include "ncsieve/bivariate.hpp"
#include "ncsieve/configuration.hpp"
#include "ncsieve/dyck.hpp"
#include "ncsieve/polynomial.hpp"
#include "ncsieve/sieving.hpp"

namespace ncsieve::io {

using nlohmann::ordered_json;
using Json = ordered_json;

inline Json integer(const Integer& z) {
  if (mpz_fits_slong_p(z.get_mpz_t())) return static_cast<long long>(z.get_si());
  return z.get_str(10);
}

inline Integer parse_integer(const Json& j) {
  if (j.is_number_integer()) return Integer(std::to_string(j.get<long long>()));
  if (j.is_string()) return Integer(j.get<std::string>());
  throw std::invalid_argument("expected an integer");
}

inline Json integers(const std::vector<Integer>& v) {
  Json out = Json::array();
  for (const auto& z : v) out.push_back(integer(z));
  return out;
}

inline Json polynomial_terms(const IntPolynomial& p) {
  Json out = Json::array();
  for (long e = 0; e <= p.degree(); ++e) {
    if (p[e] != 0) out.push_back(Json::array({e, integer(p[e])}));
  }
  return out;
}

template <class Vars>
Json polynomial_terms(const SparsePoly2<Integer, Vars>& p) {
  Json out = Json::array();
  for (const auto& [e, c] : p.terms()) out.push_back(Json::array({e.first, e.second, integer(c)}));
  return out;
}

inline Json to_json(const Configuration& x) {
  Json arcs = Json::array();
  for (const auto& a : x.arcs()) arcs.push_back(Json::array({a.lo, a.hi}));
  return Json{{"n", x.n()}, {"arcs", arcs}, {"balls", x.balls()}};
}

inline Configuration configuration_from_json(const Json& j) {
  std::vector<Arc> arcs;
  for (const auto& a : j.at("arcs")) {
    if (!a.is_array() || a.size() != 2) throw std::invalid_argument("arc must be a two-element list");
    arcs.push_back({a[0].get<int>(), a[1].get<int>()});
  }
  return {j.at("n").get<int>(), std::move(arcs), j.at("balls").get<std::vector<int>>()};
}

inline Json to_json(const PairSequence& s) {
  Json out = Json::array();
  for (const auto& p : s.pairs()) out.push_back(Json::array({p.a, p.b}));
  return out;
}

inline Json to_json(const CspReport& r) {
  Json entries = Json::array();
  for (const auto& e : r.entries) {
    Json j{{"element", e.label},
           {"order", e.order},
           {"fixed_count", integer(e.fixed_count)},
           {"polynomial_value", integer(e.polynomial_value)},
           {"closed_value", integer(e.closed_value)}};
    if (e.recurrence_value) j["recurrence_value"] = integer(*e.recurrence_value);
    j["match"] = e.match;
    entries.push_back(std::move(j));
  }
  return Json{{"group", r.group}, {"entries", entries}};
}

inline Json to_json(const FdReport& r) {
  Json entries = Json::array();
  for (const auto& c : r.roots) {
    entries.push_back(Json{{"ell", c.ell},
                           {"order", c.order},
                           {"fd_value", integer(c.fd_value)},
                           {"catalan_value", integer(c.catalan_value)},
                           {"match", c.match}});
  }
  return Json{{"folded_fd", integers(r.folded_fd)},
              {"folded_catalan", integers(r.folded_catalan)},
              {"first_mismatch", r.first_mismatch ? Json(*r.first_mismatch) : Json(nullptr)},
              {"entries", entries}};
}

inline Json to_json(const MultinomialRootReport& r) {
  Json entries = Json::array();
  for (const auto& e : r.entries) {
    entries.push_back(Json{{"parts", Json::array({2 * e.term.k, e.term.x, e.term.y})},
                           {"ell", e.ell},
                           {"algebraic", integer(e.algebraic)},
                           {"closed", integer(e.closed)},
                           {"match", e.match}});
  }
  return Json{{"entries", entries}};
}

inline Json to_json(const StatisticsReport& r) {
  Json entries = Json::array();
  entries.push_back(Json{{"check", "cwt_distribution"}, {"match", r.cwt_matches}});
  entries.push_back(Json{{"check", "maj_distribution"}, {"match", r.maj_matches}});
  entries.push_back(Json{{"check", "maj_equals_cwt"},
                         {"objects", r.configurations},
                         {"failures", r.transport_failures},
                         {"match", r.transport_failures == 0}});
  entries.push_back(Json{{"check", "round_trips"},
                         {"objects", r.configurations + r.paths},
                         {"failures", r.roundtrip_failures},
                         {"match", r.roundtrip_failures == 0}});
  return Json{{"catalan_coefficients", integers(r.catalan_coefficients)},
              {"cwt_distribution", integers(r.cwt_distribution)},
              {"maj_distribution", integers(r.maj_distribution)},
              {"witness", r.witness ? Json(*r.witness) : Json(nullptr)},
              {"entries", entries}};
}

inline Json to_json(const DihedralReport& r) {
  Json entries = Json::array();
  for (const auto& c : r.classes) {
    entries.push_back(Json{{"class", c.label},
                           {"size", c.size},
                           {"representatives_agree", c.representatives_agree},
                           {"permutation_character", integer(c.permutation_character)},
                           {"evaluated_character", integer(c.evaluated_character)},
                           {"shortcut_character", integer(c.shortcut_character)},
                           {"match", c.match}});
  }
  return Json{{"group", "I_2(" + std::to_string(r.n - 1) + ")"}, {"entries", entries}};
}

inline Json to_json(const Lemma42Result& r) {
  return Json{{"n", r.n},
              {"k", r.k},
              {"lhs", polynomial_terms(r.lhs)},
              {"rhs", polynomial_terms(r.rhs)},
              {"match", r.holds}};
}

}  // namespace ncsieve::io
