#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <iterator>
#include <map>
#include <ostream>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ncsieve/configuration.hpp"
#include "ncsieve/errors.hpp"

namespace ncsieve {

/**
 * Lattice path from (0,0) to (n,n) with unit steps N = (0,1) and E = (1,0)
 * that never goes below the diagonal. Stored as a string over {'N', 'E'}.
 */
class DyckPath {
 public:
  DyckPath(int n, std::string steps) : n_(n), steps_(std::move(steps)) {
    if (n < 0) throw std::invalid_argument("Dyck path needs n >= 0");
    if (steps_.size() != 2 * static_cast<std::size_t>(n)) {
      throw std::invalid_argument("Dyck path of semilength n has 2n steps");
    }
    int height = 0;
    for (char c : steps_) {
      if (c == 'N') ++height;
      else if (c == 'E') --height;
      else throw std::invalid_argument(std::string("invalid step '") + c + "'");
      if (height < 0) throw std::invalid_argument("path dips below the diagonal");
    }
    if (height != 0) throw std::invalid_argument("path does not end at (n,n)");
  }

  // sigma string: 0 for N, 1 for E
  static DyckPath from_bits(std::string_view bits) {
    std::string steps;
    steps.reserve(bits.size());
    for (char c : bits) {
      if (c == '0') steps.push_back('N');
      else if (c == '1') steps.push_back('E');
      else throw std::invalid_argument(std::string("invalid bit '") + c + "'");
    }
    if (steps.size() % 2) throw std::invalid_argument("odd number of steps");
    return {static_cast<int>(steps.size() / 2), std::move(steps)};
  }

  int n() const { return n_; }
  const std::string& steps() const { return steps_; }

  std::string bits() const {
    std::string out = steps_;
    for (char& c : out) c = (c == 'N') ? '0' : '1';
    return out;
  }

  friend bool operator==(const DyckPath&, const DyckPath&) = default;
  friend auto operator<=>(const DyckPath&, const DyckPath&) = default;

 private:
  int n_;
  std::string steps_;
};

inline std::ostream& operator<<(std::ostream& os, const DyckPath& p) { return os << p.steps(); }

struct IndexPair {
  int a;
  int b;

  friend auto operator<=>(const IndexPair&, const IndexPair&) = default;
};

enum class PairKind { NPS, OPS };

/**
 * Pair sequence over [n-1] x [n-1].
 *
 * NPS (noncrossing): first coordinates strictly increasing, the sets {a_i,b_i}
 * pairwise disjoint, no pairs with a_i < a_j < b_i < b_j. These are the
 * configurations again, with a ball {c} written (c,c).
 *
 * OPS (ordered): both coordinates strictly increasing, 1 <= a_i <= b_i <= n-1.
 * These are exactly the corner sets of Dyck paths of semilength n. Sets
 * {a_i,b_i} of an OPS may share a value across pairs, e.g. (4,5)(5,6).
 */
class PairSequence {
 public:
  PairSequence(int n, PairKind kind, std::vector<IndexPair> pairs)
      : n_(n), kind_(kind), pairs_(std::move(pairs)) {
    validate();
  }

  int n() const { return n_; }
  PairKind kind() const { return kind_; }
  const std::vector<IndexPair>& pairs() const { return pairs_; }
  std::size_t size() const { return pairs_.size(); }

  friend bool operator==(const PairSequence&, const PairSequence&) = default;

 private:
  void validate() const {
    if (n_ < 1) throw std::invalid_argument("pair sequence needs n >= 1");
    for (std::size_t i = 0; i < pairs_.size(); ++i) {
      const auto& p = pairs_[i];
      if (p.a < 1 || p.a > p.b || p.b > n_ - 1) {
        throw std::invalid_argument("pair outside 1 <= a <= b <= n-1");
      }
      if (i > 0 && pairs_[i - 1].a >= p.a) {
        throw std::invalid_argument("first coordinates not strictly increasing");
      }
      if (kind_ == PairKind::OPS && i > 0 && pairs_[i - 1].b >= p.b) {
        throw std::invalid_argument("second coordinates not strictly increasing");
      }
    }
    if (kind_ == PairKind::OPS) return;
    std::vector<char> used(static_cast<std::size_t>(n_), 0);
    auto claim = [&](int v) {
      if (used[static_cast<std::size_t>(v)]) throw std::invalid_argument("pairs share a value");
      used[static_cast<std::size_t>(v)] = 1;
    };
    for (const auto& p : pairs_) {
      claim(p.a);
      if (p.b != p.a) claim(p.b);
    }
    for (std::size_t i = 0; i < pairs_.size(); ++i) {
      for (std::size_t j = i + 1; j < pairs_.size(); ++j) {
        if (pairs_[j].a < pairs_[i].b && pairs_[i].b < pairs_[j].b) {
          throw std::invalid_argument("crossing pairs");
        }
      }
    }
  }

  int n_;
  PairKind kind_;
  std::vector<IndexPair> pairs_;
};

namespace detail {

inline void dyck_rec(int n, int ups, int downs, std::string& cur, std::vector<DyckPath>& out) {
  if (ups == n && downs == n) {
    out.emplace_back(n, cur);
    return;
  }
  if (ups < n) {
    cur.push_back('N');
    dyck_rec(n, ups + 1, downs, cur, out);
    cur.pop_back();
  }
  if (downs < ups) {
    cur.push_back('E');
    dyck_rec(n, ups, downs + 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace detail

// All Dyck paths of semilength n, lexicographic with N < E.
inline std::vector<DyckPath> enumerate_dyck(int n) {
  if (n < 1) throw std::invalid_argument("enumerate_dyck needs n >= 1");
  std::vector<DyckPath> out;
  std::string cur;
  detail::dyck_rec(n, 0, 0, cur, out);
  return out;
}

// Sum of the positions i (1-based) with sigma_i = 1 and sigma_{i+1} = 0.
inline long maj(const DyckPath& p) {
  const auto& s = p.steps();
  long total = 0;
  for (std::size_t i = 0; i + 1 < s.size(); ++i) {
    if (s[i] == 'E' && s[i + 1] == 'N') total += static_cast<long>(i) + 1;
  }
  return total;
}

// Lattice points entered by an E step and left by an N step, in path order.
inline std::vector<IndexPair> corners(const DyckPath& p) {
  std::vector<IndexPair> out;
  const auto& s = p.steps();
  int x = 0;
  int y = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == 'N') {
      ++y;
    } else {
      ++x;
      if (i + 1 < s.size() && s[i + 1] == 'N') out.push_back({x, y});
    }
  }
  return out;
}

inline PairSequence phi1(const Configuration& x) {
  std::vector<IndexPair> pairs;
  for (const auto& a : x.arcs()) pairs.push_back({a.lo, a.hi});
  for (int b : x.balls()) pairs.push_back({b, b});
  std::sort(pairs.begin(), pairs.end());
  return {x.n(), PairKind::NPS, std::move(pairs)};
}

inline Configuration phi1_inverse(const PairSequence& s) {
  if (s.kind() != PairKind::NPS) throw std::invalid_argument("phi1_inverse expects an NPS");
  std::vector<Arc> arcs;
  std::vector<int> balls;
  for (const auto& p : s.pairs()) {
    if (p.a == p.b) balls.push_back(p.a);
    else arcs.push_back({p.a, p.b});
  }
  return {s.n(), std::move(arcs), std::move(balls)};
}

// Keep first coordinates, sort the second coordinates.
inline PairSequence phi(const PairSequence& s) {
  if (s.kind() != PairKind::NPS) throw std::invalid_argument("phi expects an NPS");
  std::vector<int> seconds;
  for (const auto& p : s.pairs()) seconds.push_back(p.b);
  std::sort(seconds.begin(), seconds.end());
  std::vector<IndexPair> out;
  for (std::size_t i = 0; i < s.size(); ++i) out.push_back({s.pairs()[i].a, seconds[i]});
  return {s.n(), PairKind::OPS, std::move(out)};
}

/**
 * Preimage of an OPS under phi by the matching algorithm.
 *
 * Values occurring both as a first and a second coordinate become balls
 * (v,v). The remaining second coordinates are then taken in increasing order
 * and each is matched with the largest unmatched first coordinate below it:
 * that is the largest one overall when b exceeds them all, otherwise the a
 * with a < b < a' for the next unmatched a'.
 */
inline PairSequence phi_inverse(const PairSequence& s) {
  if (s.kind() != PairKind::OPS) throw std::invalid_argument("phi_inverse expects an OPS");
  std::set<int> firsts;
  std::set<int> seconds;
  for (const auto& p : s.pairs()) {
    firsts.insert(p.a);
    seconds.insert(p.b);
  }
  std::vector<IndexPair> out;
  std::vector<int> lone_b;
  for (int b : seconds) {
    if (firsts.erase(b)) out.push_back({b, b});
    else lone_b.push_back(b);
  }
  for (int b : lone_b) {
    auto it = firsts.lower_bound(b);
    if (it == firsts.begin()) {
      throw InternalError("phi_inverse: no unmatched first coordinate below " + std::to_string(b));
    }
    --it;
    out.push_back({*it, b});
    firsts.erase(it);
  }
  std::sort(out.begin(), out.end());
  return {s.n(), PairKind::NPS, std::move(out)};
}

// The unique Dyck path of semilength n whose corner set is the given OPS.
inline DyckPath path_from_corners(const PairSequence& ops) {
  if (ops.kind() != PairKind::OPS) throw std::invalid_argument("path_from_corners expects an OPS");
  const int n = ops.n();
  std::string steps;
  int x = 0;
  int y = 0;
  for (const auto& c : ops.pairs()) {
    steps.append(static_cast<std::size_t>(c.b - y), 'N');
    steps.append(static_cast<std::size_t>(c.a - x), 'E');
    x = c.a;
    y = c.b;
  }
  steps.append(static_cast<std::size_t>(n - y), 'N');
  steps.append(static_cast<std::size_t>(n - x), 'E');
  return {n, std::move(steps)};
}

inline PairSequence corner_sequence(const DyckPath& p) {
  return {p.n(), PairKind::OPS, corners(p)};
}

inline DyckPath to_dyck(const Configuration& x) { return path_from_corners(phi(phi1(x))); }

inline Configuration from_dyck(const DyckPath& p) {
  if (p.n() < 1) throw std::invalid_argument("from_dyck needs n >= 1");
  return phi1_inverse(phi_inverse(corner_sequence(p)));
}

inline std::map<long, std::uint64_t> maj_histogram(int n) {
  std::map<long, std::uint64_t> hist;
  for (const auto& p : enumerate_dyck(n)) ++hist[maj(p)];
  return hist;
}

}  // namespace ncsieve
