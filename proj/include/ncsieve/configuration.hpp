#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ncsieve/errors.hpp"
#include "ncsieve/integer.hpp"

namespace ncsieve {

struct Arc {
  int lo;
  int hi;

  friend auto operator<=>(const Arc&, const Arc&) = default;
};

/**
 * A noncrossing (1,2)-configuration of the ground set {1, ..., n-1}: pairwise
 * disjoint arcs and balls, no two arcs interleaved as a < c < b < d.
 *
 * Values are held in canonical form (each arc as (min, max), arcs sorted by
 * first coordinate, balls ascending), so equality is structural. Ordering is
 * by n, then lexicographically by arcs, then by balls.
 */
class Configuration {
 public:
  Configuration() : Configuration(1, {}, {}) {}

  Configuration(int n, std::vector<Arc> arcs, std::vector<int> balls)
      : n_(n), arcs_(std::move(arcs)), balls_(std::move(balls)) {
    if (n < 1) throw std::invalid_argument("configuration needs n >= 1");
    for (auto& a : arcs_) {
      if (a.lo > a.hi) std::swap(a.lo, a.hi);
    }
    std::sort(arcs_.begin(), arcs_.end());
    std::sort(balls_.begin(), balls_.end());
    validate();
  }

  // Inverse of mates(): entry v-1 is 0 for an empty vertex, v for a ball and
  // the other endpoint for an arc.
  static Configuration from_mates(int n, std::span<const int> mates) {
    if (n < 1 || mates.size() != static_cast<std::size_t>(n - 1)) {
      throw std::invalid_argument("mate array length must be n-1");
    }
    std::vector<Arc> arcs;
    std::vector<int> balls;
    for (int v = 1; v < n; ++v) {
      const int w = mates[static_cast<std::size_t>(v - 1)];
      if (w == v) {
        balls.push_back(v);
      } else if (w != 0) {
        if (w < 1 || w >= n || mates[static_cast<std::size_t>(w - 1)] != v) {
          throw std::invalid_argument("mate array is not an involution");
        }
        if (v < w) arcs.push_back({v, w});
      }
    }
    return {n, std::move(arcs), std::move(balls)};
  }

  int n() const { return n_; }
  int ground_size() const { return n_ - 1; }
  const std::vector<Arc>& arcs() const { return arcs_; }
  const std::vector<int>& balls() const { return balls_; }
  bool empty() const { return arcs_.empty() && balls_.empty(); }

  std::vector<int> mates() const {
    std::vector<int> m(static_cast<std::size_t>(n_ - 1), 0);
    for (const auto& a : arcs_) {
      m[static_cast<std::size_t>(a.lo - 1)] = a.hi;
      m[static_cast<std::size_t>(a.hi - 1)] = a.lo;
    }
    for (int b : balls_) m[static_cast<std::size_t>(b - 1)] = b;
    return m;
  }

  friend bool operator==(const Configuration&, const Configuration&) = default;
  friend auto operator<=>(const Configuration& a, const Configuration& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    if (auto c = a.arcs_ <=> b.arcs_; c != 0) return c;
    return a.balls_ <=> b.balls_;
  }

 private:
  void validate() const {
    std::vector<char> used(static_cast<std::size_t>(n_), 0);
    auto claim = [&](int v) {
      if (v < 1 || v >= n_) {
        throw std::invalid_argument("vertex " + std::to_string(v) + " outside {1..n-1}");
      }
      if (used[static_cast<std::size_t>(v)]) {
        throw std::invalid_argument("vertex " + std::to_string(v) + " used twice");
      }
      used[static_cast<std::size_t>(v)] = 1;
    };
    for (const auto& a : arcs_) {
      if (a.lo == a.hi) throw std::invalid_argument("arc with equal endpoints");
      claim(a.lo);
      claim(a.hi);
    }
    for (int b : balls_) claim(b);
    // arcs are sorted by lo, so a crossing is a later arc starting inside an
    // earlier one and ending outside it
    for (std::size_t i = 0; i < arcs_.size(); ++i) {
      for (std::size_t j = i + 1; j < arcs_.size(); ++j) {
        if (arcs_[j].lo < arcs_[i].hi && arcs_[i].hi < arcs_[j].hi) {
          throw std::invalid_argument("crossing arcs");
        }
      }
    }
  }

  int n_;
  std::vector<Arc> arcs_;
  std::vector<int> balls_;
};

// Set notation with blocks ordered by their smallest element,
// e.g. {{1,3},{4,6},{5},{7}}.
inline std::ostream& operator<<(std::ostream& os, const Configuration& x) {
  std::vector<std::pair<int, int>> blocks;
  for (const auto& a : x.arcs()) blocks.emplace_back(a.lo, a.hi);
  for (int b : x.balls()) blocks.emplace_back(b, 0);
  std::sort(blocks.begin(), blocks.end());
  os << "{";
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (i) os << ",";
    os << "{" << blocks[i].first;
    if (blocks[i].second) os << "," << blocks[i].second;
    os << "}";
  }
  return os << "}";
}

/**
 * Element s^reflect r^shift of the dihedral group I_2(N) acting on {1..N},
 * N = n - 1. r is i -> i+1 (N -> 1), s is the flip i -> n - i. The point map
 * applies the flip first, then the rotation.
 */
struct DihedralElement {
  int modulus = 1;
  bool reflect = false;
  int shift = 0;

  static DihedralElement identity(int modulus) { return make(modulus, false, 0); }
  static DihedralElement rotation(int modulus, long k) { return make(modulus, false, k); }
  static DihedralElement reflection(int modulus, long k = 0) { return make(modulus, true, k); }

  static DihedralElement make(int modulus, bool reflect, long shift) {
    if (modulus < 1) throw std::invalid_argument("dihedral modulus must be positive");
    return {modulus, reflect, static_cast<int>(mod_floor(shift, modulus))};
  }

  // All 2N elements: rotations r^0..r^{N-1}, then reflections.
  static std::vector<DihedralElement> all(int modulus) {
    std::vector<DihedralElement> out;
    for (int f = 0; f < 2; ++f) {
      for (int k = 0; k < modulus; ++k) out.push_back(make(modulus, f == 1, k));
    }
    return out;
  }

  int operator()(int i) const {
    const int j = i - 1;
    const int flipped = reflect ? modulus - 1 - j : j;
    return (flipped + shift) % modulus + 1;
  }

  bool is_identity() const { return !reflect && shift == 0; }

  DihedralElement inverse() const {
    return reflect ? *this : make(modulus, false, -shift);
  }

  // (g * h)(i) == g(h(i))
  friend DihedralElement operator*(const DihedralElement& g, const DihedralElement& h) {
    if (g.modulus != h.modulus) throw IncompatibleGroup("composing elements of different dihedral groups");
    const long shift = g.reflect ? g.shift - h.shift : g.shift + h.shift;
    return make(g.modulus, g.reflect != h.reflect, shift);
  }

  friend bool operator==(const DihedralElement&, const DihedralElement&) = default;
};

inline std::ostream& operator<<(std::ostream& os, const DihedralElement& g) {
  if (g.is_identity()) return os << "e";
  if (g.reflect) os << "s";
  if (g.shift) os << "r^" << g.shift;
  return os;
}

inline Configuration apply(const DihedralElement& g, const Configuration& x) {
  if (g.modulus != x.ground_size()) {
    throw IncompatibleGroup("group acts on {1.." + std::to_string(g.modulus) +
                            "} but configuration lives on {1.." +
                            std::to_string(x.ground_size()) + "}");
  }
  std::vector<Arc> arcs;
  arcs.reserve(x.arcs().size());
  for (const auto& a : x.arcs()) arcs.push_back({g(a.lo), g(a.hi)});
  std::vector<int> balls;
  balls.reserve(x.balls().size());
  for (int b : x.balls()) balls.push_back(g(b));
  return {x.n(), std::move(arcs), std::move(balls)};
}

// sum of arc endpoints plus twice the sum of balls
inline long cwt(const Configuration& x) {
  long w = 0;
  for (const auto& a : x.arcs()) w += a.lo + a.hi;
  for (int b : x.balls()) w += 2L * b;
  return w;
}

namespace detail {

// Left-to-right generation over vertices 1..N with a stack of open arcs.
// Every vertex is empty, a ball, opens an arc, or closes the innermost open
// arc; closing only the innermost arc is exactly the noncrossing condition.
template <class Visitor>
class MateGenerator {
 public:
  MateGenerator(int ground, Visitor& visit)
      : ground_(ground), mates_(static_cast<std::size_t>(ground), 0), visit_(visit) {}

  void run() { step(1); }

 private:
  void step(int v) {
    if (v > ground_) {
      if (open_.empty()) visit_(std::span<const int>(mates_));
      return;
    }
    const int remaining = ground_ - v + 1;
    if (static_cast<int>(open_.size()) > remaining) return;
    int& slot = mates_[static_cast<std::size_t>(v - 1)];

    slot = 0;
    step(v + 1);

    slot = v;
    step(v + 1);

    if (!open_.empty()) {
      const int u = open_.back();
      open_.pop_back();
      slot = u;
      mates_[static_cast<std::size_t>(u - 1)] = v;
      step(v + 1);
      mates_[static_cast<std::size_t>(u - 1)] = -1;
      open_.push_back(u);
    }

    // placeholder; fixed up when the arc closes
    slot = -1;
    open_.push_back(v);
    step(v + 1);
    open_.pop_back();
    slot = 0;
  }

  int ground_;
  std::vector<int> mates_;
  std::vector<int> open_;
  Visitor& visit_;
};

}  // namespace detail

// Calls visit(std::span<const int> mates) once per element of X_n, in
// generation order (not canonical order). The span is only valid during the call.
template <class Visitor>
void for_each_mates(int n, Visitor&& visit) {
  if (n < 1) throw std::invalid_argument("enumeration needs n >= 1");
  detail::MateGenerator<std::remove_reference_t<Visitor>> gen(n - 1, visit);
  gen.run();
}

// All of X_n, sorted in canonical order.
inline std::vector<Configuration> enumerate_configurations(int n) {
  std::vector<Configuration> out;
  out.reserve(catalan(n).get_ui());
  for_each_mates(n, [&](std::span<const int> m) { out.push_back(Configuration::from_mates(n, m)); });
  std::sort(out.begin(), out.end());
  return out;
}

namespace detail {

inline bool mates_fixed_by(std::span<const int> mates, std::span<const int> point_map) {
  // point_map[0] == 0 so empty vertices map to empty
  for (std::size_t v = 1; v < point_map.size(); ++v) {
    const int image = point_map[v];
    if (mates[static_cast<std::size_t>(image - 1)] != point_map[static_cast<std::size_t>(mates[v - 1])]) {
      return false;
    }
  }
  return true;
}

}  // namespace detail

/**
 * Fixed-point counts of several group elements in one pass over X_n. A
 * configuration is fixed by g iff its mate array commutes with the point map
 * of g, which is the same as apply(g, x) == x in canonical form.
 */
inline std::vector<std::uint64_t> fixed_point_counts(int n, std::span<const DihedralElement> elements) {
  if (n < 2) throw std::invalid_argument("fixed point counting needs n >= 2");
  std::vector<std::vector<int>> maps;
  for (const auto& g : elements) {
    if (g.modulus != n - 1) throw IncompatibleGroup("group element modulus differs from n-1");
    std::vector<int> map(static_cast<std::size_t>(n), 0);
    for (int v = 1; v < n; ++v) map[static_cast<std::size_t>(v)] = g(v);
    maps.push_back(std::move(map));
  }
  std::vector<std::uint64_t> counts(elements.size(), 0);
  for_each_mates(n, [&](std::span<const int> mates) {
    for (std::size_t i = 0; i < maps.size(); ++i) {
      if (detail::mates_fixed_by(mates, maps[i])) ++counts[i];
    }
  });
  return counts;
}

inline std::uint64_t fixed_point_count(int n, const DihedralElement& g) {
  return fixed_point_counts(n, std::span<const DihedralElement>(&g, 1)).front();
}

inline std::map<long, std::uint64_t> cwt_histogram(int n) {
  std::map<long, std::uint64_t> hist;
  for_each_mates(n, [&](std::span<const int> mates) {
    long w = 0;
    for (std::size_t i = 0; i < mates.size(); ++i) {
      const int v = static_cast<int>(i) + 1;
      if (mates[i] != 0) w += v;
      if (mates[i] == v) w += v;
    }
    ++hist[w];
  });
  return hist;
}

}  // namespace ncsieve
