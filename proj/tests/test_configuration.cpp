#include <gtest/gtest.h>

#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "ncsieve/configuration.hpp"
#include "oracles.hpp"

using namespace ncsieve;

namespace {

Configuration running_example() { return {8, {{1, 3}, {4, 6}}, {5, 7}}; }

std::string show(const Configuration& x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

}  // namespace

TEST(Configuration, CanonicalFormAndPrinting) {
  const Configuration x(8, {{6, 4}, {1, 3}}, {7, 5});
  EXPECT_EQ(x, running_example());
  EXPECT_EQ(show(x), "{{1,3},{4,6},{5},{7}}");
  EXPECT_EQ(show(Configuration(3, {}, {})), "{}");
}

TEST(Configuration, ValidationErrors) {
  EXPECT_THROW(Configuration(4, {{1, 3}, {2, 4}}, {}), std::invalid_argument);  // out of range
  EXPECT_THROW(Configuration(5, {{1, 3}, {2, 4}}, {}), std::invalid_argument);  // crossing
  EXPECT_THROW(Configuration(5, {{1, 3}}, {3}), std::invalid_argument);         // shared vertex
  EXPECT_THROW(Configuration(5, {{2, 2}}, {}), std::invalid_argument);          // degenerate arc
  EXPECT_THROW(Configuration(5, {}, {0}), std::invalid_argument);
  EXPECT_THROW(Configuration(0, {}, {}), std::invalid_argument);
}

TEST(Configuration, MatesRoundTrip) {
  const auto x = running_example();
  const auto m = x.mates();
  EXPECT_EQ(m, (std::vector<int>{3, 0, 1, 6, 5, 4, 7}));
  EXPECT_EQ(Configuration::from_mates(8, m), x);
}

TEST(Configuration, EnumerationExamples) {
  const auto x1 = enumerate_configurations(1);
  ASSERT_EQ(x1.size(), 1u);
  EXPECT_TRUE(x1.front().empty());

  std::set<std::string> x3;
  for (const auto& x : enumerate_configurations(3)) x3.insert(show(x));
  EXPECT_EQ(x3, (std::set<std::string>{"{}", "{{1}}", "{{2}}", "{{1},{2}}", "{{1,2}}"}));
  EXPECT_EQ(enumerate_configurations(4).size(), 14u);
}

TEST(Configuration, EnumerationMatchesBruteForce) {
  for (int n = 1; n <= 9; ++n) {
    std::set<std::vector<int>> produced;
    for (const auto& x : enumerate_configurations(n)) produced.insert(x.mates());
    EXPECT_EQ(produced, oracle::noncrossing_families(n)) << n;
  }
}

TEST(Configuration, CardinalityIsCatalan) {
  for (int n = 1; n <= 12; ++n) {
    std::uint64_t count = 0;
    for_each_mates(n, [&](std::span<const int>) { ++count; });
    EXPECT_EQ(Integer(count), binomial(2 * n, n) / (n + 1)) << n;
  }
}

TEST(Configuration, EnumerationIsSortedAndDistinct) {
  const auto xs = enumerate_configurations(8);
  EXPECT_TRUE(std::is_sorted(xs.begin(), xs.end()));
  EXPECT_EQ(std::adjacent_find(xs.begin(), xs.end()), xs.end());
}

TEST(Configuration, Cwt) {
  EXPECT_EQ(cwt(running_example()), 38);
  EXPECT_EQ(cwt(Configuration(5, {}, {})), 0);
  EXPECT_EQ(cwt(Configuration(3, {{1, 2}}, {})), 3);
}

TEST(Configuration, CwtHistogramExamples) {
  EXPECT_EQ(cwt_histogram(1), (std::map<long, std::uint64_t>{{0, 1}}));
  EXPECT_EQ(cwt_histogram(2), (std::map<long, std::uint64_t>{{0, 1}, {2, 1}}));
  EXPECT_EQ(cwt_histogram(3), (std::map<long, std::uint64_t>{{0, 1}, {2, 1}, {3, 1}, {4, 1}, {6, 1}}));
}

TEST(DihedralAction, RotationAndFlipOfExample) {
  const auto x = running_example();
  const auto r = DihedralElement::rotation(7, 1);
  const auto tau = DihedralElement::reflection(7);
  EXPECT_EQ(show(apply(r, x)), "{{1},{2,4},{5,7},{6}}");
  EXPECT_EQ(show(apply(tau, x)), "{{1},{2,4},{3},{5,7}}");
  EXPECT_EQ(apply(DihedralElement::identity(7), x), x);
}

TEST(DihedralAction, PointMaps) {
  const auto r = DihedralElement::rotation(7, 1);
  const auto tau = DihedralElement::reflection(7);
  for (int i = 1; i <= 7; ++i) {
    EXPECT_EQ(r(i), i == 7 ? 1 : i + 1);
    EXPECT_EQ(tau(i), 8 - i);
  }
}

TEST(DihedralAction, ModulusMismatchRejected) {
  EXPECT_THROW(apply(DihedralElement::rotation(5, 1), running_example()), IncompatibleGroup);
  EXPECT_THROW(DihedralElement::rotation(5, 1) * DihedralElement::rotation(6, 1), IncompatibleGroup);
}

TEST(DihedralAction, GroupLaws) {
  for (int mod = 1; mod <= 9; ++mod) {
    const auto all = DihedralElement::all(mod);
    EXPECT_EQ(all.size(), static_cast<std::size_t>(2 * mod));
    for (const auto& g : all) {
      EXPECT_TRUE((g * g.inverse()).is_identity());
      for (const auto& h : all) {
        const auto gh = g * h;
        for (int i = 1; i <= mod; ++i) EXPECT_EQ(gh(i), g(h(i)));
      }
    }
  }
}

TEST(DihedralAction, ActionLawsOnConfigurations) {
  for (int n = 2; n <= 8; ++n) {
    const auto xs = enumerate_configurations(n);
    const auto group = DihedralElement::all(n - 1);
    for (const auto& g : group) {
      std::set<Configuration> image;
      for (const auto& x : xs) {
        image.insert(apply(g, x));
      }
      EXPECT_EQ(image.size(), xs.size());  // a bijection of X_n
    }
    for (const auto& g : group) {
      for (const auto& h : group) {
        for (std::size_t i = 0; i < xs.size(); i += 3) {
          EXPECT_EQ(apply(g * h, xs[i]), apply(g, apply(h, xs[i])));
        }
      }
    }
  }
}

TEST(DihedralAction, FixedCountExamples) {
  EXPECT_EQ(fixed_point_count(4, DihedralElement::rotation(3, 1)), 2u);
  EXPECT_EQ(fixed_point_count(4, DihedralElement::reflection(3)), 6u);
  for (int n = 2; n <= 10; ++n) {
    EXPECT_EQ(Integer(fixed_point_count(n, DihedralElement::identity(n - 1))), catalan(n));
  }
}

TEST(DihedralAction, FastFixedCountsMatchApplyAndCompare) {
  for (int n = 2; n <= 9; ++n) {
    const auto xs = enumerate_configurations(n);
    const auto group = DihedralElement::all(n - 1);
    const auto fast = fixed_point_counts(n, group);
    for (std::size_t i = 0; i < group.size(); ++i) {
      std::uint64_t slow = 0;
      for (const auto& x : xs) slow += apply(group[i], x) == x;
      EXPECT_EQ(fast[i], slow) << n << ' ' << group[i];
    }
  }
}

TEST(DihedralAction, RotationFixedCountsDependOnGcdOnly) {
  for (int n = 2; n <= 10; ++n) {
    const int mod = n - 1;
    for (int d = 0; d < mod; ++d) {
      EXPECT_EQ(fixed_point_count(n, DihedralElement::rotation(mod, d)),
                fixed_point_count(n, DihedralElement::rotation(mod, std::gcd(mod, d))));
    }
  }
}

TEST(DihedralAction, BurnsideCountsOrbits) {
  for (int n = 2; n <= 10; ++n) {
    const auto xs = enumerate_configurations(n);
    const auto group = DihedralElement::all(n - 1);
    std::set<Configuration> seen;
    std::uint64_t orbits = 0;
    for (const auto& x : xs) {
      if (seen.contains(x)) continue;
      ++orbits;
      for (const auto& g : group) seen.insert(apply(g, x));
    }
    std::uint64_t total = 0;
    for (auto c : fixed_point_counts(n, group)) total += c;
    EXPECT_EQ(total, orbits * group.size()) << n;
  }
}

TEST(DihedralAction, ConjugatesHaveEqualFixedCounts) {
  for (int n = 2; n <= 9; ++n) {
    const auto group = DihedralElement::all(n - 1);
    const auto counts = fixed_point_counts(n, group);
    for (std::size_t i = 0; i < group.size(); ++i) {
      for (const auto& h : group) {
        const auto conj = h * group[i] * h.inverse();
        const auto j = static_cast<std::size_t>(std::find(group.begin(), group.end(), conj) - group.begin());
        EXPECT_EQ(counts[i], counts[j]);
      }
    }
  }
}
