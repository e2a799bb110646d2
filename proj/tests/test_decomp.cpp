#include <gtest/gtest.h>

#include <random>

#include "kgl/decomp.hpp"
#include "kgl/oracle.hpp"
#include "kgl/repdim.hpp"
#include "kgl/weights.hpp"
#include "support/errors.hpp"
#include "support/reference.hpp"

using namespace kgl;
using ref::ints;

namespace {

WeightPair pair(std::initializer_list<long> a, std::initializer_list<long> b) { return {ints(a), ints(b)}; }

const LineBundleClass kM11 = ref::bundle({1, 1}, {0, 0});

// Total from the box scan and the pattern-count dimension, without the library.
Integer reference_total(const LineBundleClass& L, const OrbitSpec& spec) {
  Integer total = 0;
  for (const auto& w : ref::brute_force_weights(L, spec))
    total += ref::gt_of_nondecreasing(w.a) * ref::gt_of_nondecreasing(w.b);
  return total;
}

}  // namespace

TEST(Decompose, DegreeTwoForms) {
  EXPECT_EQ(decompose(ref::bundle({2, 2}, {0, 0}), OrbitSpec(2)).total_dim(), 15);
}

TEST(Decompose, TrivialBundleIsConstants) {
  EXPECT_EQ(decompose(LineBundleClass::trivial(2), OrbitSpec(2)).total_dim(), 1);
  EXPECT_EQ(decompose(LineBundleClass::trivial(4), OrbitSpec(4, {2}, {3})).total_dim(), 1);
}

TEST(Decompose, RankOne) { EXPECT_EQ(decompose(ref::bundle({2}, {1}), OrbitSpec(1)).total_dim(), 4); }

TEST(Decompose, SingletonOnOrbitOneOne) {
  const Decomposition d = decompose(kM11, OrbitSpec(2, {1}, {1}));
  ASSERT_EQ(d.entries().size(), 1u);
  EXPECT_EQ(d.entries()[0].weight, pair({0, 1}, {-1, 0}));
  EXPECT_EQ(d.entries()[0].dim, 4);
  EXPECT_EQ(d.total_dim(), 4);
}

TEST(Decompose, EmptySetGivesZeroNotError) {
  const Decomposition d = decompose(ref::bundle({-1, -1}, {0, 0}), OrbitSpec(2));
  EXPECT_TRUE(d.empty());
  EXPECT_EQ(d.total_dim(), 0);
}

TEST(Decompose, MatchesReferenceTotals) {
  std::mt19937_64 rng(19);
  for (int sample = 0; sample < 120; ++sample) {
    const int n = 1 + sample % 3;
    const LineBundleClass L(n, ref::random_vector(n, -2, 3, rng), ref::random_vector(n, -2, 3, rng));
    const OrbitSpec spec = ref::random_valid_orbit(n, rng);
    EXPECT_EQ(decompose(L, spec).total_dim(), reference_total(L, spec));
  }
}

TEST(Decompose, RankOneClosedForm) {
  for (long m0 = -5; m0 <= 5; ++m0)
    for (long l0 = -5; l0 <= 5; ++l0)
      EXPECT_EQ(decompose(ref::bundle({m0}, {l0}), OrbitSpec(1)).total_dim(), std::max(0L, m0 + l0 + 1));
}

TEST(Decompose, WeightsPairwiseDistinct) {
  const Decomposition d = decompose(ref::bundle({3, 2, 4}, {1, 3, 2}), OrbitSpec(3));
  for (std::size_t i = 0; i < d.entries().size(); ++i)
    for (std::size_t j = i + 1; j < d.entries().size(); ++j) EXPECT_FALSE(d.entries()[i].weight == d.entries()[j].weight);
}

TEST(Decompose, ClosedOrbitConsistency) {
  std::mt19937_64 rng(23);
  for (int sample = 0; sample < 200; ++sample) {
    const int n = 1 + sample % 4;
    const LineBundleClass L(n, ref::random_vector(n, -3, 3, rng), ref::random_vector(n, -3, 3, rng));
    for (int r = 0; r <= n; ++r) {
      const WeightPair w = closed_orbit_weight(L, r, n - r);
      const Integer expected = is_nondecreasing(w.a) ? dim_pair(w) : Integer(0);
      EXPECT_EQ(decompose(L, OrbitSpec::closed(n, r, n - r)).total_dim(), expected);
    }
  }
}

TEST(Restriction, OrbitOneOne) {
  const RestrictionReport report = restriction_report(kM11, OrbitSpec(2, {1}, {1}));
  EXPECT_EQ(report.common, std::vector<WeightPair>{pair({0, 1}, {-1, 0})});
  EXPECT_EQ(report.kernel_dim, 1);
  EXPECT_EQ(report.image_dim, 4);
  EXPECT_EQ(report.ambient_extra_dim, 0);
}

TEST(Restriction, TrivialBundleRestrictsIsomorphically) {
  for (const auto& spec : {OrbitSpec(3), OrbitSpec(3, {1}, {2}), OrbitSpec::closed(3, 2, 1)}) {
    const RestrictionReport report = restriction_report(LineBundleClass::trivial(3), spec);
    EXPECT_EQ(report.common, std::vector<WeightPair>{pair({0, 0, 0}, {0, 0, 0})});
    EXPECT_EQ(report.kernel_dim, 0);
  }
}

TEST(Restriction, RankOneOnY0) {
  const RestrictionReport report = restriction_report(ref::bundle({1}, {0}), OrbitSpec(1, {}, {0}));
  EXPECT_EQ(report.common, std::vector<WeightPair>{pair({0}, {0})});
  EXPECT_EQ(report.kernel_dim, 1);
  EXPECT_EQ(report.image_dim, 1);
  EXPECT_EQ(report.ambient_extra_dim, 0);
}

TEST(Restriction, DimensionAccounting) {
  std::mt19937_64 rng(29);
  for (int sample = 0; sample < 200; ++sample) {
    const int n = 1 + sample % 4;
    const LineBundleClass L(n, ref::random_vector(n, -2, 3, rng), ref::random_vector(n, -2, 3, rng));
    const OrbitSpec spec = ref::random_valid_orbit(n, rng);
    const RestrictionReport report = restriction_report(L, spec);
    EXPECT_EQ(report.kernel_dim + report.image_dim, decompose(L, OrbitSpec(n)).total_dim());
    EXPECT_EQ(report.image_dim + report.ambient_extra_dim, decompose(L, spec).total_dim());
    const auto ambient = enumerate_weights(L, OrbitSpec(n));
    const auto orbit = enumerate_weights(L, spec);
    EXPECT_TRUE(std::includes(ambient.begin(), ambient.end(), report.common.begin(), report.common.end()));
    EXPECT_TRUE(std::includes(orbit.begin(), orbit.end(), report.common.begin(), report.common.end()));
  }
}

TEST(Inclusion, EqualitiesPinTheSingleton) {
  const InclusionReport report = inclusion_report(kM11, ref::bundle({2, 1}, {0, 0}), OrbitSpec(2, {1}, {1}));
  EXPECT_TRUE(report.subset_ok);
  EXPECT_TRUE(report.new_weights.empty());
  EXPECT_EQ(report.dim_increase, 0);
}

TEST(Inclusion, Identity) {
  const LineBundleClass L = ref::bundle({2, 3, 1}, {0, 1, 1});
  const InclusionReport report = inclusion_report(L, L, OrbitSpec(3, {2}, {1}));
  EXPECT_TRUE(report.subset_ok);
  EXPECT_TRUE(report.new_weights.empty());
  EXPECT_EQ(report.dim_increase, 0);
}

TEST(Inclusion, FromTrivial) {
  const InclusionReport report = inclusion_report(LineBundleClass::trivial(2), kM11, OrbitSpec(2));
  EXPECT_TRUE(report.subset_ok);
  EXPECT_EQ(report.new_weights, std::vector<WeightPair>{pair({0, 1}, {-1, 0})});
  EXPECT_EQ(report.dim_increase, 4);
}

TEST(Inclusion, HypothesisViolations) {
  // m' > m
  EXPECT_EQ(code_of([] { inclusion_report(kM11, LineBundleClass::trivial(2), OrbitSpec(2)); }),
            ErrorCode::InclusionHypothesisViolated);
  // strict drop on an index of I
  EXPECT_EQ(code_of([] { inclusion_report(ref::bundle({1, 0}, {0, 0}), kM11, OrbitSpec(2, {1}, {})); }),
            ErrorCode::InclusionHypothesisViolated);
  // different twists
  EXPECT_EQ(code_of([] { inclusion_report(ref::bundle({1, 1}, {0, 0}, 1), kM11, OrbitSpec(2)); }),
            ErrorCode::InclusionHypothesisViolated);
}

TEST(Inclusion, MonotoneTotals) {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<int> drop(0, 2);
  for (int sample = 0; sample < 200; ++sample) {
    const int n = 1 + sample % 4;
    const LineBundleClass L(n, ref::random_vector(n, -2, 3, rng), ref::random_vector(n, -2, 3, rng));
    const OrbitSpec spec = ref::random_valid_orbit(n, rng);
    IntVec m = L.m(), l = L.l();
    for (int i = 0; i < n; ++i) {
      if (!spec.I().contains(i)) m[i] -= drop(rng);
      if (!spec.J().contains(i)) l[i] -= drop(rng);
    }
    const LineBundleClass Lp(n, m, l);
    const InclusionReport report = inclusion_report(Lp, L, spec);
    EXPECT_TRUE(report.subset_ok);
    const Integer small = decompose(Lp, spec).total_dim(), large = decompose(L, spec).total_dim();
    EXPECT_LE(small, large);
    EXPECT_EQ(small + report.dim_increase, large);
  }
}

TEST(Decompose, AgreesWithBlowupOracleOnGrid) {
  ref::for_each_in_box(4, -2, 3, [](const std::vector<long>& v) {
    ASSERT_EQ(decompose(ref::bundle({v[0], v[1]}, {v[2], v[3]}), OrbitSpec(2)).total_dim(),
              oracle_dim_n2(v[0], v[1], v[2], v[3]))
        << v[0] << "," << v[1] << "," << v[2] << "," << v[3];
  });
}
