#include <gtest/gtest.h>

#include <random>

#include "kgl/divisors.hpp"
#include "support/errors.hpp"
#include "support/reference.hpp"

using namespace kgl;
using ref::ints;

namespace {

// Two boundary combinations are linearly equivalent iff their difference is an
// integer multiple of the relation vector (n - i on Z_i, -(n - i) on Y_i).
bool reference_equivalent(const LineBundleClass& x, const LineBundleClass& y) {
  const int n = x.n();
  std::optional<Integer> t;
  for (int i = 0; i < n; ++i) {
    for (const Integer diff : {Integer(x.m()[i] - y.m()[i]), Integer(-(x.l()[i] - y.l()[i]))}) {
      if (diff % (n - i) != 0) return false;
      const Integer q = diff / (n - i);
      if (t && *t != q) return false;
      t = q;
    }
  }
  return true;
}

LineBundleClass random_class(int n, std::mt19937_64& rng) {
  return LineBundleClass(n, ref::random_vector(n, -4, 4, rng), ref::random_vector(n, -4, 4, rng));
}

}  // namespace

TEST(DivisorOfMonomial, Zero) { EXPECT_TRUE(divisor_of_monomial(ints({0, 0, 0})).is_zero()); }

TEST(DivisorOfMonomial, LeadingMinor) {
  const DivisorExpr d = divisor_of_monomial(ints({0, 1}));
  EXPECT_EQ(d.zZ, ints({-1, -1}));
  EXPECT_EQ(d.zY, ints({1, 0}));
  EXPECT_EQ(d.zDelta, ints({1}));
}

TEST(DivisorOfMonomial, Determinant) {
  const DivisorExpr d = divisor_of_monomial(ints({1, 1}));
  EXPECT_EQ(d.zZ, ints({-2, -1}));
  EXPECT_EQ(d.zY, ints({2, 1}));
  EXPECT_EQ(d.zDelta, ints({0}));
  EXPECT_TRUE(pic_normal_form(d.zZ, d.zY).is_zero());
}

TEST(DivisorOfMonomial, Linearity) {
  std::mt19937_64 rng(37);
  for (int sample = 0; sample < 200; ++sample) {
    const int n = 1 + sample % 6;
    const IntVec a = ref::random_vector(n, -5, 5, rng), b = ref::random_vector(n, -5, 5, rng);
    IntVec sum(n);
    for (int i = 0; i < n; ++i) sum[i] = a[i] + b[i];
    EXPECT_EQ(divisor_of_monomial(sum), divisor_of_monomial(a) + divisor_of_monomial(b));
  }
}

TEST(DivisorOfMonomial, EveryPrincipalDivisorIsTrivialInPic) {
  std::mt19937_64 rng(41);
  for (int sample = 0; sample < 200; ++sample) {
    const int n = 1 + sample % 6;
    EXPECT_TRUE(pic_class_of(divisor_of_monomial(ref::random_vector(n, -5, 5, rng))).is_zero());
  }
}

TEST(DivisorOfMonomial, ConstantSequenceIsTheRelation) {
  for (int n = 1; n <= 6; ++n) {
    const DivisorExpr d = divisor_of_monomial(IntVec(n, 1));
    IntVec m(n), l(n);
    for (int i = 0; i < n; ++i) {
      m[i] = -(n - i);
      l[i] = n - i;
    }
    EXPECT_EQ(bundle_of(d), LineBundleClass(n, m, l));
    EXPECT_TRUE(pic_normal_form(bundle_of(d)).is_zero());
  }
}

TEST(DivisorOfMonomial, BundleOfRejectsDeltaTerms) {
  EXPECT_EQ(code_of([] { bundle_of(divisor_of_monomial(ints({0, 1}))); }), ErrorCode::InvalidArgument);
}

TEST(NormalForm, TrivialIsZero) {
  for (int n = 1; n <= 5; ++n) EXPECT_TRUE(pic_normal_form(LineBundleClass::trivial(n)).is_zero());
}

TEST(NormalForm, RelationVanishes) {
  for (int n = 1; n <= 6; ++n) {
    const LineBundleClass R = relation_class(n);
    for (int i = 0; i < n; ++i) {
      EXPECT_EQ(R.m()[i], n - i);
      EXPECT_EQ(R.l()[i], -(n - i));
    }
    EXPECT_TRUE(pic_normal_form(R).is_zero());
  }
}

TEST(NormalForm, EliminatesTopY) {
  const PicClass c = pic_normal_form(ref::bundle({0, 0}, {0, 1}));
  EXPECT_EQ(c.z, ints({2, 1}));
  EXPECT_EQ(c.y, ints({-2}));
}

TEST(NormalForm, FreeBasisShapes) {
  const PicClass c = pic_normal_form(ref::bundle({1, 2, 3}, {4, 5, 6}));
  EXPECT_EQ(c.z.size(), 3u);
  EXPECT_EQ(c.y.size(), 2u);
}

TEST(NormalForm, IgnoresTwists) {
  EXPECT_EQ(pic_normal_form(ref::bundle({1, 2}, {3, 4}, 7, -3)), pic_normal_form(ref::bundle({1, 2}, {3, 4})));
}

TEST(PicEqual, Reflexive) {
  const auto L = ref::bundle({3, -1, 2}, {0, 5, -2});
  EXPECT_TRUE(pic_equal(L, L));
}

TEST(PicEqual, DeterminantClasses) {
  for (int n = 1; n <= 6; ++n) {
    IntVec steps(n);
    for (int i = 0; i < n; ++i) steps[i] = n - i;
    EXPECT_TRUE(pic_equal(LineBundleClass(n, steps, IntVec(n, 0), 1, 0), LineBundleClass(n, IntVec(n, 0), steps, 0, 1)));
  }
}

TEST(PicEqual, DistinctBoundaryPoints) {
  EXPECT_FALSE(pic_equal(ref::bundle({1, 0}, {0, 0}), ref::bundle({0, 0}, {1, 0})));
}

TEST(PicEqual, MatchesLatticeCriterion) {
  std::mt19937_64 rng(43);
  std::uniform_int_distribution<long> multiple(-3, 3);
  std::bernoulli_distribution related(0.5);
  for (int sample = 0; sample < 400; ++sample) {
    const int n = 1 + sample % 5;
    const LineBundleClass x = random_class(n, rng);
    LineBundleClass y = random_class(n, rng);
    if (related(rng)) {
      const LineBundleClass R = relation_class(n);
      const long t = multiple(rng);
      IntVec m = x.m(), l = x.l();
      for (int i = 0; i < n; ++i) {
        m[i] += t * R.m()[i];
        l[i] += t * R.l()[i];
      }
      y = LineBundleClass(n, m, l);
    }
    EXPECT_EQ(pic_equal(x, y), reference_equivalent(x, y));
  }
}

TEST(PicEqual, EquivalenceRelation) {
  std::mt19937_64 rng(47);
  for (int sample = 0; sample < 100; ++sample) {
    const int n = 1 + sample % 4;
    std::vector<LineBundleClass> classes;
    for (int k = 0; k < 6; ++k) classes.push_back(random_class(n, rng));
    classes.push_back(classes[0] + relation_class(n));
    classes.push_back(classes[6] + relation_class(n) + relation_class(n));
    for (const auto& x : classes)
      for (const auto& y : classes) {
        EXPECT_EQ(pic_equal(x, y), pic_equal(y, x));
        for (const auto& z : classes)
          if (pic_equal(x, y) && pic_equal(y, z)) EXPECT_TRUE(pic_equal(x, z));
      }
    EXPECT_TRUE(pic_equal(classes[0], classes[7]));
  }
}

TEST(Dualizing, ProjectiveLine) {
  const LineBundleClass w = dualizing_class(1);
  EXPECT_EQ(w.m(), ints({-1}));
  EXPECT_EQ(w.l(), ints({-1}));
}

TEST(Dualizing, RankTwoBlowup) {
  const LineBundleClass w = dualizing_class(2);
  EXPECT_EQ(w.m(), ints({-1, -2}));
  EXPECT_EQ(w.l(), ints({-1, -2}));
  // pullback of O(-5), +3 along the point, +1 along the quadric surface:
  // -5(Z0 + Z1) + 3 Y0 + Z1.
  EXPECT_EQ(pic_normal_form(w), (PicClass{ints({-5, -4}), ints({3})}));
}

TEST(Dualizing, RankThree) {
  const LineBundleClass w = dualizing_class(3);
  EXPECT_EQ(w.m(), ints({-1, -3, -3}));
  EXPECT_EQ(w.l(), ints({-1, -3, -3}));
}

TEST(Delta, StepSequenceIsPrincipal) {
  // (0^{n-i}, 1^i) has Delta_i as its only Delta term.
  for (int n = 2; n <= 5; ++n)
    for (int i = 1; i < n; ++i) {
      IntVec step(n, 0);
      for (int j = n - i; j < n; ++j) step[j] = 1;
      const DivisorExpr d = divisor_of_monomial(step);
      for (int k = 1; k < n; ++k) EXPECT_EQ(d.zDelta[k - 1], k == i ? 1 : 0);
      EXPECT_TRUE(pic_class_of(d).is_zero());
    }
}

TEST(Delta, RankTwoLeadingEntry) {
  // div x_11 = Delta_1 - Z0 - Z1 + Y0, so Delta_1 = Z0 + Z1 - Y0.
  EXPECT_EQ(delta_class(2, 1), (PicClass{ints({1, 1}), ints({-1})}));
  EXPECT_EQ(code_of([] { delta_class(2, 2); }), ErrorCode::InvalidArgument);
}
