#include <gtest/gtest.h>

#include "kgl/linalg.hpp"
#include "support/errors.hpp"

using namespace kgl;

namespace {

SparseVector vec(std::initializer_list<std::pair<const std::size_t, Integer>> entries) { return SparseVector(entries); }

}  // namespace

TEST(Normalize, DividesContentAndFixesSign) {
  SparseVector v = vec({{2, -6}, {5, 9}});
  normalize(v);
  EXPECT_EQ(v, vec({{2, 2}, {5, -3}}));
}

TEST(Echelon, RankAndMembership) {
  IntegerEchelon e;
  EXPECT_TRUE(e.insert(vec({{0, 2}, {1, 4}})));
  EXPECT_TRUE(e.insert(vec({{1, 3}, {2, 1}})));
  EXPECT_FALSE(e.insert(vec({{0, 1}, {1, 5}, {2, 1}})));  // (1,2,0) + (0,3,1)
  EXPECT_FALSE(e.insert(SparseVector{}));
  EXPECT_EQ(e.rank(), 2u);
  EXPECT_TRUE(e.reduce(vec({{0, -3}, {1, -6}})).empty());
  EXPECT_FALSE(e.reduce(vec({{2, 1}})).empty());
}

TEST(Echelon, StandardBasisSpansEverything) {
  IntegerEchelon basis;
  for (std::size_t i = 0; i < 10; ++i) EXPECT_TRUE(basis.insert(vec({{i, 1}})));
  EXPECT_FALSE(basis.insert(vec({{3, 7}, {8, -2}})));
}

TEST(Echelon, DependentOverQButNotScaled) {
  // Entries with large common factors stay exact.
  IntegerEchelon e;
  const Integer big("1000000000000000000000");
  EXPECT_TRUE(e.insert(vec({{0, big}, {1, big * 3}})));
  EXPECT_FALSE(e.insert(vec({{0, 7}, {1, 21}})));
}

TEST(MonomialSpace, SizeIsBinomial) {
  EXPECT_EQ(MonomialSpace(5, 0).size(), 1u);
  EXPECT_EQ(MonomialSpace(5, 1).size(), 5u);
  EXPECT_EQ(MonomialSpace(5, 2).size(), 15u);
  EXPECT_EQ(MonomialSpace(5, 4).size(), 70u);
  EXPECT_EQ(MonomialSpace(2, 7).size(), 8u);
}

TEST(MonomialSpace, IndexRoundTrip) {
  const MonomialSpace space(4, 3);
  for (std::size_t i = 0; i < space.size(); ++i) EXPECT_EQ(space.index(space.exponent(i)), i);
  EXPECT_EQ(space.exponent(0), (Exponent{3, 0, 0, 0}));
  EXPECT_EQ(code_of([&] { space.index(Exponent{1, 1, 0, 0}); }), ErrorCode::InvalidArgument);
}

TEST(Polynomial, ProductAndPower) {
  const Polynomial x = Polynomial::monomial({1, 0});
  const Polynomial y = Polynomial::monomial({0, 1});
  const Polynomial square = (x + y).pow(2);
  EXPECT_EQ(square.terms().size(), 3u);
  EXPECT_EQ(square.terms().at({1, 1}), 2);
  const Polynomial difference = x + Polynomial::monomial({0, 1}, -1);
  EXPECT_TRUE((difference * Polynomial::monomial({0, 0}, 0)).terms().empty());
  EXPECT_EQ((x + y).pow(0).terms().at({0, 0}), 1);
}

TEST(Polynomial, CancellationRemovesTerms) {
  const Polynomial x = Polynomial::monomial({1});
  EXPECT_TRUE((x + Polynomial::monomial({1}, -1)).terms().empty());
}

TEST(Polynomial, Coordinates) {
  const MonomialSpace space(2, 2);
  const Polynomial p = Polynomial::monomial({2, 0}, 3) + Polynomial::monomial({0, 2}, -1);
  const SparseVector v = p.coordinates(space, 10);
  EXPECT_EQ(v, vec({{10, 3}, {12, -1}}));
}
