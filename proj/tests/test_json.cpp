#include <gtest/gtest.h>

#include "kgl/decomp.hpp"
#include "kgl/divisors.hpp"
#include "kgl/json_io.hpp"
#include "support/errors.hpp"
#include "support/reference.hpp"

using namespace kgl;

TEST(Json, IntegersSmallAndHuge) {
  EXPECT_EQ(integer_to_json(Integer(-42)).dump(), "-42");
  const Integer huge("340282366920938463463374607431768211456");
  EXPECT_EQ(integer_to_json(huge).dump(), "\"340282366920938463463374607431768211456\"");
  EXPECT_EQ(integer_from_json(integer_to_json(huge)), huge);
  EXPECT_EQ(integer_from_json(Json(7)), 7);
  EXPECT_EQ(code_of([] { integer_from_json(Json("12x")); }), ErrorCode::InvalidArgument);
  EXPECT_EQ(code_of([] { integer_from_json(Json(1.5)); }), ErrorCode::InvalidArgument);
}

TEST(Json, DecompositionGolden) {
  const Json doc = to_json(decompose(ref::bundle({1, 1}, {0, 0}), OrbitSpec(2)));
  EXPECT_EQ(doc.dump(),
            R"({"weights":[{"a":[0,0],"b":[0,0],"dim":1},{"a":[0,1],"b":[-1,0],"dim":4}],"total":5})");
}

TEST(Json, OrbitSetsAreSorted) {
  EXPECT_EQ(to_json(OrbitSpec(4, {3, 1}, {2})).dump(), R"({"n":4,"I":[1,3],"J":[2]})");
}

TEST(Json, BundleRoundTrip) {
  const LineBundleClass L = ref::bundle({1, -2, 3}, {0, 5, -1}, 2, -7);
  EXPECT_EQ(line_bundle_from_json(to_json(L)), L);
  const OrbitSpec spec(3, {2}, {1, 2});
  EXPECT_EQ(orbit_from_json(to_json(spec)), spec);
  EXPECT_EQ(code_of([] { line_bundle_from_json(Json{{"n", 2}, {"m", {1, 2}}}); }), ErrorCode::InvalidArgument);
}

TEST(Json, DivisorExpression) {
  EXPECT_EQ(to_json(divisor_of_monomial(ref::ints({0, 1}))).dump(), R"({"Z":[-1,-1],"Y":[1,0],"Delta":[1]})");
}

TEST(Json, ConventionsNameBothIndexings) {
  const Json c = conventions_json();
  EXPECT_TRUE(c.contains("boundary_index"));
  EXPECT_TRUE(c.contains("weight_index"));
}

TEST(Json, OutputIsByteStable) {
  const auto render = [] { return to_json(decompose(ref::bundle({2, 3, 1}, {1, 0, 2}), OrbitSpec(3, {2}, {}))).dump(); };
  EXPECT_EQ(render(), render());
}
