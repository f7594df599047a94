#include <random>
#include <stdexcept>
#include <vector>

#include <doctest.h>

#include "cables/ints.hpp"
#include "cables/slope.hpp"
#include "sb_oracle.hpp"

using cables::apply_unimodular;
using cables::CableSpec;
using cables::circle_less;
using cables::Int;
using cables::intersection_number;
using cables::Slope;
using cables::tb_to_dividing_slope;
using cables::UnimodularMap;

TEST_CASE("slopes normalize to lowest terms with nonnegative denominator") {
  CHECK(Slope(2, 4) == Slope(1, 2));
  CHECK(Slope(-6, 9) == Slope(-2, 3));
  CHECK(Slope(1, -2) == Slope(-1, 2));
  CHECK(Slope(-1, -2) == Slope(1, 2));
  CHECK(Slope(0, -5) == Slope(0, 1));
  CHECK(Slope(0, 7).num() == 0);
  CHECK(Slope(0, 7).den() == 1);
}

TEST_CASE("every nonzero/0 collapses to the single point at infinity") {
  CHECK(Slope(1, 0) == Slope::infinity());
  CHECK(Slope(-3, 0) == Slope::infinity());
  CHECK(Slope(7, 0).num() == 1);
  CHECK(Slope(7, 0).den() == 0);
  CHECK(Slope::infinity().is_infinite());
  CHECK_FALSE(Slope(1, 2).is_infinite());
  CHECK_THROWS_AS(Slope(0, 0), std::invalid_argument);
}

TEST_CASE("slope text form round-trips") {
  CHECK(Slope(1, 2).str() == "1/2");
  CHECK(Slope(-1, 2).str() == "-1/2");
  CHECK(Slope::infinity().str() == "1/0");
  CHECK(Slope(0, 1).str() == "0/1");

  CHECK(Slope::parse("1/2") == Slope(1, 2));
  CHECK(Slope::parse("-4/6") == Slope(-2, 3));
  CHECK(Slope::parse("inf") == Slope::infinity());
  CHECK(Slope::parse("1/0") == Slope::infinity());
  CHECK(Slope::parse("3") == Slope(3, 1));
  CHECK(Slope::parse("-7") == Slope(-7, 1));

  CHECK_THROWS_AS(Slope::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(Slope::parse("1/"), std::invalid_argument);
  CHECK_THROWS_AS(Slope::parse("/2"), std::invalid_argument);
  CHECK_THROWS_AS(Slope::parse("abc"), std::invalid_argument);
  CHECK_THROWS_AS(Slope::parse("0/0"), std::invalid_argument);
  CHECK_THROWS_AS(Slope::parse("1/2/3"), std::invalid_argument);
}

TEST_CASE("circle_less agrees with the Stern-Brocot traversal order") {
  // The traversal emits slopes in counterclockwise order by construction,
  // with no reference to circle_less.  Check the comparator against every
  // ordered pair of positions.
  auto slopes = cables::testing::circle_ordered_slopes(6);
  REQUIRE(slopes.size() > 40);
  for (std::size_t i = 0; i < slopes.size(); ++i) {
    CHECK_FALSE(circle_less(slopes[i], slopes[i]));
    for (std::size_t j = i + 1; j < slopes.size(); ++j) {
      CAPTURE(slopes[i].str());
      CAPTURE(slopes[j].str());
      CHECK(circle_less(slopes[i], slopes[j]));
      CHECK_FALSE(circle_less(slopes[j], slopes[i]));
    }
  }
}

TEST_CASE("intersection numbers of slope pairs") {
  CHECK(intersection_number(Slope(0, 1), Slope::infinity()) == 1);
  CHECK(intersection_number(Slope(1, 2), Slope(2, 3)) == 1);
  CHECK(intersection_number(Slope(1, 3), Slope(2, 3)) == 3);
  CHECK(intersection_number(Slope(1, 2), Slope(1, 2)) == 0);
  // Symmetry.
  CHECK(intersection_number(Slope(2, 3), Slope(1, 3)) == 3);
}

TEST_CASE("Thurston-Bennequin numbers map to boundary slopes") {
  CHECK(tb_to_dividing_slope(Int(-1)) == Slope(-1, 1));
  CHECK(tb_to_dividing_slope(Int(-6)) == Slope(-1, 6));
  CHECK(tb_to_dividing_slope(Int(2)) == Slope(1, 2));
  CHECK_THROWS_AS(tb_to_dividing_slope(Int(0)), std::invalid_argument);
}

TEST_CASE("cable specs demand a genuine cabling") {
  CableSpec c(2, 3);
  CHECK(c.p() == 2);
  CHECK(c.q() == 3);
  CHECK(c.product() == 6);
  CHECK(c.slope() == Slope(2, 3));
  CHECK(c.str() == "2/3");

  CableSpec neg(-5, 2);
  CHECK(neg.product() == -10);
  CHECK(neg.slope() == Slope(-5, 2));

  CHECK_THROWS_AS(CableSpec(3, 1), std::invalid_argument);
  CHECK_THROWS_AS(CableSpec(3, 0), std::invalid_argument);
  CHECK_THROWS_AS(CableSpec(4, 6), std::invalid_argument);
  CHECK_THROWS_AS(CableSpec(0, 2), std::invalid_argument);
}

TEST_CASE("cable spec text form") {
  CHECK(CableSpec::parse("2/3").p() == 2);
  CHECK(CableSpec::parse("-7/2").q() == 2);
  CHECK_THROWS_AS(CableSpec::parse("4/6"), std::invalid_argument);
  CHECK_THROWS_AS(CableSpec::parse("7"), std::invalid_argument);
  CHECK_THROWS_AS(CableSpec::parse("2/"), std::invalid_argument);
  CHECK_THROWS_AS(CableSpec::parse(""), std::invalid_argument);
}

TEST_CASE("framing change between torus coordinates") {
  CHECK(cables::framing_shift(Int(-1), CableSpec(2, 3)) == 5);
  CHECK(cables::framing_shift(Int(3), CableSpec(-5, 2)) == -7);
}

TEST_CASE("unimodular maps reject non-unimodular matrices") {
  CHECK_THROWS_AS(UnimodularMap(1, 1, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(UnimodularMap(2, 0, 0, 2), std::invalid_argument);
  CHECK(UnimodularMap(2, 1, 1, 1).det() == 1);
  CHECK(UnimodularMap(0, 1, 1, 0).det() == -1);
}

TEST_CASE("the identity map fixes slopes") {
  auto id = UnimodularMap::identity();
  CHECK(id.apply(Slope(3, 7)) == Slope(3, 7));
  CHECK(id.apply(Slope::infinity()) == Slope::infinity());
}

TEST_CASE("sending_to_infinity does what the name says, determinant +1") {
  std::vector<Slope> samples = {
      Slope(0, 1),  Slope::infinity(), Slope(-1, 1), Slope(1, 2),
      Slope(-5, 2), Slope(22, 7),      Slope(-9, 4), Slope(1, 1),
  };
  for (const auto& s : samples) {
    CAPTURE(s.str());
    auto m = UnimodularMap::sending_to_infinity(s);
    CHECK(m.det() == 1);
    CHECK(m.apply(s) == Slope::infinity());
    CHECK(m.inverse().apply(Slope::infinity()) == s);
  }
}

TEST_CASE("inverse composes to the identity on slopes") {
  std::mt19937 rng(0xf01dedu);
  auto small = [&rng]() { return Int(static_cast<int>(rng() % 19)) - 9; };
  int built = 0;
  while (built < 50) {
    Int a = small(), b = small(), c = small(), d = small();
    Int det = a * d - b * c;
    if (det != 1 && det != -1) continue;
    ++built;
    UnimodularMap m(a, b, c, d);
    UnimodularMap inv = m.inverse();
    for (const auto& x :
         {Slope(0, 1), Slope::infinity(), Slope(3, 5), Slope(-7, 2)}) {
      CAPTURE(x.str());
      CHECK(inv.apply(m.apply(x)) == x);
      CHECK(m.apply(inv.apply(x)) == x);
    }
  }
}

TEST_CASE("apply_unimodular matches the member form") {
  UnimodularMap m(2, 1, 1, 1);
  CHECK(apply_unimodular(m, Slope(1, 3)) == m.apply(Slope(1, 3)));
  // (2*1 + 1*3) / (1*1 + 1*3) = 5/4.
  CHECK(m.apply(Slope(1, 3)) == Slope(5, 4));
}
