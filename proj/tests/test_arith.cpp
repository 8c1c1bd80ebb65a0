#include "doctest.h"
#include "totval/arith.hpp"

#include <limits>

using namespace totval;

TEST_CASE("fraction normal form") {
  CHECK(Fraction(2, 4) == Fraction(1, 2));
  CHECK(Fraction(3, -6) == Fraction(-1, 2));
  CHECK(Fraction(3, -6).den() == 2);
  CHECK(Fraction(0, 5) == Fraction(0));
  CHECK(Fraction(6, 3).is_integer());
  CHECK_THROWS_AS(Fraction(1, 0), ValidationError);
}

TEST_CASE("fraction arithmetic") {
  CHECK(Fraction(1, 8) + Fraction(1, 8) + Fraction(3, 4) == Fraction(1));
  CHECK(Fraction(1, 3) - Fraction(1, 2) == Fraction(-1, 6));
  CHECK(Fraction(2, 3) * Fraction(3, 4) == Fraction(1, 2));
  CHECK(Fraction(1, 2) / Fraction(1, 4) == Fraction(2));
  CHECK(-Fraction(1, 2) == Fraction(-1, 2));
  CHECK(Fraction(1, 3) < Fraction(1, 2));
  CHECK(Fraction(-1, 2) < Fraction(0));
  CHECK_THROWS_AS(Fraction(1) / Fraction(0), ValidationError);
}

TEST_CASE("fraction printing") {
  CHECK(Fraction(3, 4).to_string() == "3/4");
  CHECK(Fraction(-1, 2).to_string() == "-1/2");
  CHECK(Fraction(5).to_string() == "5");
}

TEST_CASE("modular helpers") {
  CHECK(mod(-1, 8) == 7);
  CHECK(mod(16, 8) == 0);
  CHECK(inverse_mod(3, 8) == 3);
  CHECK(inverse_mod(5, 12) == 5);
  CHECK(inverse_mod(1, 2) == 1);
  CHECK(inverse_mod(-1, 7) == 6);
  CHECK_THROWS_AS(inverse_mod(2, 4), ValidationError);
  for (Int m = 2; m < 60; ++m) {
    for (Int a = 1; a < m; ++a) {
      if (gcd(a, m) != 1) continue;
      CHECK(mod(a * inverse_mod(a, m), m) == 1);
    }
  }
}

TEST_CASE("overflow is reported") {
  const Int big = std::numeric_limits<Int>::max();
  CHECK_THROWS_AS(checked_add(big, 1), std::overflow_error);
  CHECK_THROWS_AS(checked_mul(big / 2, 3), std::overflow_error);
  CHECK_THROWS_AS(checked_sub(std::numeric_limits<Int>::min(), 1), std::overflow_error);
  CHECK(lcm(4, 6) == 12);
  CHECK(lcm(0, 6) == 0);
}
