#include <doctest.h>

#include "sturmian/exact.hpp"

using namespace sturmian;

TEST_CASE("parsing rationals") {
  CHECK(parse_rational("3/7") == Rational(3, 7));
  CHECK(parse_rational("6/14") == Rational(3, 7));
  CHECK(parse_rational("-2/4") == Rational(-1, 2));
  CHECK(parse_rational("0.125") == Rational(1, 8));
  CHECK(parse_rational("-.5") == Rational(-1, 2));
  CHECK(parse_rational("12") == Rational(12));
  CHECK_THROWS_AS(parse_rational("1/0"), ConfigError);
  CHECK_THROWS_AS(parse_rational("abc"), ConfigError);
  CHECK_THROWS_AS(parse_rational("1.x"), ConfigError);
  CHECK_THROWS_AS(parse_bigint(""), ConfigError);
  CHECK(parse_bigint("+42") == 42);
}

TEST_CASE("floor, ceil and fractional part") {
  CHECK(floor_of(Rational(-1, 3)) == -1);
  CHECK(ceil_of(Rational(-1, 3)) == 0);
  CHECK(ceil_of(Rational(4, 2)) == 2);
  CHECK(frac(Rational(-1, 3)) == Rational(2, 3));
  CHECK(frac(Rational(7, 3)) == Rational(1, 3));
  CHECK(nearest_int_distance(Rational(7, 3)) == Rational(1, 3));
  CHECK(nearest_int_distance(Rational(5, 3)) == Rational(1, 3));
  CHECK(nearest_int_distance(Rational(2)) == 0);
}

TEST_CASE("renderings") {
  CHECK(to_string(Rational(3, 7)) == "3/7");
  CHECK(to_string(make_rational(4, 2)) == "2");
  CHECK(to_decimal(Rational(1, 3), 15) == "0.333333333333333");
  CHECK(to_decimal(Rational(0), 15) == "0");
  CHECK(log_ratio_decimal(Rational(8), Rational(2), 10) == "3");
  CHECK(log_ratio(Rational(100), Rational(10)) == doctest::Approx(2.0));
  CHECK_THROWS_AS(log_ratio(Rational(3), Rational(1)), DomainError);
  CHECK_THROWS_AS(log_decimal(Rational(0)), DomainError);
}

TEST_CASE("error codes") {
  CHECK(ConfigError("x").code() == "E_CONFIG");
  CHECK(HorizonError("x").code() == "E_HORIZON");
  CHECK(DomainError("x").code() == "E_DOMAIN");
  CHECK(to_int64(BigInt(5), "v") == 5);
  BigInt huge(1);
  huge <<= 70;
  CHECK_THROWS_AS(to_int64(huge, "v"), DomainError);
  CHECK_THROWS_AS(make_rational(BigInt(1), BigInt(0)), DomainError);
}
