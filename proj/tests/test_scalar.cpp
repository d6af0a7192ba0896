#include <doctest.h>

#include "hurwitz/errors.hpp"
#include "hurwitz/scalar.hpp"

using namespace hurwitz;

TEST_CASE("rational text round trip") {
  CHECK(to_string(parse_rational("6/4")) == "3/2");
  CHECK(to_string(parse_rational("-0.5")) == "-1/2");
  CHECK(to_string(parse_rational("7")) == "7");
  CHECK(to_string(parse_rational("-2/4")) == "-1/2");
  CHECK(to_string(parse_rational("1.250")) == "5/4");
}

TEST_CASE("malformed rationals are rejected") {
  CHECK_THROWS_AS(parse_rational("1/0"), InvalidArgument);
  CHECK_THROWS_AS(parse_rational("abc"), InvalidArgument);
  CHECK_THROWS_AS(parse_rational(""), InvalidArgument);
  CHECK_THROWS_AS(parse_rational("1.2.3"), InvalidArgument);
  CHECK_THROWS_AS(parse_rational("2/-4"), InvalidArgument);
}

TEST_CASE("lists") {
  CHECK(parse_int_list("-1,1,-1") == std::vector<int>{-1, 1, -1});
  const auto q = parse_rational_list("1/2, -3");
  REQUIRE(q.size() == 2);
  CHECK(q[0] == Rational(1, 2));
  CHECK(q[1] == -3);
}

TEST_CASE("integer and negative powers") {
  CHECK(pow(Rational(2, 3), -2) == Rational(9, 4));
  CHECK(pow(Rational(5), 0) == Rational(1));
  CHECK_THROWS(pow(Rational(0), -1));
  CHECK(pow(Integer(10), 30u).get_str() == "1" + std::string(30, '0'));
}
