#include <doctest.h>

#include "redcyc/rational.hpp"

using namespace redcyc;

TEST_CASE("fraction text round trip") {
    for (const char* s : {"0", "1/9", "-5/81", "44/81", "123456789012345678901234567890/11"})
        CHECK(fraction_string(parse_fraction(s)) == s);
    CHECK(parse_fraction("6/8") == Rational(3, 4));
    CHECK(parse_fraction("010") == 10);
    CHECK_THROWS(parse_fraction("1/0"));
    CHECK_THROWS(parse_fraction("abc"));
}

TEST_CASE("decimal rendering") {
    CHECK(decimal_string(Rational(1, 9), 12) == "0.111111111111");
    CHECK(decimal_string(Rational(5, 81), 12) == "0.0617283950617");
    CHECK(decimal_string(Rational(1, 4), 12) == "0.25");
    CHECK(decimal_string(Rational(41, 24), 12) == "1.70833333333");
    CHECK(decimal_string(Rational(-2, 3), 3) == "-0.667");
    CHECK(decimal_string(Rational(1, 1000000), 12) == "1e-06");
    CHECK(decimal_string(Rational(123456789), 4) == "1.235e+08");
    CHECK(decimal_string(Rational(0), 12) == "0");
    CHECK(decimal_string(Rational(999999, 1000000), 3) == "1");
    CHECK(decimal_string(qpow(3, -2000), 3) == "5.72e-955");
}

TEST_CASE("powers") {
    CHECK(qpow(3, -2) == Rational(1, 9));
    CHECK(qpow(2, 10) == 1024);
    CHECK(ipow(BigInt(7), 0) == 1);
    CHECK(floor(Rational(-7, 2)) == -4);
    CHECK(is_integer(Rational(8, 4)));
}
