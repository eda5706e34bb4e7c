#include "hurwicz/rational.hpp"

#include "doctest.h"

#include <stdexcept>

using namespace hurwicz;

TEST_CASE("make_rational normalizes the sign into the numerator") {
  CHECK(make_rational(3, -6) == Rational(-1, 2));
  CHECK(make_rational(-3, -6) == Rational(1, 2));
  CHECK(make_rational(0, -5) == 0);
  CHECK_THROWS_AS(make_rational(1, 0), std::invalid_argument);
}

TEST_CASE("parse_rational accepts fraction, integer and decimal spellings") {
  CHECK(parse_rational("7/10") == Rational(7, 10));
  CHECK(parse_rational("-3/10") == Rational(-3, 10));
  CHECK(parse_rational("3/-10") == Rational(-3, 10));
  CHECK(parse_rational("4") == 4);
  CHECK(parse_rational("-12") == -12);
  CHECK(parse_rational("+5") == 5);
  CHECK(parse_rational("0.25") == Rational(1, 4));
  CHECK(parse_rational("-0.3") == Rational(-3, 10));
  CHECK(parse_rational(".5") == Rational(1, 2));
  CHECK(parse_rational("2.") == 2);
  CHECK(parse_rational("1.5e-3") == Rational(3, 2000));
  CHECK(parse_rational("2.5E2") == 250);
  CHECK(parse_rational("1e+3") == 1000);
  CHECK(parse_rational(" 7/10 ") == Rational(7, 10));
}

TEST_CASE("parse_rational rejects everything else") {
  for (const char* bad : {"", "x", "1/2/3", "1/0", "1.2.3", "1e", "e3", ".",
                          "--1", "1 2", "0x10", "1e99999", "nan", "inf"})
    CHECK_THROWS_AS(parse_rational(bad), std::invalid_argument);
}

TEST_CASE("format_fraction is lossless and bare for integers") {
  CHECK(format_fraction(Rational(7, 10)) == "7/10");
  CHECK(format_fraction(Rational(-7, 10)) == "-7/10");
  CHECK(format_fraction(Rational(4)) == "4");
  CHECK(format_fraction(Rational(0)) == "0");
  CHECK(parse_rational(format_fraction(Rational(-355, 113))) == Rational(-355, 113));
}

TEST_CASE("format_fixed renders exact decimals") {
  CHECK(format_fixed(Rational(4), 1) == "4.0");
  CHECK(format_fixed(Rational(11, 2), 1) == "5.5");
  CHECK(format_fixed(Rational(37, 10), 1) == "3.7");
  CHECK(format_fixed(Rational(0), 2) == "0.00");
  CHECK(format_fixed(Rational(-7, 10), 1) == "-0.7");
  CHECK(format_fixed(Rational(5), 0) == "5");
}

TEST_CASE("format_fixed rounds half away from zero") {
  CHECK(format_fixed(Rational(1, 4), 1) == "0.3");
  CHECK(format_fixed(Rational(-1, 4), 1) == "-0.3");
  CHECK(format_fixed(Rational(1, 3), 1) == "0.3");
  CHECK(format_fixed(Rational(2, 3), 1) == "0.7");
  CHECK(format_fixed(Rational(15, 100), 1) == "0.2");
  CHECK(format_fixed(Rational(-15, 100), 1) == "-0.2");
  CHECK(format_fixed(Rational(-1, 100), 1) == "0.0");  // never "-0.0"
  CHECK(format_fixed(Rational(999, 1000), 2) == "1.00");
}

TEST_CASE("format_compact leaves integers bare") {
  CHECK(format_compact(Rational(8), 1) == "8");
  CHECK(format_compact(Rational(17, 2), 1) == "8.5");
  CHECK(format_compact(Rational(-3), 4) == "-3");
}

TEST_CASE("format_auto falls back to fractions when digits are lossy") {
  CHECK(format_auto(Rational(1, 2), 1) == "0.5");
  CHECK(format_auto(Rational(1, 3), 1) == "1/3");
  CHECK(format_auto(Rational(1, 4), 2) == "0.25");
  CHECK(format_auto(Rational(4), 1) == "4.0");
}

TEST_CASE("is_integer") {
  CHECK(is_integer(Rational(6, 3)));
  CHECK_FALSE(is_integer(Rational(7, 3)));
}
