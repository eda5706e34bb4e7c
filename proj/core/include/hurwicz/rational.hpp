#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace hurwicz {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational number. Always held in lowest terms with a positive
/// denominator; use numerator(r) / denominator(r) for the components.
using Rational = boost::multiprecision::cpp_rational;

/// Builds p/q, moving the sign to the numerator. Throws std::invalid_argument
/// when q == 0.
Rational make_rational(BigInt p, BigInt q);

bool is_integer(const Rational& r);

/// Parses "p/q", integer, or decimal spellings ("4", "-3/10", "0.25",
/// "1.5e-3"), all converted exactly. Throws std::invalid_argument otherwise.
Rational parse_rational(std::string_view text);

/// "p/q", or plain "p" for integers. Lossless.
std::string format_fraction(const Rational& r);

/// Fixed-point with exactly `digits` decimals (round half away from zero);
/// digits == 0 renders a bare integer. Locale-independent.
std::string format_fixed(const Rational& r, int digits);

/// Integers render bare, everything else through format_fixed.
std::string format_compact(const Rational& r, int digits);

/// Decimal when the value is exact at `digits` decimals, "p/q" otherwise.
std::string format_auto(const Rational& r, int digits);

}  // namespace hurwicz
