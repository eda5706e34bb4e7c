#include "hurwicz/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace hurwicz {

namespace {

BigInt pow10(int k) {
  BigInt r(1);
  for (int i = 0; i < k; ++i) r *= 10;
  return r;
}

[[noreturn]] void bad_literal(std::string_view text) {
  throw std::invalid_argument("not a rational literal: '" + std::string(text) + "'");
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

// [sign] digits, nothing else
BigInt parse_integer(std::string_view s, std::string_view whole) {
  bool neg = false;
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    neg = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) bad_literal(whole);
  BigInt v{std::string(s)};
  if (neg) v = -v;
  return v;
}

}  // namespace

Rational make_rational(BigInt p, BigInt q) {
  if (q == 0) throw std::invalid_argument("rational with zero denominator");
  if (q < 0) {
    p = -p;
    q = -q;
  }
  return Rational(p, q);
}

bool is_integer(const Rational& r) { return denominator(r) == 1; }

Rational parse_rational(std::string_view text) {
  std::string_view s = trim(text);
  if (s.empty()) bad_literal(text);

  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    if (s.find('/', slash + 1) != std::string_view::npos) bad_literal(text);
    BigInt p = parse_integer(s.substr(0, slash), text);
    BigInt q = parse_integer(s.substr(slash + 1), text);
    if (q == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    return make_rational(std::move(p), std::move(q));
  }

  // decimal: [sign] digits [. digits] [e [sign] digits], at least one
  // mantissa digit
  bool neg = false;
  if (s.front() == '+' || s.front() == '-') {
    neg = s.front() == '-';
    s.remove_prefix(1);
  }
  int exponent = 0;
  if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
    std::string_view es = s.substr(e + 1);
    s = s.substr(0, e);
    bool eneg = false;
    if (!es.empty() && (es.front() == '+' || es.front() == '-')) {
      eneg = es.front() == '-';
      es.remove_prefix(1);
    }
    if (!all_digits(es) || es.size() > 4) bad_literal(text);
    exponent = std::stoi(std::string(es));
    if (eneg) exponent = -exponent;
  }
  std::string_view whole = s, frac;
  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    whole = s.substr(0, dot);
    frac = s.substr(dot + 1);
  }
  if (whole.empty() && frac.empty()) bad_literal(text);
  if (!whole.empty() && !all_digits(whole)) bad_literal(text);
  if (!frac.empty() && !all_digits(frac)) bad_literal(text);

  BigInt mantissa(whole.empty() ? std::string("0") : std::string(whole));
  mantissa *= pow10(static_cast<int>(frac.size()));
  if (!frac.empty()) mantissa += BigInt(std::string(frac));
  if (neg) mantissa = -mantissa;

  int scale = exponent - static_cast<int>(frac.size());
  if (scale >= 0) return Rational(mantissa * pow10(scale));
  return make_rational(std::move(mantissa), pow10(-scale));
}

std::string format_fraction(const Rational& r) {
  std::string s = numerator(r).str();
  if (!is_integer(r)) {
    s += '/';
    s += denominator(r).str();
  }
  return s;
}

std::string format_fixed(const Rational& r, int digits) {
  if (digits < 0) throw std::invalid_argument("format_fixed: negative digit count");
  BigInt num = numerator(r);
  const BigInt& den = denominator(r);
  bool neg = num < 0;
  if (neg) num = -num;

  BigInt scaled = num * pow10(digits);
  BigInt q = scaled / den;
  if (2 * (scaled % den) >= den) ++q;  // half away from zero

  std::string body = q.str();
  if (digits > 0) {
    if (body.size() <= static_cast<std::size_t>(digits))
      body.insert(0, static_cast<std::size_t>(digits) + 1 - body.size(), '0');
    body.insert(body.size() - static_cast<std::size_t>(digits), 1, '.');
  }
  if (neg && q != 0) body.insert(0, 1, '-');
  return body;
}

std::string format_compact(const Rational& r, int digits) {
  return is_integer(r) ? numerator(r).str() : format_fixed(r, digits);
}

std::string format_auto(const Rational& r, int digits) {
  Rational scaled = r;
  for (int i = 0; i < digits; ++i) scaled *= 10;
  return is_integer(scaled) ? format_fixed(r, digits) : format_fraction(r);
}

}  // namespace hurwicz
