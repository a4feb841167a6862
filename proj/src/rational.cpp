#include "cptkit/rational.hpp"

#include <charconv>
#include <cstdlib>
#include <limits>
#include <numeric>

namespace cptkit {

namespace {

using Int128 = __int128;

std::int64_t narrow(Int128 value, const char* what) {
  if (value > std::numeric_limits<std::int64_t>::max() ||
      value < std::numeric_limits<std::int64_t>::min()) {
    throw RationalOverflowError(std::string("rational overflow in ") + what);
  }
  return static_cast<std::int64_t>(value);
}

Rational make_reduced(Int128 num, Int128 den, const char* what) {
  if (den == 0) throw RationalOverflowError("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  Int128 a = num < 0 ? -num : num;
  Int128 b = den;
  while (b != 0) {
    Int128 t = a % b;
    a = b;
    b = t;
  }
  if (a > 1) {
    num /= a;
    den /= a;
  }
  return Rational(narrow(num, what), narrow(den, what));
}

}  // namespace

Rational::Rational(std::int64_t numerator, std::int64_t denominator) {
  if (denominator == 0) throw RationalOverflowError("rational with zero denominator");
  if (denominator < 0) {
    if (numerator == std::numeric_limits<std::int64_t>::min() ||
        denominator == std::numeric_limits<std::int64_t>::min()) {
      throw RationalOverflowError("rational overflow in construction");
    }
    numerator = -numerator;
    denominator = -denominator;
  }
  const std::int64_t g = std::gcd(numerator, denominator);
  num_ = g ? numerator / g : 0;
  den_ = g ? denominator / g : 1;
}

Rational Rational::from_fraction_string(std::string_view text) {
  const auto slash = text.find('/');
  auto parse_int = [&](std::string_view part) -> std::int64_t {
    std::int64_t value = 0;
    const char* first = part.data();
    const char* last = part.data() + part.size();
    auto result = std::from_chars(first, last, value);
    if (result.ec != std::errc() || result.ptr != last) {
      throw ParseError("not an integer: '" + std::string(part) + "'");
    }
    return value;
  };
  if (slash == std::string_view::npos) {
    return from_integer(parse_int(text));
  }
  return Rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

Rational Rational::from_decimal_string(std::string_view text) {
  if (text.empty()) throw ParseError("empty decimal");
  std::size_t pos = 0;
  bool negative = false;
  if (text[pos] == '+' || text[pos] == '-') {
    negative = text[pos] == '-';
    ++pos;
  }
  Int128 mantissa = 0;
  int frac_digits = 0;
  bool any_digit = false;
  bool seen_dot = false;
  for (; pos < text.size(); ++pos) {
    const char c = text[pos];
    if (c == '.') {
      if (seen_dot) throw ParseError("malformed decimal: '" + std::string(text) + "'");
      seen_dot = true;
      continue;
    }
    if (c == 'e' || c == 'E') break;
    if (c < '0' || c > '9') throw ParseError("malformed decimal: '" + std::string(text) + "'");
    mantissa = mantissa * 10 + (c - '0');
    if (mantissa > Int128(std::numeric_limits<std::int64_t>::max())) {
      throw RationalOverflowError("decimal has too many digits: '" + std::string(text) + "'");
    }
    if (seen_dot) ++frac_digits;
    any_digit = true;
  }
  if (!any_digit) throw ParseError("malformed decimal: '" + std::string(text) + "'");
  int exponent = 0;
  if (pos < text.size()) {  // at 'e'/'E'
    const char* first = text.data() + pos + 1;
    const char* last = text.data() + text.size();
    auto result = std::from_chars(first, last, exponent);
    if (result.ec != std::errc() || result.ptr != last || exponent > 18 || exponent < -18) {
      throw ParseError("malformed decimal exponent: '" + std::string(text) + "'");
    }
  }
  Int128 num = negative ? -mantissa : mantissa;
  Int128 den = 1;
  int shift = exponent - frac_digits;
  for (; shift > 0; --shift) num *= 10;
  for (; shift < 0; ++shift) den *= 10;
  return make_reduced(num, den, "decimal parse");
}

double Rational::to_double() const {
  // int64 fits a long double mantissa exactly, so this is one rounding.
  return static_cast<double>(static_cast<long double>(num_) / static_cast<long double>(den_));
}

std::string Rational::to_string() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational operator+(const Rational& a, const Rational& b) {
  return make_reduced(Int128(a.num_) * b.den_ + Int128(b.num_) * a.den_, Int128(a.den_) * b.den_,
                      "addition");
}

Rational operator-(const Rational& a, const Rational& b) {
  return make_reduced(Int128(a.num_) * b.den_ - Int128(b.num_) * a.den_, Int128(a.den_) * b.den_,
                      "subtraction");
}

Rational operator*(const Rational& a, const Rational& b) {
  return make_reduced(Int128(a.num_) * b.num_, Int128(a.den_) * b.den_, "multiplication");
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.num_ == 0) throw RationalOverflowError("rational division by zero");
  return make_reduced(Int128(a.num_) * b.den_, Int128(a.den_) * b.num_, "division");
}

bool operator<(const Rational& a, const Rational& b) {
  return Int128(a.num_) * b.den_ < Int128(b.num_) * a.den_;
}

}  // namespace cptkit
