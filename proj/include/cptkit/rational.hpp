#ifndef CPTKIT_RATIONAL_HPP
#define CPTKIT_RATIONAL_HPP

#include <cstdint>
#include <string>
#include <string_view>

#include "cptkit/errors.hpp"

namespace cptkit {

/// Exact rational on int64 numerator/denominator, always normalized
/// (gcd 1, denominator > 0). Arithmetic goes through 128-bit intermediates
/// and throws RationalOverflowError when a reduced result leaves int64.
///
/// This is a side channel for lossless reproduction of small rational
/// inputs (capacity tables like 2/3, decimal payoffs); all primary
/// numerics stay in double.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(std::int64_t numerator, std::int64_t denominator);

  static Rational from_integer(std::int64_t n) { return Rational(n, 1); }
  /// Parses "p/q" or an integer string.
  static Rational from_fraction_string(std::string_view text);
  /// Parses decimal text exactly: optional sign, digits, optional
  /// fractional part, optional decimal exponent ("3.25", "-2", "1e3").
  static Rational from_decimal_string(std::string_view text);

  std::int64_t numerator() const { return num_; }
  std::int64_t denominator() const { return den_; }

  double to_double() const;
  /// "p/q", or just "p" when the denominator is 1.
  std::string to_string() const;

  Rational operator-() const { return Rational(-num_, den_); }
  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b);
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

 private:
  std::int64_t num_;
  std::int64_t den_;
};

}  // namespace cptkit

#endif
