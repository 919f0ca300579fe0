#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <string>
#include <string_view>

namespace sobmult {

using BigInt = boost::multiprecision::cpp_int;

/**
 * Exact arbitrary-precision rational scalar.
 *
 * All exponent arithmetic in the decision engine runs through this type;
 * no floating-point value ever enters a verdict. Values are kept in
 * canonical form (denominator > 0, gcd(|num|, den) = 1) at all times.
 */
class Rational {
public:
  Rational() : value_(0) {}
  Rational(long long n) : value_(n) {}
  Rational(const BigInt& num, const BigInt& den);

  /// Parse `[-]?digits`, `[-]?digits/digits` or `[-]?digits.digits`.
  /// Decimals convert exactly ("0.25" -> 1/4). Throws ParseError.
  static Rational parse(std::string_view text);

  BigInt num() const { return boost::multiprecision::numerator(value_); }
  BigInt den() const { return boost::multiprecision::denominator(value_); }

  bool is_integer() const { return den() == 1; }
  bool is_zero() const { return value_.is_zero(); }

  /// Largest integer <= *this, as a Rational.
  Rational floor() const;
  /// Fractional part, *this - floor(); zero iff integer.
  Rational frac() const { return *this - floor(); }

  Rational abs() const { return value_ < 0 ? Rational(-value_) : *this; }
  /// Multiplicative inverse; throws DomainError on zero.
  Rational inverse() const;

  double to_double() const { return value_.convert_to<double>(); }

  /// "3/2", or just "3" when the value is an integer.
  std::string str() const;
  /// Always "num/den", e.g. "3/1"; the form used in JSON certificates.
  std::string fraction_str() const;

  friend Rational operator+(const Rational& a, const Rational& b) { return Rational(a.value_ + b.value_); }
  friend Rational operator-(const Rational& a, const Rational& b) { return Rational(a.value_ - b.value_); }
  friend Rational operator*(const Rational& a, const Rational& b) { return Rational(a.value_ * b.value_); }
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational operator-() const { return Rational(-value_); }

  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o) { *this = *this / o; return *this; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.value_ != b.value_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.value_ < b.value_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.value_ <= b.value_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.value_ > b.value_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.value_ >= b.value_; }

  static Rational min(const Rational& a, const Rational& b) { return a <= b ? a : b; }
  static Rational max(const Rational& a, const Rational& b) { return a >= b ? a : b; }

private:
  using Backend = boost::multiprecision::cpp_rational;
  explicit Rational(Backend v) : value_(std::move(v)) {}
  Backend value_;
};

/// Hoelder conjugate p' with 1/p + 1/p' = 1; requires 1 < p.
Rational conjugate_exponent(const Rational& p);

} // namespace sobmult
