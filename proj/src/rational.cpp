#include "sobmult/rational.hpp"

#include "sobmult/errors.hpp"

#include <cctype>

namespace sobmult {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

BigInt parse_digits(std::string_view s) {
  return BigInt(std::string(s));
}

} // namespace

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den == 0) {
    throw DomainError("rational with zero denominator");
  }
  // cpp_rational reduces by the gcd but insists on a positive denominator
  if (den < 0) {
    value_ = Backend(-num, -den);
  } else {
    value_ = Backend(num, den);
  }
}

Rational Rational::parse(std::string_view text) {
  std::string_view rest = text;
  bool negative = false;
  if (!rest.empty() && rest.front() == '-') {
    negative = true;
    rest.remove_prefix(1);
  }
  if (rest.empty()) {
    throw ParseError("empty rational literal: '" + std::string(text) + "'");
  }

  auto slash = rest.find('/');
  auto dot = rest.find('.');
  Rational out;
  if (slash != std::string_view::npos) {
    std::string_view num = rest.substr(0, slash);
    std::string_view den = rest.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) {
      throw ParseError("malformed fraction: '" + std::string(text) + "'");
    }
    BigInt d = parse_digits(den);
    if (d == 0) {
      throw ParseError("zero denominator: '" + std::string(text) + "'");
    }
    out = Rational(parse_digits(num), d);
  } else if (dot != std::string_view::npos) {
    std::string_view whole = rest.substr(0, dot);
    std::string_view fractional = rest.substr(dot + 1);
    if (!all_digits(whole) || !all_digits(fractional)) {
      throw ParseError("malformed decimal: '" + std::string(text) + "'");
    }
    BigInt scale = 1;
    for (std::size_t i = 0; i < fractional.size(); ++i) scale *= 10;
    out = Rational(parse_digits(whole) * scale + parse_digits(fractional), scale);
  } else {
    if (!all_digits(rest)) {
      throw ParseError("malformed rational: '" + std::string(text) + "'");
    }
    out = Rational(parse_digits(rest), 1);
  }
  return negative ? -out : out;
}

Rational Rational::floor() const {
  BigInt n = num();
  BigInt d = den();
  if (d == 1) return *this;
  BigInt q = n / d; // truncates toward zero
  if (n < 0) q -= 1;
  return Rational(q, 1);
}

Rational Rational::inverse() const {
  if (is_zero()) {
    throw DomainError("inverse of zero");
  }
  return Rational(den(), num());
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) {
    throw DomainError("division by zero");
  }
  return Rational(a.value_ / b.value_);
}

std::string Rational::str() const {
  if (is_integer()) return num().str();
  return num().str() + "/" + den().str();
}

std::string Rational::fraction_str() const {
  return num().str() + "/" + den().str();
}

Rational conjugate_exponent(const Rational& p) {
  if (p <= Rational(1)) {
    throw DomainError("conjugate exponent requires 1 < p, got p = " + p.str());
  }
  return p / (p - Rational(1));
}

} // namespace sobmult
