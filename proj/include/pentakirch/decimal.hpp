#pragma once

#include <pentakirch/numeric.hpp>

#include <cctype>
#include <stdexcept>
#include <string>
#include <string_view>

namespace pentakirch {

/// Fixed-point rendering of an exact rational with `digits` decimals,
/// rounding half to even.
inline std::string to_decimal(const BigRational& q, int digits) {
  if (digits < 0) throw std::invalid_argument("to_decimal: digits must be >= 0");
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  const bool negative = q < 0;
  BigInteger num = abs(numerator(q));
  const BigInteger den = denominator(q);
  BigInteger scale(1);
  for (int i = 0; i < digits; ++i) scale *= 10;

  num *= scale;
  BigInteger quotient = num / den;
  const BigInteger remainder = num % den;
  const BigInteger twice = 2 * remainder;
  if (twice > den || (twice == den && quotient % 2 == 1)) ++quotient;

  std::string body = quotient.str();
  if (digits > 0) {
    if (body.size() <= static_cast<std::size_t>(digits)) body.insert(0, digits + 1 - body.size(), '0');
    body.insert(body.size() - static_cast<std::size_t>(digits), 1, '.');
  }
  if (negative && quotient != 0) body.insert(0, 1, '-');
  return body;
}

/// Exact value of a plain decimal literal such as "-12.0345".
inline BigRational parse_decimal(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("parse_decimal: empty string");
  bool negative = false;
  std::size_t pos = 0;
  if (text[0] == '-' || text[0] == '+') {
    negative = text[0] == '-';
    pos = 1;
  }
  BigInteger digits_value(0);
  BigInteger scale(1);
  bool seen_point = false, seen_digit = false;
  for (; pos < text.size(); ++pos) {
    const char ch = text[pos];
    if (ch == '.' && !seen_point) {
      seen_point = true;
    } else if (std::isdigit(static_cast<unsigned char>(ch))) {
      digits_value = digits_value * 10 + (ch - '0');
      if (seen_point) scale *= 10;
      seen_digit = true;
    } else {
      throw std::invalid_argument("parse_decimal: malformed number '" + std::string(text) + "'");
    }
  }
  if (!seen_digit) throw std::invalid_argument("parse_decimal: no digits in '" + std::string(text) + "'");
  BigRational value = BigRational(digits_value) / BigRational(scale);
  return negative ? BigRational(-value) : value;
}

/// Number of digits after the decimal point in a literal.
inline int decimal_places(std::string_view text) {
  const auto dot = text.find('.');
  return dot == std::string_view::npos ? 0 : static_cast<int>(text.size() - dot - 1);
}

}  // namespace pentakirch
