#pragma once

// Exact arithmetic used throughout the library. Floating point appears only
// in to_decimal(), which exists for display.

#include <boost/multiprecision/cpp_dec_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "flagtke/error.hpp"

namespace flagtke {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt numerator(const Rational& r) { return boost::multiprecision::numerator(r); }
inline BigInt denominator(const Rational& r) { return boost::multiprecision::denominator(r); }

inline bool is_integer(const Rational& r) { return denominator(r) == 1; }

/// Lowest terms with positive denominator; integers print without "/1".
inline std::string to_string(const Rational& r) {
  if (is_integer(r)) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

inline std::string to_string(const BigInt& v) { return v.str(); }

/// Decimal rendering with `digits` significant digits. Display only.
inline std::string to_decimal(const Rational& r, int digits = 6) {
  using Dec = boost::multiprecision::cpp_dec_float_100;
  Dec value = Dec(numerator(r)) / Dec(denominator(r));
  return value.str(digits);
}

namespace detail {
inline bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}
}  // namespace detail

/// Parses "p", "-p", "p/q", "-p/q" (optional leading '+').
inline Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  std::string_view num = s;
  std::string_view den = "1";
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    num = s.substr(0, slash);
    den = s.substr(slash + 1);
  }
  if (!detail::all_digits(num) || !detail::all_digits(den))
    throw Error(Errc::parse, "not a rational number: '" + std::string(text) + "'");
  BigInt p(std::string{num});
  BigInt q(std::string{den});
  if (q == 0) throw Error(Errc::parse, "zero denominator in '" + std::string(text) + "'");
  Rational r(p, q);
  return negative ? Rational(-r) : r;
}

inline std::vector<Rational> parse_rational_list(std::string_view text) {
  std::vector<Rational> out;
  if (text.find_first_not_of(" \t") == std::string_view::npos) return out;
  std::size_t start = 0;
  while (true) {
    auto comma = text.find(',', start);
    out.push_back(parse_rational(text.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

inline Rational pow(const Rational& base, std::size_t exponent) {
  Rational result = 1;
  Rational b = base;
  while (exponent > 0) {
    if (exponent & 1U) result *= b;
    b *= b;
    exponent >>= 1U;
  }
  return result;
}

inline BigInt factorial(std::size_t n) {
  BigInt result = 1;
  for (std::size_t k = 2; k <= n; ++k) result *= k;
  return result;
}

}  // namespace flagtke
