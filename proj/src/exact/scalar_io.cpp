#include <cctype>
#include <charconv>
#include <cmath>
#include <string>

#include <gmp.h>

#include "lshape/error.hpp"
#include "lshape/scalar.hpp"

namespace lshape {

double log_abs(const Integer& v) {
  require(v != 0, ErrorCode::kLogDomain, "log of zero integer");
  long exponent = 0;
  const double mantissa = mpz_get_d_2exp(&exponent, v.backend().data());
  return std::log(std::fabs(mantissa)) + static_cast<double>(exponent) * std::log(2.0);
}

double log_positive(const Rational& v) {
  require(v > 0, ErrorCode::kLogDomain, "log of non-positive rational");
  return log_abs(numerator(v)) - log_abs(denominator(v));
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

std::string strip_zeros(std::string_view s) {
  const auto first = s.find_first_not_of('0');
  return first == std::string_view::npos ? "0" : std::string(s.substr(first));
}

Integer pow10(long n) {
  Integer result(1);
  for (long i = 0; i < n; ++i) result *= 10;
  return result;
}

Rational parse_decimal(std::string_view text) {
  bool negative = false;
  if (!text.empty() && (text.front() == '+' || text.front() == '-')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  long exponent = 0;
  if (auto e = text.find_first_of("eE"); e != std::string_view::npos) {
    std::string_view exp_part = text.substr(e + 1);
    text = text.substr(0, e);
    if (!exp_part.empty() && exp_part.front() == '+') exp_part.remove_prefix(1);
    auto [ptr, ec] = std::from_chars(exp_part.data(), exp_part.data() + exp_part.size(), exponent);
    require(ec == std::errc() && ptr == exp_part.data() + exp_part.size() && !exp_part.empty(),
            ErrorCode::kInvalidArgument, "bad exponent in '" + std::string(text) + "'");
  }
  std::string digits;
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view whole = text.substr(0, dot);
    std::string_view frac = text.substr(dot + 1);
    require((whole.empty() || all_digits(whole)) && (frac.empty() || all_digits(frac)) &&
                !(whole.empty() && frac.empty()),
            ErrorCode::kInvalidArgument, "bad decimal '" + std::string(text) + "'");
    digits = std::string(whole) + std::string(frac);
    exponent -= static_cast<long>(frac.size());
  } else {
    require(all_digits(text), ErrorCode::kInvalidArgument,
            "bad number '" + std::string(text) + "'");
    digits = std::string(text);
  }
  require(exponent > -100000 && exponent < 100000, ErrorCode::kInvalidArgument,
          "exponent out of range");
  // GMP reads a leading zero as an octal prefix.
  Rational value{Integer(strip_zeros(digits))};
  if (exponent >= 0)
    value *= Rational(pow10(exponent));
  else
    value /= Rational(pow10(-exponent));
  return negative ? Rational(-value) : value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  require(!text.empty(), ErrorCode::kInvalidArgument, "empty rational");
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    std::string_view num = text.substr(0, slash);
    std::string_view den = text.substr(slash + 1);
    bool negative = false;
    if (!num.empty() && (num.front() == '-' || num.front() == '+')) {
      negative = num.front() == '-';
      num.remove_prefix(1);
    }
    require(all_digits(num) && all_digits(den), ErrorCode::kInvalidArgument,
            "bad rational '" + std::string(text) + "'");
    Integer d(strip_zeros(den));
    require(d != 0, ErrorCode::kInvalidArgument, "zero denominator");
    Rational value(Integer(strip_zeros(num)), d);
    return negative ? Rational(-value) : value;
  }
  return parse_decimal(text);
}

std::string to_string(const Rational& v) {
  if (denominator(v) == 1) return numerator(v).str();
  return numerator(v).str() + "/" + denominator(v).str();
}

std::string to_decimal(double v) {
  char buffer[64];
  auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof buffer, v);
  return std::string(buffer, ptr);
}

}  // namespace lshape
