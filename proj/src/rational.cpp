#include "wordavoid/rational.hpp"

#include <cstdlib>

#include "wordavoid/errors.hpp"

namespace wordavoid {

std::string to_string(const Rational& value) { return value.get_str(); }

std::string to_string(const BigInt& value) { return value.get_str(); }

namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && s.front() == '-') {
    s.remove_prefix(1);
  }
  if (s.empty()) {
    return false;
  }
  for (char c : s) {
    if (c < '0' || c > '9') {
      return false;
    }
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const auto num = text.substr(0, slash);
  const auto den = slash == std::string_view::npos ? std::string_view("1")
                                                   : text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) ||
      den.front() == '-') {
    throw InvalidArgument("malformed rational '" + std::string(text) + "'");
  }
  BigInt n(std::string(num), 10);
  BigInt d(std::string(den), 10);
  if (d == 0) {
    throw InvalidArgument("zero denominator in '" + std::string(text) + "'");
  }
  Rational out(n, d);
  out.canonicalize();
  return out;
}

std::string to_decimal(const Rational& value, int digits) {
  if (digits < 1) {
    throw InvalidArgument("need at least one significant digit");
  }
  if (value == 0) {
    return "0";
  }
  const bool negative = value < 0;
  const Rational mag = abs(value);

  // Find e with 10^(e-1) <= mag < 10^e.
  long e = 0;
  for (Rational scaled = mag; scaled >= 1; scaled /= 10) {
    ++e;
  }
  for (Rational scaled = mag * 10; scaled < 1; scaled *= 10) {
    --e;
  }

  auto rounded_at = [&](long exponent) {
    // round(mag * 10^(digits - exponent)), half away from zero
    Rational scaled = mag;
    BigInt factor;
    const long shift = digits - exponent;
    mpz_ui_pow_ui(factor.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(shift)));
    if (shift >= 0) {
      scaled *= factor;
    } else {
      scaled /= factor;
    }
    return BigInt((2 * scaled.get_num() + scaled.get_den()) /
                  (2 * scaled.get_den()));
  };

  BigInt mantissa = rounded_at(e);
  BigInt limit;
  mpz_ui_pow_ui(limit.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  if (mantissa >= limit) {
    ++e;
    mantissa = rounded_at(e);
  }

  std::string body = mantissa.get_str();  // exactly `digits` characters
  std::string out;
  if (e <= 0) {
    out = "0." + std::string(static_cast<std::size_t>(-e), '0') + body;
  } else if (e >= digits) {
    out = body + std::string(static_cast<std::size_t>(e - digits), '0');
  } else {
    out = body.substr(0, static_cast<std::size_t>(e)) + "." +
          body.substr(static_cast<std::size_t>(e));
  }
  return negative ? "-" + out : out;
}

}  // namespace wordavoid
