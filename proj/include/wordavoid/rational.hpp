#ifndef WORDAVOID_RATIONAL_HPP
#define WORDAVOID_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace wordavoid {

/// Arbitrary-precision rational, always kept in lowest terms.
using Rational = mpq_class;
using BigInt = mpz_class;

/// "p/q" or an integer when q == 1.
std::string to_string(const Rational& value);
std::string to_string(const BigInt& value);

/// Accepts "p", "-p" or "p/q" with q != 0. Throws InvalidArgument otherwise.
Rational parse_rational(std::string_view text);

/// Rounded (half away from zero) decimal with `digits` significant digits.
std::string to_decimal(const Rational& value, int digits);

}  // namespace wordavoid

#endif  // WORDAVOID_RATIONAL_HPP
