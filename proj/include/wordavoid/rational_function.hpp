#ifndef WORDAVOID_RATIONAL_FUNCTION_HPP
#define WORDAVOID_RATIONAL_FUNCTION_HPP

#include <string>

#include "wordavoid/polynomial.hpp"

namespace wordavoid {

/// num/den in lowest terms with a monic denominator, so equality is
/// structural.
class RationalFunction {
 public:
  RationalFunction() : den_(Polynomial::constant(1)) {}
  RationalFunction(const Rational& c)  // NOLINT: implicit scalar embedding
      : num_(Polynomial::constant(c)), den_(Polynomial::constant(1)) {}
  RationalFunction(long c) : RationalFunction(Rational(c)) {}  // NOLINT
  RationalFunction(Polynomial p)  // NOLINT: implicit polynomial embedding
      : num_(std::move(p)), den_(Polynomial::constant(1)) {}
  /// Throws InvalidArgument when `den` is zero.
  RationalFunction(Polynomial num, Polynomial den);

  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  /// True when the denominator is the constant 1.
  bool is_polynomial() const { return den_.degree() == 0; }

  /// Throws InvalidArgument when the denominator vanishes at `point`.
  Rational operator()(const Rational& point) const;

  RationalFunction operator-() const;
  /// Throws InvalidArgument for the zero function.
  RationalFunction inverse() const;

  RationalFunction& operator+=(const RationalFunction& o);
  RationalFunction& operator-=(const RationalFunction& o);
  RationalFunction& operator*=(const RationalFunction& o);
  RationalFunction& operator/=(const RationalFunction& o);

  friend RationalFunction operator+(RationalFunction a,
                                    const RationalFunction& b) {
    return a += b;
  }
  friend RationalFunction operator-(RationalFunction a,
                                    const RationalFunction& b) {
    return a -= b;
  }
  friend RationalFunction operator*(RationalFunction a,
                                    const RationalFunction& b) {
    return a *= b;
  }
  friend RationalFunction operator/(RationalFunction a,
                                    const RationalFunction& b) {
    return a /= b;
  }

  /// "(num) / (den)" using the bracketed coefficient-list form.
  std::string to_string() const;

  friend bool operator==(const RationalFunction&,
                         const RationalFunction&) = default;

 private:
  void normalize();

  Polynomial num_;
  Polynomial den_;
};

}  // namespace wordavoid

#endif  // WORDAVOID_RATIONAL_FUNCTION_HPP
