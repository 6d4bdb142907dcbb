#ifndef WORDAVOID_POLYNOMIAL_HPP
#define WORDAVOID_POLYNOMIAL_HPP

#include <cstddef>
#include <limits>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "wordavoid/rational.hpp"

namespace wordavoid {

/// Dense univariate polynomial with rational coefficients, stored in
/// ascending order with no trailing zeros. The zero polynomial has no
/// coefficients.
class Polynomial {
 public:
  /// Degree reported for the zero polynomial.
  static constexpr int kMinusInfinity = std::numeric_limits<int>::min();

  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> ascending);
  Polynomial(std::initializer_list<long> ascending);

  static Polynomial constant(const Rational& c);
  static Polynomial monomial(const Rational& c, std::size_t power);
  /// The polynomial z.
  static Polynomial variable() { return monomial(1, 1); }

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const {
    return coeffs_.empty() ? kMinusInfinity
                           : static_cast<int>(coeffs_.size()) - 1;
  }
  /// Coefficient of z^k; zero beyond the degree.
  Rational coefficient(std::size_t k) const;
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  const Rational& leading() const { return coeffs_.back(); }

  Rational operator()(const Rational& point) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Rational& scalar);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) {
    return a += b;
  }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) {
    return a -= b;
  }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& s) {
    return a *= s;
  }
  friend Polynomial operator*(const Rational& s, Polynomial a) {
    return a *= s;
  }

  /// Euclidean division; throws InvalidArgument when `divisor` is zero.
  std::pair<Polynomial, Polynomial> divmod(const Polynomial& divisor) const;

  /// Scaled so the leading coefficient is 1; zero stays zero.
  Polynomial monic() const;

  /// x^d * p(1/x) for d >= degree(); maps coefficient k to d - k.
  Polynomial reversed(std::size_t d) const;

  /// "[c0, c1, ...]" with coefficients as integers or p/q.
  std::string to_string() const;
  static Polynomial parse(std::string_view text);

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  void trim();

  std::vector<Rational> coeffs_;
};

/// Monic gcd; gcd(0, 0) = 0.
Polynomial gcd(Polynomial a, Polynomial b);

}  // namespace wordavoid

#endif  // WORDAVOID_POLYNOMIAL_HPP
