#include "wordavoid/polynomial.hpp"

#include <algorithm>
#include <cctype>

#include "wordavoid/errors.hpp"

namespace wordavoid {

Polynomial::Polynomial(std::vector<Rational> ascending)
    : coeffs_(std::move(ascending)) {
  trim();
}

Polynomial::Polynomial(std::initializer_list<long> ascending) {
  coeffs_.reserve(ascending.size());
  for (long c : ascending) {
    coeffs_.emplace_back(c);
  }
  trim();
}

Polynomial Polynomial::constant(const Rational& c) {
  return Polynomial(std::vector<Rational>{c});
}

Polynomial Polynomial::monomial(const Rational& c, std::size_t power) {
  std::vector<Rational> coeffs(power + 1);
  coeffs[power] = c;
  return Polynomial(std::move(coeffs));
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) {
    coeffs_.pop_back();
  }
}

Rational Polynomial::coefficient(std::size_t k) const {
  return k < coeffs_.size() ? coeffs_[k] : Rational(0);
}

Rational Polynomial::operator()(const Rational& point) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * point + *it;
  }
  return acc;
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& c : out.coeffs_) {
    c = -c;
  }
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  if (other.coeffs_.size() > coeffs_.size()) {
    coeffs_.resize(other.coeffs_.size());
  }
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) {
    coeffs_[i] += other.coeffs_[i];
  }
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  if (other.coeffs_.size() > coeffs_.size()) {
    coeffs_.resize(other.coeffs_.size());
  }
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) {
    coeffs_[i] -= other.coeffs_[i];
  }
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& c : coeffs_) {
    c *= scalar;
  }
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) {
    return {};
  }
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) {
      continue;
    }
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return Polynomial(std::move(out));
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(
    const Polynomial& divisor) const {
  if (divisor.is_zero()) {
    throw InvalidArgument("polynomial division by zero");
  }
  std::vector<Rational> rem = coeffs_;
  const std::size_t dsize = divisor.coeffs_.size();
  if (rem.size() < dsize) {
    return {Polynomial{}, *this};
  }
  std::vector<Rational> quot(rem.size() - dsize + 1);
  const Rational& lead = divisor.leading();
  for (std::size_t k = quot.size(); k-- > 0;) {
    Rational q = rem[k + dsize - 1] / lead;
    if (q == 0) {
      continue;
    }
    quot[k] = q;
    for (std::size_t j = 0; j < dsize; ++j) {
      rem[k + j] -= q * divisor.coeffs_[j];
    }
  }
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial Polynomial::monic() const {
  if (is_zero()) {
    return {};
  }
  Rational inv = 1 / leading();
  return *this * inv;
}

Polynomial Polynomial::reversed(std::size_t d) const {
  if (!is_zero() && static_cast<std::size_t>(degree()) > d) {
    throw InvalidArgument("reversal degree below polynomial degree");
  }
  std::vector<Rational> out(d + 1);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    out[d - k] = coeffs_[k];
  }
  return Polynomial(std::move(out));
}

std::string Polynomial::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i > 0) {
      out += ", ";
    }
    out += wordavoid::to_string(coeffs_[i]);
  }
  out += "]";
  return out;
}

Polynomial Polynomial::parse(std::string_view text) {
  auto strip = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
      s.remove_prefix(1);
    }
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
      s.remove_suffix(1);
    }
    return s;
  };
  text = strip(text);
  if (text.size() < 2 || text.front() != '[' || text.back() != ']') {
    throw InvalidArgument("polynomial must be a bracketed list: '" +
                          std::string(text) + "'");
  }
  text = strip(text.substr(1, text.size() - 2));
  std::vector<Rational> coeffs;
  while (!text.empty()) {
    const auto comma = text.find(',');
    coeffs.push_back(parse_rational(strip(text.substr(0, comma))));
    if (comma == std::string_view::npos) {
      break;
    }
    text = text.substr(comma + 1);
    if (strip(text).empty()) {
      throw InvalidArgument("trailing comma in polynomial");
    }
  }
  return Polynomial(std::move(coeffs));
}

Polynomial gcd(Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    Polynomial r = a.divmod(b).second;
    a = std::move(b);
    b = r.monic();
  }
  return a.monic();
}

}  // namespace wordavoid
