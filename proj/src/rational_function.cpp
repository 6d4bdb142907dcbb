#include "wordavoid/rational_function.hpp"

#include "wordavoid/errors.hpp"

namespace wordavoid {

RationalFunction::RationalFunction(Polynomial num, Polynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) {
    throw InvalidArgument("rational function with zero denominator");
  }
  normalize();
}

void RationalFunction::normalize() {
  if (num_.is_zero()) {
    den_ = Polynomial::constant(1);
    return;
  }
  if (den_.degree() > 0 && num_.degree() > 0) {
    Polynomial g = gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = num_.divmod(g).first;
      den_ = den_.divmod(g).first;
    }
  }
  Rational inv = 1 / den_.leading();
  if (inv != 1) {
    num_ *= inv;
    den_ *= inv;
  }
}

Rational RationalFunction::operator()(const Rational& point) const {
  Rational d = den_(point);
  if (d == 0) {
    throw InvalidArgument("rational function has a pole at " +
                          wordavoid::to_string(point));
  }
  return num_(point) / d;
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction out = *this;
  out.num_ = -out.num_;
  return out;
}

RationalFunction RationalFunction::inverse() const {
  if (is_zero()) {
    throw InvalidArgument("division by the zero rational function");
  }
  return RationalFunction(den_, num_);
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
  if (o.is_zero()) {
    return *this;
  }
  if (den_ == o.den_) {
    num_ += o.num_;
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
  }
  normalize();
  return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) {
  return *this += -o;
}

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
  if (is_zero() || o.is_zero()) {
    *this = RationalFunction();
    return *this;
  }
  // Cross-cancel before multiplying to keep degrees small.
  Polynomial g1 = gcd(num_, o.den_);
  Polynomial g2 = gcd(o.num_, den_);
  Polynomial n1 = g1.degree() > 0 ? num_.divmod(g1).first : num_;
  Polynomial d2 = g1.degree() > 0 ? o.den_.divmod(g1).first : o.den_;
  Polynomial n2 = g2.degree() > 0 ? o.num_.divmod(g2).first : o.num_;
  Polynomial d1 = g2.degree() > 0 ? den_.divmod(g2).first : den_;
  num_ = n1 * n2;
  den_ = d1 * d2;
  Rational inv = 1 / den_.leading();
  num_ *= inv;
  den_ *= inv;
  return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& o) {
  return *this *= o.inverse();
}

std::string RationalFunction::to_string() const {
  return "(" + num_.to_string() + ") / (" + den_.to_string() + ")";
}

}  // namespace wordavoid
