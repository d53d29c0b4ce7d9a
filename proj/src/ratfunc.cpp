#include "hurwitz/ratfunc.hpp"

namespace hurwitz {

RatFunc::RatFunc(Poly num, Poly den) {
  if (den.is_zero()) fail(ErrorKind::DivisionByZero, "rational function with zero denominator");
  if (num.is_zero()) {
    den_ = Poly::constant(Rational(1));
    return;
  }
  const Poly g = gcd(num, den);
  if (g.degree() > 0) {
    num = Poly::divmod(num, g).first;
    den = Poly::divmod(den, g).first;
  }
  const Rational lc = den.leading();
  num_ = num * (Rational(1) / lc);
  den_ = den.monic();
}

RatFunc RatFunc::derivative() const {
  return RatFunc(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

Series RatFunc::series(int order) const {
  const Rational d0 = den_.coeff(0);
  if (d0 == 0) fail(ErrorKind::PoleAtOrigin, "rational function has a pole at 0");
  // Solve den * s = num coefficient by coefficient.
  Series s(order);
  for (int i = 0; i < order; ++i) {
    Rational acc = num_.coeff(i);
    for (int j = 1; j <= std::min(i, den_.degree()); ++j) acc -= den_.coeff(j) * s[i - j];
    s[i] = acc / d0;
  }
  return s;
}

RatFunc RatFunc::operator-() const { return RatFunc(-num_, den_); }

RatFunc operator+(const RatFunc& f, const RatFunc& g) {
  return RatFunc(f.num_ * g.den_ + g.num_ * f.den_, f.den_ * g.den_);
}

RatFunc operator-(const RatFunc& f, const RatFunc& g) {
  return RatFunc(f.num_ * g.den_ - g.num_ * f.den_, f.den_ * g.den_);
}

RatFunc operator*(const RatFunc& f, const RatFunc& g) {
  return RatFunc(f.num_ * g.num_, f.den_ * g.den_);
}

RatFunc operator/(const RatFunc& f, const RatFunc& g) {
  if (g.is_zero()) fail(ErrorKind::DivisionByZero, "division by the zero rational function");
  return RatFunc(f.num_ * g.den_, f.den_ * g.num_);
}

std::string RatFunc::to_string(char var) const {
  if (den_.degree() == 0) return num_.to_string(var);
  return "(" + num_.to_string(var) + ")/(" + den_.to_string(var) + ")";
}

}  // namespace hurwitz
