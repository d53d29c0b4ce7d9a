#pragma once

#include <complex>
#include <string>

#include "hurwitz/errors.hpp"
#include "hurwitz/poly.hpp"
#include "hurwitz/series.hpp"

namespace hurwitz {

/// Reduced rational function num/den with a monic denominator. Equality is
/// structural because the representation is canonical.
class RatFunc {
 public:
  RatFunc() : den_(Poly::constant(Rational(1))) {}
  RatFunc(Poly num, Poly den);
  explicit RatFunc(Poly num) : RatFunc(std::move(num), Poly::constant(Rational(1))) {}
  explicit RatFunc(const Rational& c) : RatFunc(Poly::constant(c)) {}

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  RatFunc derivative() const;

  /// Taylor coefficients at 0; PoleAtOrigin if den(0) = 0.
  Series series(int order) const;

  /// NearPole when |den(z)| < pole_threshold.
  template <class T>
  std::complex<T> eval(std::complex<T> z, T pole_threshold = T(1e-12)) const {
    const std::complex<T> d = den_.eval(z);
    if (std::abs(d) < pole_threshold) fail(ErrorKind::NearPole, "rational function evaluated at a pole");
    return num_.eval(z) / d;
  }

  RatFunc operator-() const;
  friend RatFunc operator+(const RatFunc& f, const RatFunc& g);
  friend RatFunc operator-(const RatFunc& f, const RatFunc& g);
  friend RatFunc operator*(const RatFunc& f, const RatFunc& g);
  /// DivisionByZero when g = 0.
  friend RatFunc operator/(const RatFunc& f, const RatFunc& g);
  friend bool operator==(const RatFunc& f, const RatFunc& g) {
    return f.num_ == g.num_ && f.den_ == g.den_;
  }

  std::string to_string(char var = 'z') const;

 private:
  Poly num_;
  Poly den_;
};

}  // namespace hurwitz
