#pragma once

#include <complex>
#include <string>
#include <utility>
#include <vector>

#include "hurwitz/rational.hpp"

namespace hurwitz {

/// Dense univariate polynomial over Q. coeffs()[i] is the coefficient of z^i;
/// trailing zeros are always stripped, so the zero polynomial is empty.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rational> coeffs);

  static Poly constant(const Rational& c);
  static Poly monomial(const Rational& c, int degree);
  static Poly variable() { return monomial(Rational(1), 1); }

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  /// Zero beyond the degree.
  Rational coeff(int i) const;
  const Rational& leading() const;

  Poly derivative() const;
  Poly monic() const;
  Rational eval(const Rational& z) const;

  template <class T>
  std::complex<T> eval(std::complex<T> z) const {
    std::complex<T> acc{0};
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
      acc = acc * z + static_cast<T>(to_long_double(*it));
    return acc;
  }

  Poly operator-() const;
  Poly& operator+=(const Poly& rhs);
  Poly& operator-=(const Poly& rhs);
  Poly& operator*=(const Poly& rhs);
  Poly& operator*=(const Rational& s);

  friend Poly operator+(Poly lhs, const Poly& rhs) { return lhs += rhs; }
  friend Poly operator-(Poly lhs, const Poly& rhs) { return lhs -= rhs; }
  friend Poly operator*(Poly lhs, const Poly& rhs) { return lhs *= rhs; }
  friend Poly operator*(Poly lhs, const Rational& s) { return lhs *= s; }
  friend Poly operator*(const Rational& s, Poly rhs) { return rhs *= s; }
  friend bool operator==(const Poly& lhs, const Poly& rhs) { return lhs.coeffs_ == rhs.coeffs_; }

  /// Euclidean division; throws DivisionByZero for a zero divisor.
  static std::pair<Poly, Poly> divmod(const Poly& num, const Poly& den);

  std::string to_string(char var = 'z') const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Monic gcd; gcd(0, 0) = 0.
Poly gcd(Poly p, Poly q);

}  // namespace hurwitz
