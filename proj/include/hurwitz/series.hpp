#pragma once

#include <string>
#include <vector>

#include "hurwitz/poly.hpp"
#include "hurwitz/rational.hpp"

namespace hurwitz {

/// Truncated power series: coefficients of t^0 .. t^(order-1). The truncation
/// order is part of the value, and binary operations keep the smaller one.
class Series {
 public:
  Series() = default;
  explicit Series(int order);
  /// Pads or truncates coeffs to exactly `order` entries.
  Series(std::vector<Rational> coeffs, int order);

  static Series from_poly(const Poly& p, int order);

  int order() const { return order_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  const Rational& operator[](int i) const { return coeffs_.at(static_cast<std::size_t>(i)); }
  Rational& operator[](int i) { return coeffs_.at(static_cast<std::size_t>(i)); }

  Series truncated(int order) const;

  Series operator-() const;
  friend Series operator+(const Series& lhs, const Series& rhs);
  friend Series operator-(const Series& lhs, const Series& rhs);
  friend Series operator*(const Series& lhs, const Series& rhs);
  friend Series operator*(const Rational& s, const Series& rhs);
  friend bool operator==(const Series& lhs, const Series& rhs) {
    return lhs.order_ == rhs.order_ && lhs.coeffs_ == rhs.coeffs_;
  }

  std::string to_string(char var = 'x') const;

 private:
  int order_ = 0;
  std::vector<Rational> coeffs_;
};

/// outer(inner(t)); inner must have a zero constant term (NonzeroConstantTerm).
Series compose(const Series& outer, const Series& inner);

}  // namespace hurwitz
