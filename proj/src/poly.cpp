#include "hurwitz/poly.hpp"

#include <algorithm>
#include <sstream>

#include "hurwitz/errors.hpp"

namespace hurwitz {

Poly::Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Poly Poly::constant(const Rational& c) { return Poly(std::vector<Rational>{c}); }

Poly Poly::monomial(const Rational& c, int degree) {
  require(degree >= 0, "monomial degree must be non-negative");
  std::vector<Rational> v(static_cast<std::size_t>(degree) + 1);
  v.back() = c;
  return Poly(std::move(v));
}

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational Poly::coeff(int i) const {
  if (i < 0 || i > degree()) return Rational(0);
  return coeffs_[static_cast<std::size_t>(i)];
}

const Rational& Poly::leading() const {
  require(!is_zero(), "leading coefficient of the zero polynomial");
  return coeffs_.back();
}

Poly Poly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<long>(i);
  return Poly(std::move(d));
}

Poly Poly::monic() const {
  if (is_zero()) return {};
  Poly r = *this;
  const Rational lc = leading();
  for (auto& c : r.coeffs_) c /= lc;
  return r;
}

Rational Poly::eval(const Rational& z) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
  return acc;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Poly& Poly::operator+=(const Poly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

Poly& Poly::operator*=(const Poly& rhs) {
  if (is_zero() || rhs.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rational> out(coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * rhs.coeffs_[j];
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

Poly& Poly::operator*=(const Rational& s) {
  for (auto& c : coeffs_) c *= s;
  trim();
  return *this;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& num, const Poly& den) {
  if (den.is_zero()) fail(ErrorKind::DivisionByZero, "polynomial division by zero");
  if (num.degree() < den.degree()) return {Poly(), num};
  std::vector<Rational> rem = num.coeffs_;
  std::vector<Rational> quot(static_cast<std::size_t>(num.degree() - den.degree() + 1));
  const Rational& lc = den.leading();
  const int dd = den.degree();
  for (int k = num.degree() - dd; k >= 0; --k) {
    const Rational q = rem[static_cast<std::size_t>(k + dd)] / lc;
    quot[static_cast<std::size_t>(k)] = q;
    if (q == 0) continue;
    for (int j = 0; j <= dd; ++j) rem[static_cast<std::size_t>(k + j)] -= q * den.coeffs_[static_cast<std::size_t>(j)];
  }
  return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Poly gcd(Poly p, Poly q) {
  while (!q.is_zero()) {
    Poly r = Poly::divmod(p, q).second;
    p = std::move(q);
    q = r.monic();
  }
  return p.monic();
}

std::string Poly::to_string(char var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Rational& c = coeffs_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    first = false;
    const Rational mag = abs(c);
    if (i == 0) {
      os << hurwitz::to_string(mag);
      continue;
    }
    if (mag != 1) os << hurwitz::to_string(mag) << "*";
    os << var;
    if (i >= 2) os << "^" << i;
  }
  return os.str();
}

}  // namespace hurwitz
