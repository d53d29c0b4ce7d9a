#include "hurwitz/series.hpp"

#include <algorithm>
#include <sstream>

#include "hurwitz/errors.hpp"

namespace hurwitz {

Series::Series(int order) : order_(order), coeffs_(static_cast<std::size_t>(std::max(order, 0))) {
  require(order >= 0, "series order must be non-negative");
}

Series::Series(std::vector<Rational> coeffs, int order) : order_(order), coeffs_(std::move(coeffs)) {
  require(order >= 0, "series order must be non-negative");
  coeffs_.resize(static_cast<std::size_t>(order));
}

Series Series::from_poly(const Poly& p, int order) { return Series(p.coeffs(), order); }

Series Series::truncated(int order) const {
  require(order <= order_, "cannot extend a truncated series");
  return Series(coeffs_, order);
}

Series Series::operator-() const {
  Series r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Series operator+(const Series& lhs, const Series& rhs) {
  Series r(std::min(lhs.order_, rhs.order_));
  for (int i = 0; i < r.order_; ++i) r[i] = lhs[i] + rhs[i];
  return r;
}

Series operator-(const Series& lhs, const Series& rhs) {
  Series r(std::min(lhs.order_, rhs.order_));
  for (int i = 0; i < r.order_; ++i) r[i] = lhs[i] - rhs[i];
  return r;
}

Series operator*(const Series& lhs, const Series& rhs) {
  Series r(std::min(lhs.order_, rhs.order_));
  for (int i = 0; i < r.order_; ++i) {
    if (lhs[i] == 0) continue;
    for (int j = 0; i + j < r.order_; ++j) r[i + j] += lhs[i] * rhs[j];
  }
  return r;
}

Series operator*(const Rational& s, const Series& rhs) {
  Series r = rhs;
  for (auto& c : r.coeffs_) c *= s;
  return r;
}

Series compose(const Series& outer, const Series& inner) {
  if (inner.order() > 0 && inner[0] != 0)
    fail(ErrorKind::NonzeroConstantTerm, "inner series of a composition must vanish at 0");
  // A zero-constant inner series raises the valuation by one per power, so
  // outer coefficients beyond inner.order() cannot contribute.
  const int order = std::min(outer.order(), inner.order());
  Series acc(order);
  for (int k = order - 1; k >= 0; --k) {
    acc = acc * inner.truncated(order);
    acc[0] += outer[k];
  }
  return acc;
}

std::string Series::to_string(char var) const {
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < order_; ++i) {
    if (coeffs_[static_cast<std::size_t>(i)] == 0) continue;
    if (!first) os << " + ";
    first = false;
    os << hurwitz::to_string(coeffs_[static_cast<std::size_t>(i)]);
    if (i > 0) os << "*" << var << "^" << i;
  }
  if (first) os << "0";
  os << " + O(" << var << "^" << order_ << ")";
  return os.str();
}

}  // namespace hurwitz
