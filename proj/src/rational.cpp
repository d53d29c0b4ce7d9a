#include "hurwitz/rational.hpp"

#include <cctype>

#include "hurwitz/errors.hpp"

namespace hurwitz {

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) fail(ErrorKind::DivisionByZero, "rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational make_rational(long num, long den) { return make_rational(Integer(num), Integer(den)); }

std::string to_string(const Rational& q) { return q.get_str(); }
std::string to_string(const Integer& z) { return z.get_str(); }

Rational parse_rational(std::string_view text) {
  std::size_t b = 0, e = text.size();
  while (b < e && std::isspace(static_cast<unsigned char>(text[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(text[e - 1]))) --e;
  std::string s(text.substr(b, e - b));
  if (s.empty()) fail(ErrorKind::InvalidInput, "empty rational literal");
  const auto slash = s.find('/');
  auto parse_int = [&](const std::string& part) {
    Integer z;
    if (part.empty() || z.set_str(part, 10) != 0)
      fail(ErrorKind::InvalidInput, "malformed rational literal '" + s + "'");
    return z;
  };
  if (slash == std::string::npos) return Rational(parse_int(s));
  return make_rational(parse_int(s.substr(0, slash)), parse_int(s.substr(slash + 1)));
}

Integer factorial(unsigned long n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

Rational pow(const Rational& base, long exponent) {
  if (exponent < 0) {
    if (base == 0) fail(ErrorKind::DivisionByZero, "zero to a negative power");
    return pow(Rational(1) / base, -exponent);
  }
  Integer n, d;
  mpz_pow_ui(n.get_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(d.get_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(exponent));
  return Rational(n, d);
}

long double to_long_double(const Rational& q) {
  // Two-term split keeps roughly 106 bits, enough for an 80-bit long double.
  const double hi = q.get_d();
  const Rational rest = q - Rational(hi);
  return static_cast<long double>(hi) + static_cast<long double>(rest.get_d());
}

}  // namespace hurwitz
