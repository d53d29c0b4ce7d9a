#include <complex>
#include <random>

#include "doctest.h"
#include "hurwitz/errors.hpp"
#include "hurwitz/poly.hpp"
#include "hurwitz/ratfunc.hpp"
#include "hurwitz/series.hpp"

using namespace hurwitz;

namespace {

Poly P(std::initializer_list<long> c) {
  std::vector<Rational> v;
  for (long x : c) v.emplace_back(x);
  return Poly(std::move(v));
}

Poly random_poly(std::mt19937_64& rng, int max_degree) {
  std::uniform_int_distribution<int> deg(0, max_degree), num(-5, 5), den(1, 4);
  std::vector<Rational> c(static_cast<std::size_t>(deg(rng)) + 1);
  for (auto& x : c) x = make_rational(num(rng), den(rng));
  return Poly(std::move(c));
}

// Random rational function with den(0) != 0.
RatFunc random_ratfunc(std::mt19937_64& rng) {
  Poly den = random_poly(rng, 2);
  while (den.coeff(0) == 0) den = random_poly(rng, 2);
  return RatFunc(random_poly(rng, 3), den);
}

}  // namespace

TEST_CASE("rational canonical form and parsing") {
  CHECK(to_string(make_rational(6, -4)) == "-3/2");
  CHECK(to_string(make_rational(8, 4)) == "2");
  CHECK(parse_rational(" -3/2 ") == make_rational(-3, 2));
  CHECK(parse_rational("7") == Rational(7));
  CHECK_THROWS_AS(make_rational(1, 0), Error);
  CHECK_THROWS_AS(parse_rational("1/x"), Error);
  CHECK(factorial(5) == 120);
  CHECK(pow(make_rational(2, 3), -2) == make_rational(9, 4));
}

TEST_CASE("polynomial arithmetic") {
  CHECK(P({1, 1}) + P({-1, 1}) == P({0, 2}));
  CHECK(P({0, 1}) * P({0, 1}) == P({0, 0, 1}));
  CHECK(P({3, 2}) + Poly() == P({3, 2}));
  CHECK((P({1, 1}) - P({1, 1})).is_zero());
  CHECK(Poly().degree() == -1);
  CHECK(P({1, 2, 3}).to_string() == "3*z^2 + 2*z + 1");
  auto [q, r] = Poly::divmod(P({-1, 0, 1}), P({-1, 1}));
  CHECK(q == P({1, 1}));
  CHECK(r.is_zero());
  CHECK(gcd(P({-1, 0, 1}), P({2, 2})) == P({1, 1}));
}

TEST_CASE("rational function arithmetic") {
  const RatFunc f(P({0, 1}), P({1, -1}));
  CHECK(f / f == RatFunc(Rational(1)));
  const RatFunc g(P({1}), P({1, 0, -2}));
  CHECK(g * RatFunc(P({1, 0, -2})) == RatFunc(Rational(1)));
  CHECK(f + RatFunc(Rational(1)) == RatFunc(P({1}), P({1, -1})));
  CHECK_THROWS_AS(f / RatFunc(), Error);
  CHECK(RatFunc(P({2}), P({4, 2})).den() == P({2, 1}));
}

TEST_CASE("rational function derivative") {
  CHECK(RatFunc(Poly::monomial(Rational(1), 5)).derivative() == RatFunc(Poly::monomial(Rational(5), 4)));
  CHECK(RatFunc(P({1}), P({1, -1})).derivative() == RatFunc(P({1}), P({1, -2, 1})));
  CHECK(RatFunc(Rational(7)).derivative().is_zero());
}

TEST_CASE("rational function series") {
  const std::vector<Rational> geo{1, 1, 1, 1};
  CHECK(RatFunc(P({1}), P({1, -1})).series(4).coeffs() == geo);
  const std::vector<Rational> s{0, 1, 0, 2, 0};
  CHECK(RatFunc(P({0, 1}), P({1, 0, -2})).series(5).coeffs() == s);
  CHECK(RatFunc(Rational(1)).series(3).coeffs() == std::vector<Rational>{1, 0, 0});
  CHECK_THROWS_AS(RatFunc(P({1}), P({0, 1})).series(3), Error);
}

TEST_CASE("series composition") {
  const Series s(std::vector<Rational>{0, 1, 1, 0}, 4);
  const Series id(std::vector<Rational>{0, 1, 0, 0}, 4);
  CHECK(compose(id, s) == s);
  const Series sq(std::vector<Rational>{0, 0, 1, 0}, 4);
  CHECK(compose(sq, s).coeffs() == std::vector<Rational>{0, 0, 1, 2});
  const Series bad(std::vector<Rational>{1, 1}, 2);
  CHECK_THROWS_AS(compose(sq, bad), Error);
  CHECK((s * Series(std::vector<Rational>{1}, 2)).order() == 2);
}

TEST_CASE("complex evaluation") {
  const RatFunc f(P({1}), P({1, -1}));
  CHECK(std::abs(f.eval(std::complex<double>(0.5, 0)) - 2.0) < 1e-15);
  CHECK(std::abs(RatFunc(P({0, 0, 1})).eval(std::complex<double>(0, 1)) + 1.0) < 1e-15);
  const RatFunc g(P({1}), P({1, 0, -2}));
  CHECK_THROWS_AS(g.eval(std::complex<double>(0.7071067811865476, 0)), Error);
}

TEST_CASE("ring identities on random inputs") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 25; ++trial) {
    const RatFunc f = random_ratfunc(rng), g = random_ratfunc(rng), h = random_ratfunc(rng);
    CHECK((f * g) * h == f * (g * h));
    CHECK((f + g) + h == f + (g + h));
    CHECK(f * (g + h) == f * g + f * h);
    CHECK((f * g).derivative() == f.derivative() * g + f * g.derivative());
    CHECK((f * g).series(8) == f.series(8) * g.series(8));
    const Series inner = RatFunc(P({0, 1, -1})).series(8);
    CHECK(compose(f.series(8) * g.series(8), inner) == compose(f.series(8), inner) * compose(g.series(8), inner));
  }
}
