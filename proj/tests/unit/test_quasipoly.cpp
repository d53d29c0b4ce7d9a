#include <algorithm>
#include <numeric>

#include "doctest.h"
#include "hurwitz/cutjoin.hpp"
#include "hurwitz/errors.hpp"
#include "hurwitz/quasipoly.hpp"

using namespace hurwitz;

TEST_CASE("multipoly arithmetic") {
  const MultiPoly x = MultiPoly::variable(2, 0), y = MultiPoly::variable(2, 1);
  const MultiPoly p = (x + y) * (x + y) - MultiPoly::constant(2, Rational(3));
  CHECK(p.total_degree() == 2);
  CHECK(p.coeff({1, 1}) == 2);
  CHECK(p.eval({Rational(1), Rational(2)}) == 6);
  CHECK(p.at_zero(1) == MultiPoly::variable(1, 0) * MultiPoly::variable(1, 0) - MultiPoly::constant(1, Rational(3)));
  CHECK(p.derivative_at_zero(1) == MultiPoly::variable(1, 0) * Rational(2));
  CHECK(p.permuted({1, 0}) == p);
  CHECK(MultiPoly(3).total_degree() == -1);
  CHECK(p.to_string() == "m1^2 + 2*m1*m2 + m2^2 - 3");
}

TEST_CASE("q_value matches the unstable formulas") {
  for (int a = 1; a <= 3; ++a)
    for (int m1 = 1; m1 <= 9; ++m1) {
      CHECK(q_value(a, 0, {m1}) == q_unstable(a, {Rational(m1)}));
      for (int m2 = 1; m2 <= 7; ++m2) CHECK(q_value(a, 0, {m1, m2}) == q_unstable(a, {Rational(m1), Rational(m2)}));
    }
}

TEST_CASE("extract_Q genus-0 closed forms") {
  for (int a = 1; a <= 3; ++a) {
    const auto q3 = extract_Q(a, 0, 3);
    CHECK(q3.degree_bound == 0);
    CHECK(q3.poly({a, a, a}) == MultiPoly::constant(3, make_rational(1, a)));
    CHECK(q3.polys.size() == static_cast<std::size_t>(a * a * a));
    for (int n = 3; n <= 5; ++n) CHECK(extract_Q(a, 0, n).poly(std::vector<int>(n, a)) == genus0_closed(a, n));
  }
  const MultiPoly four = genus0_closed(1, 4);
  CHECK(four.to_string() == "m1 + m2 + m3 + m4");
  CHECK(genus0_closed(2, 5).coeff({1, 1, 0, 0, 0}) == 1);
  CHECK_THROWS_AS(genus0_closed(2, 2), Error);
}

TEST_CASE("extract_Q reproduces the Hurwitz numbers") {
  const auto q = extract_Q(2, 1, 1);
  for (int mu : {2, 4, 6, 8}) {
    const Rational h = hurwitz_normalized(2, 1, MuTuple({mu}));
    const int b = mu / 2;
    Rational c = pow(Rational(mu), b) / Rational(factorial(static_cast<unsigned long>(b)));
    CHECK(q.eval({mu}) * pow(Rational(2), 0) * c == h);
  }
  // Round trip on a wider grid for every class.
  for (int a = 1; a <= 3; ++a)
    for (auto [g, n] : {std::pair{0, 4}, {1, 2}}) {
      const auto f = extract_Q(a, g, n);
      for (const auto& mu : ordered_tuples(n, 9)) {
        int frac = 0;
        Rational c(1);
        for (int m : mu.parts()) {
          frac += m % a;
          c *= pow(Rational(m), m / a) / Rational(factorial(static_cast<unsigned long>(m / a)));
        }
        const Rational h = hurwitz_normalized(a, g, mu);
        if (h == 0) {
          CHECK(f.eval(mu.parts()) == 0);
          continue;
        }
        CHECK(pow(Rational(a), 1 - g + frac / a) * f.eval(mu.parts()) * c == h);
      }
    }
}

TEST_CASE("quasi-polynomial families are symmetric") {
  const auto f = extract_Q(3, 0, 4);
  std::vector<int> perm{2, 0, 3, 1};
  for (const auto& [r, p] : f.polys) {
    std::vector<int> rp(r.size());
    for (std::size_t i = 0; i < r.size(); ++i) rp[i] = r[static_cast<std::size_t>(perm[i])];
    CHECK(f.poly(rp) == p.permuted(perm));
    CHECK(p.total_degree() <= f.degree_bound);
  }
}

TEST_CASE("quasi-polynomial JSON round trip") {
  const auto f = extract_Q(2, 1, 2);
  const auto j = f.to_json();
  CHECK(j["schema_version"] == 1);
  const auto back = QuasiPolyFamily::from_json(j);
  CHECK(back.polys == f.polys);
  CHECK(back.degree_bound == 2);
  CHECK_THROWS_AS(QuasiPolyFamily::from_json(nlohmann::json{{"schema_version", 1}}), Error);
}

TEST_CASE("string and dilaton equations") {
  for (int a = 1; a <= 3; ++a)
    for (auto [g, n] : {std::pair{0, 3}, {1, 1}, {1, 2}}) {
      CAPTURE(a);
      CAPTURE(g);
      CAPTURE(n);
      const auto s = check_string(a, g, n);
      CHECK(s.pass);
      const auto d = check_dilaton(a, g, n);
      CHECK(d.pass);
      CHECK(d.params["opposite_sign_holds"] == false);
    }
  for (int a = 1; a <= 3; ++a)
    for (int n : {1, 2}) {
      CAPTURE(a);
      CAPTURE(n);
      CHECK(check_string(a, 0, n).pass);
      CHECK(check_dilaton(a, 0, n).pass);
    }
}

TEST_CASE("extract_Q rejects unstable input") {
  CHECK_THROWS_AS(extract_Q(2, 0, 2), Error);
  CHECK_THROWS_AS(check_string(2, 1, 0), Error);
}
