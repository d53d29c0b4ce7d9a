#include <cmath>
#include <numbers>

#include "doctest.h"
#include "hurwitz/cutjoin.hpp"
#include "hurwitz/errors.hpp"
#include "hurwitz/identities.hpp"
#include "hurwitz/xibasis.hpp"

using namespace hurwitz;

namespace {

Poly one_minus_az(int a) { return Poly::constant(Rational(1)) - Poly::monomial(Rational(a), a); }

}  // namespace

TEST_CASE("xi ladder closed forms") {
  for (int a = 1; a <= 3; ++a)
    for (int r = 1; r <= a; ++r) {
      CHECK(xi_ratfunc(a, r, -1) == RatFunc(Poly::monomial(make_rational(1, r), r)));
      CHECK(xi_ratfunc(a, r, 0) == RatFunc(Poly::monomial(Rational(1), r), one_minus_az(a)));
    }
  // z/(1-z)^3 for a = r = 1, k = 1.
  const Poly d = one_minus_az(1);
  CHECK(xi_ratfunc(1, 1, 1) == RatFunc(Poly::variable(), d * d * d));
  CHECK(xi_ratfunc(3, 3, 2, XiConvention::Box) == RatFunc(Rational(3)) * xi_ratfunc(3, 3, 2));
  CHECK(xi_ratfunc(3, 2, 2, XiConvention::Box) == xi_ratfunc(3, 2, 2));
  CHECK_THROWS_AS(xi_ratfunc(2, 3, 0), Error);
  CHECK_THROWS_AS(xi_ratfunc(2, 1, -2), Error);
}

TEST_CASE("f series and z(x)") {
  for (int a = 1; a <= 4; ++a) {
    CHECK(xi_series(a, 1, 0, a + 2)[a + 1] == a + 1);
    for (int r = 1; r <= a; ++r)
      for (int k = 0; k <= 3; ++k) CHECK(xi_series(a, r, k, r + 1)[r] == pow(Rational(r), k));
  }
  const Series z1 = z_of_x_series(1, 5);
  CHECK(z1.coeffs() == std::vector<Rational>{0, 1, 1, make_rational(3, 2), make_rational(8, 3)});
  for (int a = 2; a <= 4; ++a) CHECK(z_of_x_series(a, 5)[2] == 0);
  for (int a = 1; a <= 4; ++a) CHECK(check_inverse_series(a, 25).pass);
}

TEST_CASE("series identities") {
  for (int a = 1; a <= 3; ++a) {
    CHECK(check_basis_consistency(a, 3, 15).pass);
    CHECK(check_one_point_genus0(a, 13).pass);
    CHECK(check_two_point_genus0(a, 12).pass);
    CHECK(check_k_form(a, 4, 6).pass);
  }
  for (int a = 2; a <= 3; ++a) CHECK(check_cactus_series(a, 7).pass);
}

TEST_CASE("fit of F_{1,1}") {
  for (int a = 1; a <= 4; ++a) {
    const XiExpansion e = fit_F(a, 1, 1);
    CHECK(e.kmax == 1);
    CHECK(e.coeffs.size() == 2);
    const auto box = e.coeffs_in(XiConvention::Box);
    CHECK(box.at({{a}, {1}}) == make_rational(a, 24));
    CHECK(box.at({{a}, {0}}) == make_rational(-1, 24));
    CHECK(e.coeff({a}, {1}) == make_rational(a * a, 24));
    const auto brackets = hodge_brackets(e);
    CHECK(brackets.at({{a}, {0}}) == make_rational(-1, 24));
    CHECK(brackets.at({{a}, {1}}) == make_rational(a, 24));
  }
}

TEST_CASE("fit structure and extrapolation") {
  const XiExpansion f03 = fit_F(3, 0, 3);
  for (const auto& [idx, c] : f03.coeffs) {
    CHECK(idx.second == std::vector<int>{0, 0, 0});
    int s = 0;
    for (int r : idx.first) s += r;
    CHECK(s % 3 == 0);
  }
  const XiExpansion f12 = fit_F(2, 1, 2);
  for (const auto& [idx, c] : f12.coeffs) CHECK(f12.coeff({idx.first[1], idx.first[0]}, {idx.second[1], idx.second[0]}) == c);
  CHECK(count_prediction_mismatches(f12, f12.kmax + 2) == 0);
  CHECK(count_prediction_mismatches(fit_F(2, 2, 1), 4) == 0);
  CHECK(f12.predict({3, 1}) == hurwitz_normalized(2, 1, {3, 1}));
  try {
    fit_F(2, 1, 1, 0);
    FAIL("expected a nonzero residual");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::FitResidualNonzero);
  }
  CHECK_THROWS_AS(fit_F(2, 0, 2), Error);
}

TEST_CASE("xi expansion json round trip") {
  const XiExpansion e = fit_F(2, 1, 2);
  const XiExpansion back = XiExpansion::from_json(e.to_json());
  CHECK(back.coeffs == e.coeffs);
  CHECK(back.kmax == e.kmax);
  CHECK(e.to_json().at("schema_version") == 1);
}

TEST_CASE("exact omega") {
  const XiExpansion f03 = fit_F(2, 0, 3);
  const std::vector<ComplexPoint> z{{0.2, 0.1}, {-0.1, 0.25}, {0.05, -0.3}};
  ComplexPoint principal = 0;
  for (int j = 0; j < 2; ++j) {
    const ComplexPoint alpha = std::polar(std::sqrt(0.5), std::numbers::pi * j);
    ComplexPoint term = alpha * alpha * alpha / 2.0;
    for (const auto& zi : z) term /= (zi - alpha) * (zi - alpha);
    principal += term;
  }
  const ComplexPoint w = omega_exact_eval(f03, z);
  CHECK(std::abs(w - principal) < 1e-12 * std::abs(w));
  const ComplexPoint swapped = omega_exact_eval(f03, {z[2], z[0], z[1]});
  CHECK(std::abs(w - swapped) < 1e-13 * std::abs(w));

  const XiExpansion f12 = fit_F(3, 1, 2);
  const ComplexPoint zeta = std::polar(1.0, 2 * std::numbers::pi / 3);
  const std::vector<ComplexPoint> p{{0.3, 0.05}, {-0.12, 0.2}};
  const ComplexPoint w12 = omega_exact_eval(f12, p);
  const ComplexPoint rotated = omega_exact_eval(f12, {zeta * p[0], zeta * p[1]});
  CHECK(std::abs(rotated * zeta * zeta - w12) < 1e-12 * std::abs(w12));

  const XiExpansion f11 = fit_F(2, 1, 1);
  CHECK_THROWS_AS(omega_exact_eval(f11, {ComplexPoint(std::sqrt(0.5), 0)}), Error);
}
