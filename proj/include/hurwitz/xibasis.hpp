#pragma once

#include <map>
#include <utility>
#include <vector>

#include "hurwitz/complex_point.hpp"
#include "hurwitz/ratfunc.hpp"
#include "hurwitz/series.hpp"
#include "json.hpp"

namespace hurwitz {

/// Seed of the xi ladder. Uniform: xi_{-1}^{(r)} = z^r/r for every r.
/// Box: the same except xi_{-1}^{(a)} = z^a, which scales the whole r = a
/// ladder by a. Only the uniform ladder satisfies f_{r,k} = xi_k^{(r)}(z(x)).
enum class XiConvention { Uniform, Box };

/// xi_k^{(r)}(z) for 1 <= r <= a, k >= -1, built by k+1 applications of
/// z/(1 - a z^a) d/dz to the seed.
RatFunc xi_ratfunc(int a, int r, int k, XiConvention convention = XiConvention::Uniform);

/// f_{r,k}(x) = sum_b (ab+r)^(b+k)/b! x^(ab+r), coefficients below `order`.
Series xi_series(int a, int r, int k, int order);

/// z(x) = sum_b (ab+1)^(b-1)/b! x^(ab+1), the inverse of x = z exp(-z^a).
Series z_of_x_series(int a, int order);

/// Series of z exp(-z^a) in z, truncated below `order`.
Series x_of_z_series(int a, int order);

/// F_{g,n} in the basis prod_i xi_{k_i}^{(r_i)}(z_i), uniform convention.
struct XiExpansion {
  using Index = std::pair<std::vector<int>, std::vector<int>>;  // (r, k)

  int a = 0, g = 0, n = 0, kmax = 0;
  std::map<Index, Rational> coeffs;  // nonzero entries only

  Rational coeff(const std::vector<int>& r, const std::vector<int>& k) const;

  /// Coefficient of x^mu in the expansion, i.e. the predicted H_g(mu).
  Rational predict(const std::vector<int>& mu) const;

  /// Coefficients re-expressed for the given seed convention.
  std::map<Index, Rational> coeffs_in(XiConvention convention) const;

  nlohmann::json to_json() const;
  static XiExpansion from_json(const nlohmann::json& j);
};

/// Fits F_{g,n} to cut-and-join values with ladder levels k_i <= kmax
/// (default 3g-3+n). Each residue class r in [1,a]^n is solved on the grid
/// mu_i = r_i + a b_i, b_i <= kmax, and checked on every grid point with some
/// b_i = kmax+1; a mismatch raises FitResidualNonzero. Requires 2g-2+n > 0.
XiExpansion fit_F(int a, int g, int n);
XiExpansion fit_F(int a, int g, int n, int kmax);

/// Exact cut-and-join values against the expansion on the grid b_i <= b_max.
/// Returns the number of mismatching points.
long count_prediction_mismatches(const XiExpansion& exp, int b_max);

/// W with Omega_{g,n} = W dz_1...dz_n, from exact derivatives of the xi
/// factors evaluated in extended precision. NearPole near any branch point.
class ExactOmega {
 public:
  explicit ExactOmega(const XiExpansion& exp, double pole_threshold = 1e-12);
  ComplexPoint operator()(const std::vector<ComplexPoint>& zs) const;

 private:
  struct Term {
    std::vector<int> factor;  // index into derivs_ per variable
    long double re;
  };
  std::vector<RatFunc> derivs_;
  std::vector<Term> terms_;
  int n_;
  double pole_threshold_;
};

ComplexPoint omega_exact_eval(const XiExpansion& exp, const std::vector<ComplexPoint>& zs);

/// Bracket values coefficient / a^(1-g+sum{r_i/a}) with {a/a} = 0, where the
/// coefficient is taken in the box convention (the basis that matches the
/// floor(mu/a) normalisation of the generating function).
std::map<XiExpansion::Index, Rational> hodge_brackets(const XiExpansion& exp);

}  // namespace hurwitz
