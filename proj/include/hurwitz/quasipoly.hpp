#pragma once

#include <map>
#include <string>
#include <vector>

#include "hurwitz/rational.hpp"
#include "hurwitz/report.hpp"
#include "json.hpp"

namespace hurwitz {

/// Sparse polynomial over Q in a fixed number of variables.
class MultiPoly {
 public:
  using Exps = std::vector<int>;

  MultiPoly() = default;
  explicit MultiPoly(int nvars);

  static MultiPoly constant(int nvars, const Rational& c);
  static MultiPoly variable(int nvars, int index);

  int nvars() const { return nvars_; }
  const std::map<Exps, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// -1 for the zero polynomial.
  int total_degree() const;

  Rational coeff(const Exps& e) const;
  void add_term(const Exps& e, const Rational& c);

  Rational eval(const std::vector<Rational>& x) const;

  /// Sets variable `index` to zero and drops it.
  MultiPoly at_zero(int index) const;
  /// d/dx_index at x_index = 0, with that variable dropped.
  MultiPoly derivative_at_zero(int index) const;
  /// Reorders variables: variable i of the result is variable perm[i] here.
  MultiPoly permuted(const std::vector<int>& perm) const;

  MultiPoly operator+(const MultiPoly& o) const;
  MultiPoly operator-(const MultiPoly& o) const;
  MultiPoly operator*(const MultiPoly& o) const;
  MultiPoly operator*(const Rational& c) const;
  bool operator==(const MultiPoly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }
  bool operator!=(const MultiPoly& o) const { return !(*this == o); }

  /// e.g. "1/2*m1^2*m3 - 1/24"; "0" for zero.
  std::string to_string() const;

 private:
  int nvars_ = 0;
  std::map<Exps, Rational> terms_;  // nonzero coefficients only
};

/// Q_{g,n}: one polynomial per residue class r in [1,a]^n, where r_i = a
/// stands for mu_i = 0 mod a. Classes with a not dividing sum r are zero.
struct QuasiPolyFamily {
  int a = 0, g = 0, n = 0, degree_bound = 0;
  std::map<std::vector<int>, MultiPoly> polys;

  const MultiPoly& poly(const std::vector<int>& r) const;
  /// Q(mu) for any integer tuple, through the class of mu.
  Rational eval(const std::vector<int>& mu) const;

  nlohmann::json to_json() const;
  static QuasiPolyFamily from_json(const nlohmann::json& j);
};

/// Q_g(mu) = H_g(mu) a^-(1-g+sum{mu_i/a}) / prod C(mu_i) at positive mu,
/// with C(mu) = mu^floor(mu/a) / floor(mu/a)!. Works for every (g, n).
Rational q_value(int a, int g, const std::vector<int>& mu);

/// Q_{0,1} and Q_{0,2} as rational functions of mu (the unstable cases):
/// 1/(a mu^2) and 1/(a (mu_1 + mu_2)) on the zero class, 0 elsewhere.
/// Defined at any mu where the expression is finite.
Rational q_unstable(int a, const std::vector<Rational>& mu);

/// Interpolates each class on mu_i = r_i + a b_i, b_i in [0, 3g-3+n], then
/// checks every point of the next layer. InterpolationUnstable on a mismatch
/// or when a polynomial exceeds total degree 3g-3+n. Requires 2g-2+n > 0.
QuasiPolyFamily extract_Q(int a, int g, int n);

/// String equation with target (g, n): class (r, a) of Q_{g,n+1} at
/// mu_{n+1} = 0 against (sum mu) times class r of Q_{g,n}. Exact polynomial
/// comparison when Q_{g,n} is stable; for the targets (0,1) and (0,2) the
/// unstable side is compared pointwise on a grid.
VerificationReport check_string(int a, int g, int n);

/// Dilaton equation with target (g, n): d/dmu_{n+1} of class (r, a) of
/// Q_{g,n+1} at 0 against (2g-2+n) times class r of Q_{g,n}. The report
/// params also record whether the factor with the opposite sign would hold.
VerificationReport check_dilaton(int a, int g, int n);

/// (1/a) (mu_1 + ... + mu_n)^(n-3), n >= 3.
MultiPoly genus0_closed(int a, int n);

}  // namespace hurwitz
