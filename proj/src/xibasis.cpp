#include "hurwitz/xibasis.hpp"

#include <functional>

#include "detail/grid.hpp"
#include "hurwitz/cutjoin.hpp"
#include "hurwitz/errors.hpp"
#include "hurwitz/parallel.hpp"

namespace hurwitz {
namespace {

using detail::advance;
using detail::flat;
using detail::Matrix;
using detail::mu_of;
using detail::residue_classes;

// Coefficient of x^(ab+r) in f_{r,k}.
Rational f_coeff(int a, int r, int b, int k) {
  return pow(Rational(a * b + r), b + k) / Rational(factorial(static_cast<unsigned long>(b)));
}

int residue_rep(int mu, int a) { return (mu - 1) % a + 1; }

// Solve prod_i M_{r_i} against the tensor of values, one axis at a time.
std::vector<Rational> solve_class(int a, int g, const std::vector<int>& r, int kmax,
                                  const std::vector<Matrix>& minv) {
  const int n = static_cast<int>(r.size());
  const int K = kmax + 1;
  std::size_t total = 1;
  for (int i = 0; i < n; ++i) total *= static_cast<std::size_t>(K);
  std::vector<Rational> t(total);
  std::vector<int> b(static_cast<std::size_t>(n), 0);
  do t[flat(b, K)] = hurwitz_normalized(a, g, MuTuple(mu_of(a, r, b)));
  while (advance(b, K));

  std::vector<const Matrix*> axes;
  for (int ri : r) axes.push_back(&minv[static_cast<std::size_t>(ri - 1)]);
  detail::apply_axes(t, K, axes);
  return t;
}

Rational evaluate_class(int a, const std::vector<int>& r, const std::vector<int>& b,
                        const std::vector<Rational>& c, int K) {
  Rational acc(0);
  std::vector<int> k(r.size(), 0);
  do {
    const Rational& ck = c[flat(k, K)];
    if (ck == 0) continue;
    Rational term = ck;
    for (std::size_t i = 0; i < r.size(); ++i) term *= f_coeff(a, r[i], b[i], k[i]);
    acc += term;
  } while (advance(k, K));
  return acc;
}

}  // namespace

RatFunc xi_ratfunc(int a, int r, int k, XiConvention convention) {
  require(a >= 1 && r >= 1 && r <= a, "xi index r must lie in [1, a]");
  require(k >= -1, "xi ladder level must be at least -1");
  const Rational seed = (convention == XiConvention::Box && r == a) ? Rational(1) : make_rational(1, r);
  RatFunc f(Poly::monomial(seed, r));
  const RatFunc step(Poly::variable(), Poly::constant(Rational(1)) - Poly::monomial(Rational(a), a));
  for (int level = -1; level < k; ++level) f = step * f.derivative();
  return f;
}

Series xi_series(int a, int r, int k, int order) {
  require(a >= 1 && r >= 1 && r <= a, "xi index r must lie in [1, a]");
  require(k >= -1 && order >= 0, "bad ladder level or order");
  Series s(order);
  for (int b = 0; a * b + r < order; ++b) s[a * b + r] = f_coeff(a, r, b, k);
  return s;
}

Series z_of_x_series(int a, int order) {
  require(order >= 1, "series order must be positive");
  return xi_series(a, 1, -1, order);
}

Series x_of_z_series(int a, int order) {
  require(a >= 1 && order >= 1, "bad parameters for x(z)");
  Series s(order);
  for (int j = 0; a * j + 1 < order; ++j)
    s[a * j + 1] = Rational(j % 2 ? -1 : 1) / Rational(factorial(static_cast<unsigned long>(j)));
  return s;
}

Rational XiExpansion::coeff(const std::vector<int>& r, const std::vector<int>& k) const {
  const auto it = coeffs.find({r, k});
  return it == coeffs.end() ? Rational(0) : it->second;
}

Rational XiExpansion::predict(const std::vector<int>& mu) const {
  require(static_cast<int>(mu.size()) == n, "tuple length does not match the expansion");
  std::vector<int> r(mu.size()), b(mu.size());
  for (std::size_t i = 0; i < mu.size(); ++i) {
    require(mu[i] >= 1, "parts must be positive");
    r[i] = residue_rep(mu[i], a);
    b[i] = (mu[i] - r[i]) / a;
  }
  Rational acc(0);
  for (const auto& [idx, c] : coeffs) {
    if (idx.first != r) continue;
    Rational term = c;
    for (std::size_t i = 0; i < r.size(); ++i) term *= f_coeff(a, r[i], b[i], idx.second[i]);
    acc += term;
  }
  return acc;
}

std::map<XiExpansion::Index, Rational> XiExpansion::coeffs_in(XiConvention convention) const {
  if (convention == XiConvention::Uniform) return coeffs;
  std::map<Index, Rational> out;
  for (const auto& [idx, c] : coeffs) {
    Rational v = c;
    for (int r : idx.first)
      if (r == a) v /= a;
    out.emplace(idx, v);
  }
  return out;
}

nlohmann::json XiExpansion::to_json() const {
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& [idx, c] : coeffs)
    entries.push_back({{"r", idx.first}, {"k", idx.second}, {"coeff", to_string(c)}});
  return {{"schema_version", 1}, {"kind", "xi_expansion"}, {"convention", "uniform"},
          {"a", a}, {"g", g}, {"n", n}, {"kmax", kmax}, {"entries", entries}};
}

XiExpansion XiExpansion::from_json(const nlohmann::json& j) {
  XiExpansion e;
  try {
    e.a = j.at("a").get<int>();
    e.g = j.at("g").get<int>();
    e.n = j.at("n").get<int>();
    e.kmax = j.at("kmax").get<int>();
    for (const auto& entry : j.at("entries"))
      e.coeffs[{entry.at("r").get<std::vector<int>>(), entry.at("k").get<std::vector<int>>()}] =
          parse_rational(entry.at("coeff").get<std::string>());
  } catch (const nlohmann::json::exception& ex) {
    fail(ErrorKind::InvalidInput, std::string("malformed xi expansion: ") + ex.what());
  }
  return e;
}

XiExpansion fit_F(int a, int g, int n) { return fit_F(a, g, n, 3 * g - 3 + n); }

XiExpansion fit_F(int a, int g, int n, int kmax) {
  require(a >= 1 && g >= 0 && n >= 1, "need a >= 1, g >= 0, n >= 1");
  require(2 * g - 2 + n > 0, "fit_F needs a stable (g, n)");
  require(kmax >= 0, "kmax must be non-negative");
  const int K = kmax + 1;

  std::vector<Matrix> minv;
  for (int r = 1; r <= a; ++r) {
    Matrix m(static_cast<std::size_t>(K), std::vector<Rational>(static_cast<std::size_t>(K)));
    for (int b = 0; b < K; ++b)
      for (int k = 0; k < K; ++k) m[static_cast<std::size_t>(b)][static_cast<std::size_t>(k)] = f_coeff(a, r, b, k);
    minv.push_back(detail::inverse(std::move(m)));
  }

  const auto classes = residue_classes(a, n);
  std::vector<std::vector<Rational>> solved(classes.size());
  std::vector<long> bad(classes.size(), 0);
  parallel_for(classes.size(), [&](std::size_t ci) {
    const auto& r = classes[ci];
    solved[ci] = solve_class(a, g, r, kmax, minv);
    std::vector<int> b(r.size(), 0);
    do {
      if (std::find(b.begin(), b.end(), K) == b.end()) continue;
      if (evaluate_class(a, r, b, solved[ci], K) != hurwitz_normalized(a, g, MuTuple(mu_of(a, r, b)))) ++bad[ci];
    } while (advance(b, K + 1));
  });

  long mismatches = 0;
  for (long x : bad) mismatches += x;
  if (mismatches)
    fail(ErrorKind::FitResidualNonzero, std::to_string(mismatches) + " held-out values disagree for (a,g,n,kmax) = (" +
                                            std::to_string(a) + "," + std::to_string(g) + "," + std::to_string(n) +
                                            "," + std::to_string(kmax) + ")");

  XiExpansion e;
  e.a = a;
  e.g = g;
  e.n = n;
  e.kmax = kmax;
  for (std::size_t ci = 0; ci < classes.size(); ++ci) {
    std::vector<int> k(static_cast<std::size_t>(n), 0);
    do {
      const Rational& c = solved[ci][flat(k, K)];
      if (c != 0) e.coeffs.emplace(XiExpansion::Index{classes[ci], k}, c);
    } while (advance(k, K));
  }
  return e;
}

long count_prediction_mismatches(const XiExpansion& exp, int b_max) {
  long bad = 0;
  for (const auto& r : residue_classes(exp.a, exp.n)) {
    std::vector<int> b(r.size(), 0);
    do {
      const auto mu = mu_of(exp.a, r, b);
      if (exp.predict(mu) != hurwitz_normalized(exp.a, exp.g, MuTuple(mu))) ++bad;
    } while (advance(b, b_max + 1));
  }
  return bad;
}

ExactOmega::ExactOmega(const XiExpansion& exp, double pole_threshold)
    : n_(exp.n), pole_threshold_(pole_threshold) {
  const int K = exp.kmax + 1;
  for (int r = 1; r <= exp.a; ++r)
    for (int k = 0; k < K; ++k) derivs_.push_back(xi_ratfunc(exp.a, r, k).derivative());
  for (const auto& [idx, c] : exp.coeffs) {
    Term t;
    for (std::size_t i = 0; i < idx.first.size(); ++i) t.factor.push_back((idx.first[i] - 1) * K + idx.second[i]);
    t.re = to_long_double(c);
    terms_.push_back(std::move(t));
  }
}

ComplexPoint ExactOmega::operator()(const std::vector<ComplexPoint>& zs) const {
  require(static_cast<int>(zs.size()) == n_, "wrong number of points");
  using C = std::complex<long double>;
  std::vector<std::vector<C>> values(zs.size(), std::vector<C>(derivs_.size()));
  for (std::size_t i = 0; i < zs.size(); ++i) {
    require_finite(zs[i], "evaluation point");
    const C z(zs[i].real(), zs[i].imag());
    for (std::size_t d = 0; d < derivs_.size(); ++d)
      values[i][d] = derivs_[d].eval(z, static_cast<long double>(pole_threshold_));
  }
  C acc{0};
  for (const auto& t : terms_) {
    C term{t.re};
    for (std::size_t i = 0; i < t.factor.size(); ++i) term *= values[i][static_cast<std::size_t>(t.factor[i])];
    acc += term;
  }
  return {static_cast<double>(acc.real()), static_cast<double>(acc.imag())};
}

ComplexPoint omega_exact_eval(const XiExpansion& exp, const std::vector<ComplexPoint>& zs) {
  return ExactOmega(exp)(zs);
}

std::map<XiExpansion::Index, Rational> hodge_brackets(const XiExpansion& exp) {
  std::map<XiExpansion::Index, Rational> out;
  for (const auto& [idx, c] : exp.coeffs_in(XiConvention::Box)) {
    int frac_sum = 0;
    for (int r : idx.first)
      if (r < exp.a) frac_sum += r;
    // sum r_i over r_i < a is a multiple of a because the class sum is.
    const long exponent = 1 - exp.g + frac_sum / exp.a;
    out.emplace(idx, c / pow(Rational(exp.a), exponent));
  }
  return out;
}

}  // namespace hurwitz
