#include "hurwitz/quasipoly.hpp"

#include <numeric>

#include "detail/grid.hpp"
#include "hurwitz/cutjoin.hpp"
#include "hurwitz/errors.hpp"
#include "hurwitz/parallel.hpp"

namespace hurwitz {

// ---- MultiPoly ----

MultiPoly::MultiPoly(int nvars) : nvars_(nvars) { require(nvars >= 0, "negative variable count"); }

MultiPoly MultiPoly::constant(int nvars, const Rational& c) {
  MultiPoly p(nvars);
  p.add_term(Exps(static_cast<std::size_t>(nvars), 0), c);
  return p;
}

MultiPoly MultiPoly::variable(int nvars, int index) {
  require(index >= 0 && index < nvars, "variable index out of range");
  MultiPoly p(nvars);
  Exps e(static_cast<std::size_t>(nvars), 0);
  e[static_cast<std::size_t>(index)] = 1;
  p.add_term(e, Rational(1));
  return p;
}

int MultiPoly::total_degree() const {
  int deg = -1;
  for (const auto& [e, c] : terms_) deg = std::max(deg, std::accumulate(e.begin(), e.end(), 0));
  return deg;
}

Rational MultiPoly::coeff(const Exps& e) const {
  const auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

void MultiPoly::add_term(const Exps& e, const Rational& c) {
  require(static_cast<int>(e.size()) == nvars_, "exponent vector has the wrong length");
  if (c == 0) return;
  auto [it, fresh] = terms_.emplace(e, c);
  if (fresh) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

Rational MultiPoly::eval(const std::vector<Rational>& x) const {
  require(static_cast<int>(x.size()) == nvars_, "point has the wrong dimension");
  Rational acc(0);
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i]) t *= pow(x[i], e[i]);
    acc += t;
  }
  return acc;
}

namespace {

MultiPoly drop_variable(const std::map<MultiPoly::Exps, Rational>& terms, int nvars, int index, int keep_exp,
                        bool scale) {
  MultiPoly out(nvars - 1);
  for (const auto& [e, c] : terms) {
    if (e[static_cast<std::size_t>(index)] != keep_exp) continue;
    MultiPoly::Exps f = e;
    f.erase(f.begin() + index);
    out.add_term(f, scale ? c * keep_exp : c);
  }
  return out;
}

}  // namespace

MultiPoly MultiPoly::at_zero(int index) const {
  require(index >= 0 && index < nvars_, "variable index out of range");
  return drop_variable(terms_, nvars_, index, 0, false);
}

MultiPoly MultiPoly::derivative_at_zero(int index) const {
  require(index >= 0 && index < nvars_, "variable index out of range");
  return drop_variable(terms_, nvars_, index, 1, true);
}

MultiPoly MultiPoly::permuted(const std::vector<int>& perm) const {
  require(static_cast<int>(perm.size()) == nvars_, "permutation has the wrong length");
  MultiPoly out(nvars_);
  for (const auto& [e, c] : terms_) {
    Exps f(e.size());
    for (std::size_t i = 0; i < e.size(); ++i) f[i] = e[static_cast<std::size_t>(perm[i])];
    out.add_term(f, c);
  }
  return out;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
  require(nvars_ == o.nvars_, "variable counts differ");
  MultiPoly out = *this;
  for (const auto& [e, c] : o.terms_) out.add_term(e, c);
  return out;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const { return *this + o * Rational(-1); }

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
  require(nvars_ == o.nvars_, "variable counts differ");
  MultiPoly out(nvars_);
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) {
      Exps e(e1.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = e1[i] + e2[i];
      out.add_term(e, c1 * c2);
    }
  return out;
}

MultiPoly MultiPoly::operator*(const Rational& c) const {
  MultiPoly out(nvars_);
  if (c == 0) return out;
  for (const auto& [e, v] : terms_) out.terms_.emplace(e, v * c);
  return out;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  // Highest total degree first.
  std::vector<std::pair<Exps, Rational>> ordered(terms_.rbegin(), terms_.rend());
  std::stable_sort(ordered.begin(), ordered.end(), [](const auto& x, const auto& y) {
    return std::accumulate(x.first.begin(), x.first.end(), 0) > std::accumulate(y.first.begin(), y.first.end(), 0);
  });
  for (const auto& [e, c] : ordered) {
    const bool neg = c < 0;
    const Rational mag = neg ? Rational(-c) : c;
    s += s.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ");
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (!e[i]) continue;
      if (!mono.empty()) mono += '*';
      mono += "m" + std::to_string(i + 1);
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    if (mono.empty()) s += hurwitz::to_string(mag);
    else if (mag == 1) s += mono;
    else s += hurwitz::to_string(mag) + "*" + mono;
  }
  return s;
}

// ---- QuasiPolyFamily ----

namespace {

int class_of(int mu, int a) {
  const int r = ((mu % a) + a) % a;
  return r == 0 ? a : r;
}

std::vector<Rational> as_rationals(const std::vector<int>& v) { return {v.begin(), v.end()}; }

std::string tuple_string(const std::vector<int>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

}  // namespace

const MultiPoly& QuasiPolyFamily::poly(const std::vector<int>& r) const {
  const auto it = polys.find(r);
  if (it == polys.end()) fail(ErrorKind::InvalidInput, "no residue class " + tuple_string(r));
  return it->second;
}

Rational QuasiPolyFamily::eval(const std::vector<int>& mu) const {
  require(static_cast<int>(mu.size()) == n, "point has the wrong dimension");
  std::vector<int> r(mu.size());
  for (std::size_t i = 0; i < mu.size(); ++i) r[i] = class_of(mu[i], a);
  return poly(r).eval(as_rationals(mu));
}

nlohmann::json QuasiPolyFamily::to_json() const {
  nlohmann::json classes = nlohmann::json::array();
  for (const auto& [r, p] : polys) {
    nlohmann::json monos = nlohmann::json::array();
    for (const auto& [e, c] : p.terms()) monos.push_back({{"exps", e}, {"coeff", hurwitz::to_string(c)}});
    classes.push_back({{"r", r}, {"monomials", monos}});
  }
  return {{"schema_version", 1}, {"kind", "quasi_polynomial"}, {"a", a},         {"g", g},
          {"n", n},              {"degree_bound", degree_bound},   {"classes", classes}};
}

QuasiPolyFamily QuasiPolyFamily::from_json(const nlohmann::json& j) {
  try {
    require(j.at("schema_version").get<int>() == 1, "unsupported schema_version");
    QuasiPolyFamily f;
    f.a = j.at("a").get<int>();
    f.g = j.at("g").get<int>();
    f.n = j.at("n").get<int>();
    f.degree_bound = j.at("degree_bound").get<int>();
    for (const auto& c : j.at("classes")) {
      MultiPoly p(f.n);
      for (const auto& m : c.at("monomials"))
        p.add_term(m.at("exps").get<std::vector<int>>(), parse_rational(m.at("coeff").get<std::string>()));
      f.polys.emplace(c.at("r").get<std::vector<int>>(), std::move(p));
    }
    return f;
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::InvalidInput, std::string("malformed quasi-polynomial JSON: ") + e.what());
  }
}

Rational q_value(int a, int g, const std::vector<int>& mu) {
  require(a >= 1 && g >= 0 && !mu.empty(), "need a >= 1, g >= 0 and a non-empty tuple");
  const Rational h = hurwitz_normalized(a, g, MuTuple(mu));
  if (h == 0) return h;
  int frac = 0;
  Rational c(1);
  for (int m : mu) {
    frac += m % a;
    const int q = m / a;
    c *= pow(Rational(m), q) / Rational(factorial(static_cast<unsigned long>(q)));
  }
  // a | |mu| whenever h != 0, so the exponent is an integer.
  const long exponent = 1 - g + frac / a;
  return h / (pow(Rational(a), exponent) * c);
}

Rational q_unstable(int a, const std::vector<Rational>& mu) {
  require(a >= 1, "a must be positive");
  require(mu.size() == 1 || mu.size() == 2, "unstable cases have one or two points");
  const Rational s = mu.size() == 1 ? mu[0] : mu[0] + mu[1];
  const bool integral = s.get_den() == 1;
  if (!integral || mpz_class(s.get_num() % a) != 0) return Rational(0);
  if (s == 0) fail(ErrorKind::DivisionByZero, "unstable quasi-polynomial evaluated at its pole");
  if (mu.size() == 1) return Rational(1) / (Rational(a) * mu[0] * mu[0]);
  return Rational(1) / (Rational(a) * s);
}

QuasiPolyFamily extract_Q(int a, int g, int n) {
  require(a >= 1 && g >= 0 && n >= 1, "need a >= 1, g >= 0, n >= 1");
  require(2 * g - 2 + n > 0, "extract_Q needs a stable (g, n)");
  const int D = 3 * g - 3 + n;
  const int K = D + 1;

  std::vector<detail::Matrix> vinv;
  for (int r = 1; r <= a; ++r) {
    detail::Matrix v(static_cast<std::size_t>(K), std::vector<Rational>(static_cast<std::size_t>(K)));
    for (int b = 0; b < K; ++b)
      for (int e = 0; e < K; ++e)
        v[static_cast<std::size_t>(b)][static_cast<std::size_t>(e)] = pow(Rational(r + a * b), e);
    vinv.push_back(detail::inverse(std::move(v)));
  }

  const auto all = detail::residue_classes(a, n, false);
  const auto live = detail::residue_classes(a, n, true);
  std::vector<MultiPoly> solved(live.size(), MultiPoly(n));
  std::vector<std::string> problems(live.size());

  parallel_for(live.size(), [&](std::size_t ci) {
    const auto& r = live[ci];
    std::size_t total = 1;
    for (int i = 0; i < n; ++i) total *= static_cast<std::size_t>(K);
    std::vector<Rational> t(total);
    std::vector<int> b(static_cast<std::size_t>(n), 0);
    do t[detail::flat(b, K)] = q_value(a, g, detail::mu_of(a, r, b));
    while (detail::advance(b, K));

    std::vector<const detail::Matrix*> axes;
    for (int ri : r) axes.push_back(&vinv[static_cast<std::size_t>(ri - 1)]);
    detail::apply_axes(t, K, axes);

    MultiPoly p(n);
    std::vector<int> e(static_cast<std::size_t>(n), 0);
    do p.add_term(e, t[detail::flat(e, K)]);
    while (detail::advance(e, K));

    if (p.total_degree() > D) {
      problems[ci] = "class " + tuple_string(r) + " has total degree " + std::to_string(p.total_degree());
      return;
    }
    long bad = 0;
    std::fill(b.begin(), b.end(), 0);
    do {
      if (std::find(b.begin(), b.end(), K) == b.end()) continue;
      const auto mu = detail::mu_of(a, r, b);
      if (p.eval(as_rationals(mu)) != q_value(a, g, mu)) ++bad;
    } while (detail::advance(b, K + 1));
    if (bad) problems[ci] = "class " + tuple_string(r) + ": " + std::to_string(bad) + " held-out values disagree";
    solved[ci] = std::move(p);
  });

  for (const auto& msg : problems)
    if (!msg.empty())
      fail(ErrorKind::InterpolationUnstable, "Q for (a,g,n) = (" + std::to_string(a) + "," + std::to_string(g) + "," +
                                                  std::to_string(n) + "): " + msg);

  QuasiPolyFamily f;
  f.a = a;
  f.g = g;
  f.n = n;
  f.degree_bound = D;
  for (const auto& r : all) f.polys.emplace(r, MultiPoly(n));
  for (std::size_t ci = 0; ci < live.size(); ++ci) f.polys[live[ci]] = std::move(solved[ci]);
  return f;
}

MultiPoly genus0_closed(int a, int n) {
  require(a >= 1, "a must be positive");
  require(n >= 3, "the closed formula needs n >= 3");
  MultiPoly sum(n);
  for (int i = 0; i < n; ++i) sum = sum + MultiPoly::variable(n, i);
  MultiPoly p = MultiPoly::constant(n, make_rational(1, a));
  for (int i = 0; i < n - 3; ++i) p = p * sum;
  return p;
}

// ---- string and dilaton ----

namespace {

enum class Equation { String, Dilaton };

// Pointwise grid for the unstable targets: b_i in [0, kGridLayers).
constexpr int kGridLayers = 5;

MultiPoly sum_of_variables(int n) {
  MultiPoly s(n);
  for (int i = 0; i < n; ++i) s = s + MultiPoly::variable(n, i);
  return s;
}

// d/dmu_2 of Q_{0,2}(mu_1, mu_2) at mu_2 = 0, from 1/(a (mu_1 + mu_2)).
Rational q02_derivative_at_zero(int a, int mu1) {
  if (mu1 % a != 0) return Rational(0);
  return Rational(-1) / (Rational(a) * Rational(mu1) * Rational(mu1));
}

// The unstable formulas are checked against q_value wherever both are defined.
CheckResult check_unstable_convention(int a, int n) {
  long bad = 0, total = 0;
  for (const auto& r : detail::residue_classes(a, n, false)) {
    std::vector<int> b(static_cast<std::size_t>(n), 0);
    do {
      const auto mu = detail::mu_of(a, r, b);
      ++total;
      if (q_value(a, 0, mu) != q_unstable(a, as_rationals(mu))) ++bad;
    } while (detail::advance(b, kGridLayers));
  }
  return {"unstable convention Q_{0," + std::to_string(n) + "}", bad == 0,
          std::to_string(total - bad) + "/" + std::to_string(total) + " grid values match"};
}

VerificationReport run_equation(Equation eq, int a, int g, int n) {
  require(a >= 1 && g >= 0 && n >= 1, "need a >= 1, g >= 0, n >= 1");
  require(2 * g - 2 + n > 0 || (g == 0 && n <= 2), "target (g, n) must be stable, (0,1) or (0,2)");
  const bool dilaton = eq == Equation::Dilaton;
  const long factor = 2L * g - 2 + n;
  const long literal = -factor;

  VerificationReport rep;
  rep.suite = dilaton ? "dilaton" : "string";
  rep.params = {{"a", a}, {"g", g}, {"n", n}};
  if (dilaton) rep.params["factor"] = factor;

  const bool target_stable = 2 * g - 2 + n > 0;
  const bool upper_stable = 2 * g - 2 + n + 1 > 0;
  const auto classes = detail::residue_classes(a, n, false);

  long agree = 0, literal_agree = 0, checked = 0;
  std::string first_bad;
  auto record = [&](bool ok, bool literal_ok, const std::string& where) {
    ++checked;
    if (ok) ++agree;
    else if (first_bad.empty()) first_bad = where;
    if (literal_ok) ++literal_agree;
  };

  if (target_stable) {
    const QuasiPolyFamily upper = extract_Q(a, g, n + 1);
    const QuasiPolyFamily lower = extract_Q(a, g, n);
    const MultiPoly sum = sum_of_variables(n);
    for (const auto& r : classes) {
      auto ru = r;
      ru.push_back(a);
      const MultiPoly& pu = upper.poly(ru);
      const MultiPoly& pl = lower.poly(r);
      if (dilaton) {
        const MultiPoly lhs = pu.derivative_at_zero(n);
        record(lhs == pl * Rational(factor), lhs == pl * Rational(literal), tuple_string(r));
      } else {
        record(pu.at_zero(n) == sum * pl, true, tuple_string(r));
      }
    }
    rep.add({"polynomial identity", agree == static_cast<long>(classes.size()),
             std::to_string(agree) + "/" + std::to_string(classes.size()) + " classes agree" +
                 (first_bad.empty() ? "" : "; first failure at class " + first_bad)});
  } else {
    // Target (0,1) or (0,2): the target side comes from q_value on a grid and
    // Q_{0,2} at mu_2 = 0 from its rational-function form.
    rep.add(check_unstable_convention(a, n));
    if (n == 1) rep.add(check_unstable_convention(a, 2));
    const QuasiPolyFamily* upper = nullptr;
    QuasiPolyFamily storage;
    if (upper_stable && n + 1 >= 3) {
      storage = extract_Q(a, g, n + 1);
      upper = &storage;
    }
    long total = 0;
    for (const auto& r : classes) {
      std::vector<int> b(static_cast<std::size_t>(n), 0);
      do {
        const auto mu = detail::mu_of(a, r, b);
        const Rational target = q_value(a, g, mu);
        Rational lhs;
        if (upper) {
          auto ru = r;
          ru.push_back(a);
          const MultiPoly& pu = upper->poly(ru);
          lhs = (dilaton ? pu.derivative_at_zero(n) : pu.at_zero(n)).eval(as_rationals(mu));
        } else {
          lhs = dilaton ? q02_derivative_at_zero(a, mu[0]) : q_unstable(a, {Rational(mu[0]), Rational(0)});
        }
        const Rational musum(std::accumulate(mu.begin(), mu.end(), 0));
        const Rational rhs = dilaton ? target * Rational(factor) : musum * target;
        const Rational rhs_literal = dilaton ? target * Rational(literal) : rhs;
        ++total;
        record(lhs == rhs, lhs == rhs_literal, tuple_string(mu));
      } while (detail::advance(b, kGridLayers));
    }
    rep.add({"pointwise identity", agree == total,
             std::to_string(agree) + "/" + std::to_string(total) + " grid points agree" +
                 (first_bad.empty() ? "" : "; first failure at mu = " + first_bad)});
    rep.params["grid_layers"] = kGridLayers;
  }
  if (dilaton) rep.params["opposite_sign_holds"] = literal_agree == checked;
  return rep;
}

}  // namespace

VerificationReport check_string(int a, int g, int n) { return run_equation(Equation::String, a, g, n); }
VerificationReport check_dilaton(int a, int g, int n) { return run_equation(Equation::Dilaton, a, g, n); }

}  // namespace hurwitz
