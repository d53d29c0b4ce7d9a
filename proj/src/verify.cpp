#include "hurwitz/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>
#include <tuple>

#include "hurwitz/cutjoin.hpp"
#include "hurwitz/eo.hpp"
#include "hurwitz/errors.hpp"
#include "hurwitz/identities.hpp"
#include "hurwitz/oracle.hpp"
#include "hurwitz/xibasis.hpp"

namespace hurwitz {
namespace {

// Running tally for one family of exact comparisons.
struct Tally {
  std::string name;
  long compared = 0;
  std::string first_bad;

  void see(bool ok, const MuTuple& mu, const Rational& lhs, const Rational& rhs) {
    ++compared;
    if (!ok && first_bad.empty())
      first_bad = "mu=(" + mu.to_string() + "): " + to_string(lhs) + " vs " + to_string(rhs);
  }

  CheckResult result() const {
    if (!first_bad.empty()) return {name, false, "first mismatch at " + first_bad};
    return {name, compared > 0, std::to_string(compared) + " tuples agree"};
  }
};

}  // namespace

VerificationReport verify_oracle(const std::vector<int>& as, int max_degree, int max_m, int max_genus) {
  require(!as.empty(), "no values of a given");
  require(max_degree >= 1 && max_m >= 0 && max_genus >= 0, "bad oracle ranges");
  VerificationReport rep;
  rep.suite = "oracle";
  rep.params = {{"a", as}, {"max_degree", max_degree}, {"max_m", max_m}, {"max_genus", max_genus}};
  OracleLimits limits;
  limits.max_degree = std::max(limits.max_degree, max_degree);
  limits.max_transpositions = std::max(limits.max_transpositions, max_m);

  for (int a : as) {
    require(a >= 1, "a must be positive");
    for (int g = 0; g <= max_genus; ++g) {
      const std::string tag = " a=" + std::to_string(a) + " g=" + std::to_string(g);
      Tally cj{"cutjoin = permutation" + tag, 0, {}}, fg{"fatgraph = permutation x |Aut mu|" + tag, 0, {}};
      for (int n = 1; n <= max_degree; ++n)
        for (const auto& mu : ordered_tuples(n, max_degree)) {
          if (mu.sum() > max_degree || mu.sum() % a != 0) continue;
          const auto m = branch_count(a, g, mu);
          if (!m || *m < 0 || *m > max_m) continue;
          const Rational perm = count_connected_covers(a, g, mu, limits);
          const Rational raw = hurwitz_raw(a, g, mu);
          cj.see(raw == perm, mu, raw, perm);
          if (*m >= 1) {
            const Rational fat = count_fatgraphs(a, g, mu, limits);
            const Rational want = perm * Rational(mu.aut_order());
            fg.see(fat == want, mu, fat, want);
          }
        }
      rep.add(cj.result());
      if (fg.compared > 0) rep.add(fg.result());
    }
  }
  return rep;
}

VerificationReport verify_series(const std::vector<int>& as, int order) {
  require(!as.empty(), "no values of a given");
  require(order >= 2, "order must be at least 2");
  VerificationReport rep;
  rep.suite = "series";
  rep.params = {{"a", as}, {"order", order}};
  for (int a : as) {
    require(a >= 1, "a must be positive");
    rep.add(check_inverse_series(a, order));
    rep.add(check_one_point_genus0(a, order));
    rep.add(check_two_point_genus0(a, order));
    rep.add(check_basis_consistency(a, 3, order));
  }
  return rep;
}

VerificationReport verify_fit(int a, int g, int n) {
  require(a >= 1 && g >= 0 && n >= 1 && 2 * g - 2 + n > 0, "fit needs a >= 1 and a stable (g, n)");
  VerificationReport rep;
  rep.suite = "fit";
  rep.params = {{"a", a}, {"g", g}, {"n", n}};
  try {
    const XiExpansion exp = fit_F(a, g, n);
    rep.params["kmax"] = exp.kmax;
    rep.add({"fit", true, std::to_string(exp.coeffs.size()) + " nonzero coefficients"});
    const long bad = count_prediction_mismatches(exp, exp.kmax + 1);
    rep.add({"held-out layer", bad == 0, std::to_string(bad) + " mismatches on b_i <= " + std::to_string(exp.kmax + 1)});
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::FitResidualNonzero) throw;
    rep.add({"fit", false, e.what()});
  }
  return rep;
}

VerificationReport verify_residues(int a, int k_max, double tol) {
  require(a >= 1 && k_max >= 0 && tol > 0, "bad residue parameters");
  VerificationReport rep;
  rep.suite = "residues";
  rep.params = {{"a", a}, {"k_max", k_max}, {"tol", tol}};
  const SpectralCurve curve = branch_points(a);
  for (int r = 1; r <= a; ++r)
    for (int k = 0; k <= k_max; ++k) {
      const std::string at = " r=" + std::to_string(r) + " k=" + std::to_string(k);
      const double ys = (k == 1 && r == a) ? 1 : 0, ph = (k == 2 && r == a) ? -1 : 0;
      for (auto [kind, want, label] : {std::tuple{ResidueKind::StringY, ys, "string_y"},
                                       std::tuple{ResidueKind::DilatonPhi, ph, "dilaton_phi"}}) {
        const ComplexPoint v = residue_identity(curve, kind, r, k);
        const double dev = std::abs(v - ComplexPoint(want, 0));
        char buf[96];
        std::snprintf(buf, sizeof buf, "%.12g%+.3gi (expected %g, deviation %.2e)", v.real(), v.imag(), want, dev);
        rep.add({std::string(label) + at, dev <= tol, buf});
      }
    }
  return rep;
}

}  // namespace hurwitz
