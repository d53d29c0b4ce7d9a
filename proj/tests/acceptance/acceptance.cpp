// One line per acceptance criterion; exit status 0 iff every line passes.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

#include "hurwitz/cutjoin.hpp"
#include "hurwitz/eo.hpp"
#include "hurwitz/identities.hpp"
#include "hurwitz/oracle.hpp"
#include "hurwitz/quasipoly.hpp"
#include "hurwitz/verify.hpp"
#include "hurwitz/xibasis.hpp"

using namespace hurwitz;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

constexpr std::uint64_t kSeed = 20240601;

// Instances of the numeric-vs-exact comparison with their tolerances.
struct Instance {
  int a, g, n;
  double tol;
};

std::vector<Instance> numeric_instances() {
  std::vector<Instance> out;
  for (int a = 1; a <= 3; ++a)
    for (auto [g, n] : {std::pair{0, 3}, {0, 4}, {1, 1}, {1, 2}}) out.push_back({a, g, n, 1e-6});
  for (int a = 1; a <= 2; ++a) out.push_back({a, 2, 1, 1e-5});
  return out;
}

std::string gn(int a, int g, int n) {
  return "a=" + std::to_string(a) + " (" + std::to_string(g) + "," + std::to_string(n) + ")";
}

Outcome from_report(const VerificationReport& r) {
  for (const auto& c : r.checks)
    if (!c.pass) return {false, c.name + ": " + c.detail};
  return {r.pass, std::to_string(r.checks.size()) + " checks"};
}

// Outcome of several reports; the first failure is reported.
struct Collect {
  long checks = 0;
  std::string first_fail;
  void add(const std::string& label, const VerificationReport& r) {
    checks += static_cast<long>(r.checks.size());
    if (first_fail.empty() && !r.pass) first_fail = label + " " + from_report(r).detail;
  }
  void add(const std::string& label, bool ok, const std::string& why = {}) {
    ++checks;
    if (first_fail.empty() && !ok) first_fail = label + (why.empty() ? "" : ": " + why);
  }
  Outcome done() const {
    if (!first_fail.empty()) return {false, first_fail};
    return {true, std::to_string(checks) + " checks"};
  }
};

Integer factorial_z(int n) {
  Integer f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

// Simple Hurwitz numbers by enumeration: m-tuples of transpositions in S_d
// whose product has cycle type mu and which generate a transitive group,
// divided by d!.
Rational simple_hurwitz(const MuTuple& mu, int m) {
  const int d = mu.sum();
  std::vector<std::pair<int, int>> transp;
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) transp.emplace_back(i, j);
  std::vector<int> want(mu.begin(), mu.end());
  std::sort(want.begin(), want.end());

  long hits = 0;
  std::vector<int> idx(static_cast<std::size_t>(m), 0);
  const std::size_t T = transp.size();
  if (m > 0 && T == 0) return 0;
  while (true) {
    std::vector<int> perm(static_cast<std::size_t>(d));
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<int> comp(static_cast<std::size_t>(d));
    std::iota(comp.begin(), comp.end(), 0);
    std::function<int(int)> root = [&](int x) { return comp[x] == x ? x : comp[x] = root(comp[x]); };
    for (int k : idx) {
      const auto [i, j] = transp[static_cast<std::size_t>(k)];
      for (int& p : perm)
        if (p == i)
          p = j;
        else if (p == j)
          p = i;
      comp[root(i)] = root(j);
    }
    bool transitive = true;
    for (int x = 0; x < d; ++x) transitive = transitive && root(x) == root(0);
    if (transitive) {
      std::vector<int> seen(static_cast<std::size_t>(d), 0), cycles;
      for (int s = 0; s < d; ++s) {
        if (seen[s]) continue;
        int len = 0;
        for (int x = s; !seen[x]; x = perm[x]) seen[x] = 1, ++len;
        cycles.push_back(len);
      }
      std::sort(cycles.begin(), cycles.end());
      if (cycles == want) ++hits;
    }
    std::size_t pos = 0;
    while (pos < idx.size() && ++idx[pos] == static_cast<int>(T)) idx[pos++] = 0;
    if (pos == idx.size()) break;
  }
  return Rational(hits) / Rational(factorial_z(d));
}

// Hurwitz's genus-zero formula m!/|Aut mu| d^(n-3) prod mu_i^mu_i / mu_i!.
Rational hurwitz_genus0(const MuTuple& mu) {
  const int d = mu.sum(), n = static_cast<int>(mu.size()), m = d + n - 2;
  Rational v = Rational(factorial_z(m)) / Rational(mu.aut_order());
  v *= n >= 3 ? Rational(pow(Rational(d), n - 3)) : Rational(1) / Rational(pow(Rational(d), 3 - n));
  for (int p : mu) v *= pow(Rational(p), p) / Rational(factorial_z(p));
  return v;
}

Outcome c1() {
  const Rational v = hurwitz_raw(2, 0, {3, 1});
  return {v == 3, "H = " + to_string(v)};
}

Outcome c2() { return from_report(verify_oracle({1, 2, 3}, 5, 3, 1)); }

Outcome c3() {
  Collect c;
  for (const auto& nu : partitions_up_to(6)) {
    const int d = nu.sum(), l = static_cast<int>(nu.size());
    Rational want = Rational(factorial_z(d)) / Rational(nu.aut_order());
    want *= l >= 2 ? Rational(pow(Rational(d), l - 2)) : Rational(1, d);
    const Integer got = count_cactus_trees_bruteforce(nu);
    c.add("nu=(" + nu.to_string() + ")", Rational(got) == want, to_string(got) + " vs " + to_string(want));
  }
  return c.done();
}

Outcome c4() {
  Collect c;
  for (int a = 1; a <= 4; ++a) {
    const CheckResult r = check_inverse_series(a, 25);
    c.add(r.name, r.pass, r.detail);
  }
  return c.done();
}

Outcome c5() {
  Collect c;
  for (int a = 1; a <= 3; ++a) {
    for (const CheckResult& r : {check_one_point_genus0(a, 12), check_two_point_genus0(a, 12)}) c.add(r.name, r.pass);
  }
  return c.done();
}

Outcome c6() {
  Collect c;
  for (int a = 1; a <= 3; ++a)
    for (auto [g, n] : {std::pair{0, 3}, {0, 4}, {1, 1}, {1, 2}, {2, 1}}) c.add(gn(a, g, n), verify_fit(a, g, n));
  return c.done();
}

Outcome c7() {
  bool box_all = true, uniform_all = true, support = true;
  for (int a = 1; a <= 4; ++a) {
    const XiExpansion e = fit_F(a, 1, 1);
    const XiExpansion::Index k0{{a}, {0}}, k1{{a}, {1}};
    support = support && e.coeffs.size() == 2 && e.coeffs.count(k0) && e.coeffs.count(k1);
    auto matches = [&](XiConvention conv) {
      const auto c = e.coeffs_in(conv);
      return c.size() == 2 && c.at(k1) == make_rational(a, 24) && c.at(k0) == make_rational(-1, 24);
    };
    box_all = box_all && matches(XiConvention::Box);
    uniform_all = uniform_all && matches(XiConvention::Uniform);
  }
  const bool pass = support && (box_all != uniform_all);
  return {pass, std::string("support ") + (support ? "ok" : "wrong") + "; box convention " +
                    (box_all ? "matches" : "fails") + ", uniform " + (uniform_all ? "matches" : "fails")};
}

Outcome c8() {
  Collect c;
  for (int a = 1; a <= 3; ++a)
    for (int n = 3; n <= 5; ++n) {
      MultiPoly s(n);
      for (int i = 0; i < n; ++i) s = s + MultiPoly::variable(n, i);
      MultiPoly want = MultiPoly::constant(n, make_rational(1, a));
      for (int i = 0; i < n - 3; ++i) want = want * s;
      const MultiPoly got = extract_Q(a, 0, n).poly(std::vector<int>(static_cast<std::size_t>(n), a));
      c.add("a=" + std::to_string(a) + " n=" + std::to_string(n), got == want, got.to_string());
    }
  return c.done();
}

Outcome c9() {
  Collect c;
  for (int a = 1; a <= 3; ++a)
    for (auto [g, n] : {std::pair{0, 3}, {0, 4}, {1, 1}, {1, 2}}) {
      c.add("string " + gn(a, g, n), check_string(a, g, n));
      c.add("dilaton " + gn(a, g, n), check_dilaton(a, g, n));
    }
  return c.done();
}

Outcome c10() {
  Collect c;
  double worst = 0;
  for (const auto& in : numeric_instances()) {
    const auto r = verify_theorem1(in.a, in.g, in.n, 5, in.tol, kSeed);
    for (const auto& s : r.samples) worst = std::max(worst, s.rel_err);
    c.add(gn(in.a, in.g, in.n), r);
  }
  Outcome o = c.done();
  char buf[64];
  std::snprintf(buf, sizeof buf, ", worst relative error %.2e", worst);
  o.detail += buf;
  return o;
}

Outcome c11() {
  Collect c;
  for (int a = 1; a <= 3; ++a) c.add("a=" + std::to_string(a), verify_residues(a, 3, 1e-8));
  return c.done();
}

Outcome c12() {
  Collect c;
  for (const auto& in : numeric_instances()) c.add(gn(in.a, in.g, in.n), check_eo_properties(in.a, in.g, in.n, 5, kSeed));
  return c.done();
}

Outcome c13() {
  Collect c;
  for (int n = 1; n <= 5; ++n)
    for (const auto& mu : ordered_tuples(n, 5)) {
      if (mu.sum() > 5) continue;
      for (int g = 0; g <= 2; ++g) {
        const long m = *branch_count(1, g, mu);
        if (m < 0 || m > 4) continue;
        const Rational got = hurwitz_raw(1, g, mu), want = simple_hurwitz(mu, static_cast<int>(m));
        const std::string label = "g=" + std::to_string(g) + " mu=(" + mu.to_string() + ")";
        c.add(label, got == want, to_string(got) + " vs " + to_string(want));
        if (g == 0) c.add(label + " genus-zero formula", want == hurwitz_genus0(mu));
      }
    }
  return c.done();
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* what;
    double limit_s;  // 0: no runtime bound
    Outcome (*run)();
  };
  const Criterion all[] = {
      {1, "H^[2]_{0;(3,1)} = 3", 1, c1},
      {2, "cutjoin, permutation and fatgraph oracles agree", 300, c2},
      {3, "cactus-node tree counts", 60, c3},
      {4, "x(z(x)) = x to order 25, a <= 4", 0, c4},
      {5, "genus-zero one- and two-point series identities", 0, c5},
      {6, "fit_F with exact held-out validation", 600, c6},
      {7, "F_{1,1} support and coefficients", 0, c7},
      {8, "genus-zero quasi-polynomials", 0, c8},
      {9, "string and dilaton equations", 0, c9},
      {10, "recursion against the exact expansion", 900, c10},
      {11, "residue identities", 0, c11},
      {12, "EO numeric properties", 0, c12},
      {13, "a = 1 reduction to simple Hurwitz numbers", 0, c13},
  };
  int failed = 0;
  for (const auto& c : all) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o{false, ""};
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (c.limit_s > 0 && secs >= c.limit_s) {
      o.pass = false;
      o.detail += " (over the " + std::to_string(static_cast<int>(c.limit_s)) + " s budget)";
    }
    if (!o.pass) ++failed;
    std::printf("criterion %2d %s  %s  [%.2f s] %s\n", c.id, o.pass ? "PASS" : "FAIL", c.what, secs, o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(std::size(all)) - failed, std::size(all));
  return failed == 0 ? 0 : 1;
}
