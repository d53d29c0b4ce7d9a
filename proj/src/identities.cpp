#include "hurwitz/identities.hpp"

#include "hurwitz/cutjoin.hpp"
#include "hurwitz/oracle.hpp"
#include "hurwitz/xibasis.hpp"

namespace hurwitz {
namespace {

std::string tag(int a) { return "a=" + std::to_string(a); }

// Bivariate power series in (x1, x2), truncated above total degree `top`.
class BiSeries {
 public:
  explicit BiSeries(int top) : top_(top), c_(static_cast<std::size_t>(top) + 1, std::vector<Rational>(static_cast<std::size_t>(top) + 1)) {}

  static BiSeries in_first(const Series& s, int top) {
    BiSeries b(top);
    for (int i = 0; i < s.order() && i <= top; ++i) b.at(i, 0) = s[i];
    return b;
  }
  static BiSeries in_second(const Series& s, int top) {
    BiSeries b(top);
    for (int j = 0; j < s.order() && j <= top; ++j) b.at(0, j) = s[j];
    return b;
  }

  Rational& at(int i, int j) { return c_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; }
  const Rational& at(int i, int j) const { return c_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; }

  friend BiSeries operator+(BiSeries x, const BiSeries& y) {
    for (int i = 0; i <= x.top_; ++i)
      for (int j = 0; i + j <= x.top_; ++j) x.at(i, j) += y.at(i, j);
    return x;
  }
  friend BiSeries operator-(BiSeries x, const BiSeries& y) {
    for (int i = 0; i <= x.top_; ++i)
      for (int j = 0; i + j <= x.top_; ++j) x.at(i, j) -= y.at(i, j);
    return x;
  }
  friend BiSeries operator*(const BiSeries& x, const BiSeries& y) {
    BiSeries out(x.top_);
    for (int i = 0; i <= x.top_; ++i)
      for (int j = 0; i + j <= x.top_; ++j) {
        if (x.at(i, j) == 0) continue;
        for (int k = 0; i + j + k <= x.top_; ++k)
          for (int l = 0; i + j + k + l <= x.top_; ++l)
            if (y.at(k, l) != 0) out.at(i + k, j + l) += x.at(i, j) * y.at(k, l);
      }
    return out;
  }
  friend bool operator==(const BiSeries& x, const BiSeries& y) {
    for (int i = 0; i <= x.top_; ++i)
      for (int j = 0; i + j <= x.top_; ++j)
        if (x.at(i, j) != y.at(i, j)) return false;
    return true;
  }

 private:
  int top_;
  std::vector<std::vector<Rational>> c_;
};

Series monomial_series(int exponent, int order) {
  Series s(order);
  if (exponent < order) s[exponent] = 1;
  return s;
}

}  // namespace

CheckResult check_inverse_series(int a, int order) {
  const Series x = compose(x_of_z_series(a, order), z_of_x_series(a, order));
  return {"inverse_series " + tag(a), x == monomial_series(1, order), "order " + std::to_string(order)};
}

CheckResult check_one_point_genus0(int a, int order) {
  Series phi(order);
  if (a < order) phi[a] = make_rational(1, a);
  if (2 * a < order) phi[2 * a] = make_rational(-1, 2);
  const Series pulled = compose(phi, z_of_x_series(a, order));
  Series h(order);
  for (int mu = 1; mu < order; ++mu) h[mu] = hurwitz_normalized(a, 0, {mu});
  return {"one_point_genus0 " + tag(a), pulled == h, "order " + std::to_string(order)};
}

CheckResult check_two_point_genus0(int a, int degree) {
  const int top = degree + 2;
  const int order = top + 1;
  const Series z = z_of_x_series(a, order);
  Series za = monomial_series(0, order);
  for (int i = 0; i < a; ++i) za = za * z;
  const Series one_minus = monomial_series(0, order) - Rational(a) * za;

  const BiSeries x1 = BiSeries::in_first(monomial_series(1, order), top);
  const BiSeries x2 = BiSeries::in_second(monomial_series(1, order), top);
  const BiSeries z1 = BiSeries::in_first(z, top);
  const BiSeries z2 = BiSeries::in_second(z, top);
  const BiSeries w1 = BiSeries::in_first(one_minus, top);

  BiSeries lhs(top);
  for (int m1 = 1; m1 < degree; ++m1)
    for (int m2 = 1; m1 + m2 <= degree; ++m2) lhs.at(m1, m2) = Rational(m1) * hurwitz_normalized(a, 0, {m1, m2});

  const BiSeries dz = z2 - z1, dx = x2 - x1;
  const bool ok = lhs * dx * dz * w1 == x2 * dz * w1 - z2 * dx;
  return {"two_point_genus0 " + tag(a), ok, "total degree " + std::to_string(degree)};
}

CheckResult check_k_form(int a, int max_m, int max_degree) {
  auto K = [&](int g, const std::vector<int>& mu) -> Rational {
    if (g < 0 || mu.empty()) return Rational(0);
    const MuTuple t(mu);
    const auto m = branch_count(a, g, t);
    if (!m || *m < 0) return Rational(0);
    return hurwitz_normalized(a, g, t) * Rational(factorial(static_cast<unsigned long>(*m)));
  };
  long checked = 0, bad = 0;
  for (int g = 0; g <= max_m; ++g) {
    for (const auto& mu_t : partitions_up_to(max_degree)) {
      const auto m_opt = branch_count(a, g, mu_t);
      if (!m_opt || *m_opt < 1 || *m_opt > max_m) continue;
      const long m = *m_opt;
      const std::vector<int>& mu = mu_t.parts();
      const std::size_t n = mu.size();
      Rational rhs(0);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
          std::vector<int> merged;
          for (std::size_t k = 0; k < n; ++k)
            if (k != i && k != j) merged.push_back(mu[k]);
          merged.push_back(mu[i] + mu[j]);
          rhs += Rational(mu[i] + mu[j]) * K(g, merged);
        }
      for (std::size_t i = 0; i < n; ++i) {
        std::vector<int> rest;
        for (std::size_t k = 0; k < n; ++k)
          if (k != i) rest.push_back(mu[k]);
        for (int alpha = 1; alpha < mu[i]; ++alpha) {
          const int beta = mu[i] - alpha;
          std::vector<int> lowered = rest;
          lowered.push_back(alpha);
          lowered.push_back(beta);
          Rational bracket = K(g - 1, lowered);
          for (unsigned mask = 0; mask < (1u << rest.size()); ++mask)
            for (int g1 = 0; g1 <= g; ++g1) {
              std::vector<int> left{alpha}, right{beta};
              for (std::size_t k = 0; k < rest.size(); ++k) ((mask >> k) & 1u ? left : right).push_back(rest[k]);
              const auto m1 = branch_count(a, g1, MuTuple(left));
              const auto m2 = branch_count(a, g - g1, MuTuple(right));
              if (!m1 || !m2 || *m1 < 0 || *m2 < 0) continue;
              const Rational weight = Rational(factorial(static_cast<unsigned long>(m - 1))) /
                                      Rational(factorial(static_cast<unsigned long>(*m1)) *
                                               factorial(static_cast<unsigned long>(*m2)));
              bracket += weight * K(g1, left) * K(g - g1, right);
            }
          rhs += make_rational(static_cast<long>(alpha) * beta, 2) * bracket;
        }
      }
      ++checked;
      if (rhs != K(g, mu)) ++bad;
    }
  }
  return {"k_form " + tag(a), bad == 0 && checked > 0,
          std::to_string(checked) + " instances, " + std::to_string(bad) + " failures"};
}

CheckResult check_basis_consistency(int a, int k_max, int order) {
  const Series z = z_of_x_series(a, order);
  long bad = 0;
  for (int r = 1; r <= a; ++r)
    for (int k = 0; k <= k_max; ++k)
      if (compose(xi_ratfunc(a, r, k).series(order), z) != xi_series(a, r, k, order)) ++bad;
  return {"basis_consistency " + tag(a), bad == 0, std::to_string(bad) + " mismatching (r,k) pairs"};
}

CheckResult check_cactus_series(int a, int max_points) {
  const Series z = z_of_x_series(a, max_points + 1);
  long bad = 0, checked = 0;
  for (int b = 0; a * b + 1 <= max_points; ++b) {
    const int d = a * b + 1;
    std::vector<int> nu(static_cast<std::size_t>(b), a);
    nu.push_back(1);
    const Rational lhs = z[d] * Rational(factorial(static_cast<unsigned long>(d)));
    ++checked;
    if (lhs != Rational(count_cactus_trees_bruteforce(MuTuple(nu), max_points))) ++bad;
  }
  return {"cactus_series " + tag(a), bad == 0, std::to_string(checked) + " degrees"};
}

}  // namespace hurwitz
