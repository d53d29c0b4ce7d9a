#include "hurwitz/eo.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <memory>
#include <cmath>
#include <numbers>
#include <numeric>
#include <tuple>
#include <mutex>
#include <random>

#include <quadmath.h>

#include "hurwitz/errors.hpp"
#include "hurwitz/xibasis.hpp"

namespace hurwitz {
namespace {

// The recursion runs in extended precision and only the API boundary is
// double: residues are extracted from integrands whose poles at the branch
// points reach order 6g - 4 + 2n, and the quadrature cancels about
// radius^-order digits.
template <class R>
struct Num;

template <>
struct Num<long double> {
  using R = long double;
  static R exp(R x) { return std::exp(x); }
  static R sin(R x) { return std::sin(x); }
  static R cos(R x) { return std::cos(x); }
  static R hypot(R x, R y) { return std::hypot(x, y); }
  static R pow(R x, R y) { return std::pow(x, y); }
  static R pi() { return std::numbers::pi_v<R>; }
  static R eps() { return std::numeric_limits<R>::epsilon(); }
  static bool finite(R x) { return std::isfinite(x); }
};

template <>
struct Num<__float128> {
  using R = __float128;
  static R exp(R x) { return expq(x); }
  static R sin(R x) { return sinq(x); }
  static R cos(R x) { return cosq(x); }
  static R hypot(R x, R y) { return hypotq(x, y); }
  static R pow(R x, R y) { return powq(x, y); }
  static R pi() { return 4 * atanq(R(1)); }
  static R eps() { return ldexpq(R(1), -112); }
  static bool finite(R x) { return finiteq(x) != 0; }
};

template <class R>
R mag(const std::complex<R>& z) {
  return Num<R>::hypot(z.real(), z.imag());
}

template <class R>
std::complex<R> cexp(const std::complex<R>& z) {
  const R m = Num<R>::exp(z.real());
  return {m * Num<R>::cos(z.imag()), m * Num<R>::sin(z.imag())};
}

template <class R>
std::complex<R> unit(R theta) {
  return {Num<R>::cos(theta), Num<R>::sin(theta)};
}

template <class R>
std::complex<R> widen(ComplexPoint p) {
  return {static_cast<R>(p.real()), static_cast<R>(p.imag())};
}

template <class R>
ComplexPoint narrow(const std::complex<R>& p) {
  return {static_cast<double>(p.real()), static_cast<double>(p.imag())};
}

template <class R>
std::complex<R> ipow(std::complex<R> z, int k) {
  std::complex<R> r(1);
  for (; k > 0; k >>= 1) {
    if (k & 1) r *= z;
    z *= z;
  }
  return r;
}

template <class R>
R branch_modulus(int a) {
  return Num<R>::pow(static_cast<R>(a), R(-1) / static_cast<R>(a));
}

template <class Real>
class Engine {
  using C = std::complex<Real>;

 public:
  Engine(const SpectralCurve& curve, const EOConfig& cfg) : a_(curve.a), cfg_(cfg) {
    cfg.validate();
    require(curve.a >= 1 && static_cast<int>(curve.branch_points.size()) == curve.a, "malformed spectral curve");
    for (const auto& p : curve.branch_points) alphas_.push_back(refine(widen<Real>(p)));
  }

  std::pair<C, C> involution(C alpha, C z) const {
    const C za = ipow(z, a_);
    const C ez = cexp(-za);
    const C x0 = z * ez;
    const Real eps = Num<Real>::eps();
    C w = Real(2) * alpha - z;
    for (int it = 0; it < cfg_.newton_max_iter; ++it) {
      const C wa = ipow(w, a_);
      // x(w) - x0 = 0 rescaled by exp(w^a).
      const C step = (w - x0 * cexp(wa)) / (Real(1) - Real(a_) * wa);
      w -= step;
      if (!Num<Real>::finite(w.real()) || !Num<Real>::finite(w.imag())) break;
      if (mag(step) <= Real(8) * eps * std::max(mag(w), Real(1))) break;
    }
    const C wa = ipow(w, a_);
    const C ew = cexp(-wa);
    const Real resid = mag(w * ew - x0);
    if (!(resid <= static_cast<Real>(cfg_.newton_tol) * mag(x0)))
      fail(ErrorKind::NoConvergence, "involution Newton iteration did not converge");
    if (mag(w - z) < static_cast<Real>(cfg_.min_separation) * mag(z - alpha))
      fail(ErrorKind::CollapsedToIdentity, "involution returned the input point");
    return {w, (Real(1) - Real(a_) * za) * ez / ((Real(1) - Real(a_) * wa) * ew)};
  }

  C kernel(C z1, C z, C zhat) const {
    const C za = ipow(z, a_);
    const C diff = ipow(zhat, a_) - za;
    if (mag(diff) <= Real(1e-14) * mag(za))
      fail(ErrorKind::Degenerate, "kernel denominator vanishes");
    return z / (Real(2) * diff * (Real(1) - Real(a_) * za)) * (Real(1) / (z - z1) - Real(1) / (zhat - z1));
  }

  // Radius of the residue circle about alpha that keeps every other
  // singularity of the integrand at least 1/radius_factor radii away.
  Real radius(C alpha, const std::vector<C>& pts, Real factor) const {
    Real d = mag(alpha);
    for (const C& b : alphas_)
      if (b != alpha) d = std::min(d, mag(b - alpha));
    for (const C& p : pts) d = std::min(d, mag(p - alpha));
    return factor * d;
  }

  // sum_alpha Res_{z=alpha} f(z) dz by the trapezoid rule on circles.
  template <class F>
  C residue_sum(const std::vector<C>& avoid, int nodes, Real factor, F&& f) const {
    C total(0);
    const Real two_pi = Real(2) * Num<Real>::pi();
    for (const C& alpha : alphas_) {
      const Real rho = radius(alpha, avoid, factor);
      C acc(0);
      for (int j = 0; j < nodes; ++j) {
        const C e = unit(two_pi * (static_cast<Real>(j) + Real(0.5)) / static_cast<Real>(nodes));
        acc += f(alpha, alpha + rho * e) * e;
      }
      total += acc * rho / static_cast<Real>(nodes);
    }
    return total;
  }

  C omega(int g, const std::vector<C>& zs) const {
    const int n = static_cast<int>(zs.size());
    if (g == 0 && n == 1) return -ipow(zs[0], a_ - 1) * (Real(1) - Real(a_) * ipow(zs[0], a_));
    if (g == 0 && n == 2) {
      const C d = zs[0] - zs[1];
      return Real(1) / (d * d);
    }
    const C z1 = zs[0];
    const std::vector<C> rest(zs.begin() + 1, zs.end());
    const int m = n - 1;
    return residue_sum(zs, cfg_.quad_points, static_cast<Real>(cfg_.radius_factor), [&](C alpha, C z) {
      const auto [zh, dzh] = involution(alpha, z);
      C bracket(0);
      if (g >= 1) {
        std::vector<C> args{z, zh};
        args.insert(args.end(), rest.begin(), rest.end());
        bracket += omega(g - 1, args);
      }
      for (unsigned mask = 0; mask < (1u << m); ++mask) {
        std::vector<C> left{z}, right{zh};
        for (int i = 0; i < m; ++i) ((mask & (1u << i)) ? left : right).push_back(rest[static_cast<std::size_t>(i)]);
        for (int g1 = 0; g1 <= g; ++g1) {
          const int g2 = g - g1;
          if ((g1 == 0 && left.size() == 1) || (g2 == 0 && right.size() == 1)) continue;
          bracket += omega(g1, left) * omega(g2, right);
        }
      }
      return kernel(z1, z, zh) * bracket * dzh;
    });
  }

  const std::vector<C>& alphas() const { return alphas_; }
  int a() const { return a_; }
  const EOConfig& config() const { return cfg_; }

 private:
  C refine(C z) const {
    for (int it = 0; it < 100; ++it) {
      const C za = ipow(z, a_);
      const C step = (Real(1) - Real(a_) * za) / (-Real(a_) * Real(a_) * za / z);
      z -= step;
      if (mag(step) <= Real(4) * Num<Real>::eps() * mag(z)) break;
    }
    return z;
  }

  int a_;
  EOConfig cfg_;
  std::vector<C> alphas_;
};

// Stable omega_{g,n} as a sum of principal parts: the coefficient tensor of
// prod_i (y_i - alpha_{b_i})^(-k_i), 1 <= k_i <= K, with per-variable index
// j = b K + k - 1 and variables little-endian. The kernel is expanded in the
// first variable, 1/(z - z1) = -sum_k (z - alpha)^k / (z1 - alpha)^(k+1), so
// residue circles only have to avoid the other branch points and the origin
// and every tensor is built once.
template <class Real>
class PrincipalParts {
  using C = std::complex<Real>;

 public:
  PrincipalParts(const Engine<Real>& engine, int max_order)
      : e_(engine), K_(max_order), dim_(engine.a() * max_order) {}

  static int pole_order(int g, int n) { return 6 * g - 4 + 2 * n; }

  // Builds omega_{g,n} and everything it recurses on.
  void prepare(int g, int n) { tensor(g, n); }

  // Requires prepare(g, zs.size()).
  C eval(int g, const std::vector<C>& zs) const {
    std::vector<C> t = cache_.at({g, static_cast<int>(zs.size())});
    for (const C& z : zs) t = contract_first(t, powers(z));
    return t[0];
  }

 private:
  using Tensor = std::vector<C>;

  // (y - alpha_b)^(-k) for every index.
  std::vector<C> powers(C y) const {
    std::vector<C> u(static_cast<std::size_t>(dim_));
    for (int b = 0; b < e_.a(); ++b) {
      const C inv = Real(1) / (y - e_.alphas()[static_cast<std::size_t>(b)]);
      C p = inv;
      for (int k = 0; k < K_; ++k, p *= inv) u[static_cast<std::size_t>(b * K_ + k)] = p;
    }
    return u;
  }

  // 1/(z - y)^2 = sum_{m>=2} (m-1)(z - alpha)^(m-2) (y - alpha)^(-m), |z - alpha| < |y - alpha|.
  std::vector<C> diagonal_pole(int A, C z, int order) const {
    std::vector<C> v(static_cast<std::size_t>(dim_));
    const C s = z - e_.alphas()[static_cast<std::size_t>(A)];
    C p(1);
    for (int m = 2; m <= order; ++m, p *= s) v[static_cast<std::size_t>(A * K_ + m - 1)] = Real(m - 1) * p;
    return v;
  }

  Tensor contract_first(const Tensor& t, const std::vector<C>& u) const {
    const std::size_t d = static_cast<std::size_t>(dim_);
    Tensor out(t.size() / d);
    for (std::size_t s = 0; s < out.size(); ++s) {
      C acc(0);
      for (std::size_t j = 0; j < d; ++j) acc += t[j + d * s] * u[j];
      out[s] = acc;
    }
    return out;
  }

  // Value of a factor omega_{h}(w, I) with the |I| other slots left symbolic.
  Tensor factor(int h, int m, C w, int A, int order) {
    if (h == 0 && m == 1) return diagonal_pole(A, w, order);
    return contract_first(tensor(h, m + 1), powers(w));
  }

  const Tensor& tensor(int g, int n) {
    const auto key = std::make_pair(g, n);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    Tensor t = build(g, n);
    return cache_.emplace(key, std::move(t)).first->second;
  }

  Tensor build(int g, int n) {
    const int p = pole_order(g, n);
    require(p <= K_, "principal-part order exceeds the tensor layout");
    const int m = n - 1;
    const std::size_t d = static_cast<std::size_t>(dim_);
    std::size_t rest = 1;
    for (int i = 0; i < m; ++i) rest *= d;
    Tensor out(d * rest);

    const EOConfig& cfg = e_.config();
    const int N = cfg.quad_points;
    const Real two_pi = Real(2) * Num<Real>::pi();
    const auto& alphas = e_.alphas();
    const int a = e_.a();

    for (int A = 0; A < a; ++A) {
      const C alpha = alphas[static_cast<std::size_t>(A)];
      const Real rho = e_.radius(alpha, {}, static_cast<Real>(cfg.radius_factor));
      for (int j = 0; j < N; ++j) {
        const C ej = unit(two_pi * (static_cast<Real>(j) + Real(0.5)) / static_cast<Real>(N));
        const C z = alpha + rho * ej;
        const auto [zh, dzh] = e_.involution(alpha, z);

        Tensor B(rest);
        if (g >= 1) {
          if (g == 1 && n == 1) {
            const C dz = z - zh;
            B[0] += Real(1) / (dz * dz);
          } else {
            const Tensor t = contract_first(contract_first(tensor(g - 1, n + 1), powers(z)), powers(zh));
            for (std::size_t s = 0; s < rest; ++s) B[s] += t[s];
          }
        }
        for (unsigned mask = 0; mask < (1u << m); ++mask) {
          const int left_n = std::popcount(mask);
          const int right_n = m - left_n;
          for (int g1 = 0; g1 <= g; ++g1) {
            const int g2 = g - g1;
            if ((g1 == 0 && left_n == 0) || (g2 == 0 && right_n == 0)) continue;
            const Tensor L = factor(g1, left_n, z, A, p);
            const Tensor R = factor(g2, right_n, zh, A, p);
            for (std::size_t s = 0; s < rest; ++s) {
              std::size_t li = 0, ri = 0, lw = 1, rw = 1, rem = s;
              for (int i = 0; i < m; ++i, rem /= d) {
                const std::size_t digit = rem % d;
                if (mask & (1u << i)) {
                  li += digit * lw;
                  lw *= d;
                } else {
                  ri += digit * rw;
                  rw *= d;
                }
              }
              B[s] += L[li] * R[ri];
            }
          }
        }

        const C za = ipow(z, a);
        const C pre = -z / (Real(2) * (ipow(zh, a) - za) * (Real(1) - Real(a) * za)) * dzh * rho * ej /
                      static_cast<Real>(N);
        C sp(1), hp(1);
        for (int k = 0; k < p; ++k, sp *= z - alpha, hp *= zh - alpha) {
          const C c = pre * (sp - hp);
          const std::size_t row = static_cast<std::size_t>(A * K_ + k);
          for (std::size_t s = 0; s < rest; ++s) out[row + d * s] += c * B[s];
        }
      }
    }
    return out;
  }

  Engine<Real> e_;
  int K_, dim_;
  std::map<std::pair<int, int>, Tensor> cache_;
};

using LD = long double;
using CL = std::complex<LD>;

// Principal-part tensors depend only on a, the quadrature settings and the
// layout order, so they are shared between calls.
using PPKey = std::tuple<int, int, double, double, int, double, int>;

std::shared_ptr<const PrincipalParts<__float128>> principal_parts(const SpectralCurve& curve, const EOConfig& cfg,
                                                                 int g, int n) {
  static std::mutex mu;
  static std::map<PPKey, std::shared_ptr<PrincipalParts<__float128>>> cache;
  const int order = PrincipalParts<__float128>::pole_order(g, n);
  const PPKey key{curve.a, cfg.quad_points, cfg.radius_factor, cfg.newton_tol, cfg.newton_max_iter,
                   cfg.min_separation, order};
  std::lock_guard lock(mu);
  auto& slot = cache[key];
  if (!slot) slot = std::make_shared<PrincipalParts<__float128>>(Engine<__float128>(curve, cfg), order);
  slot->prepare(g, n);
  return slot;
}

void check_separation(int a, const std::vector<ComplexPoint>& zs, const SpectralCurve& curve, const EOConfig& cfg) {
  const double tol = cfg.min_separation * static_cast<double>(branch_modulus<LD>(a));
  for (std::size_t i = 0; i < zs.size(); ++i) {
    require_finite(zs[i], "evaluation point");
    for (std::size_t j = i + 1; j < zs.size(); ++j)
      if (std::abs(zs[i] - zs[j]) < tol) fail(ErrorKind::PointsTooClose, "evaluation points coincide");
    for (const auto& b : curve.branch_points)
      if (std::abs(zs[i] - b) < tol) fail(ErrorKind::PointsTooClose, "evaluation point at a branch point");
  }
}

double rel_err(ComplexPoint num, ComplexPoint ref) {
  const double scale = std::abs(ref);
  return std::abs(num - ref) / (scale > 0 ? scale : 1.0);
}

}  // namespace

void EOConfig::validate() const {
  require(quad_points > 0, "quad_points must be positive");
  require(radius_factor > 0 && radius_factor < 0.5, "radius_factor must lie in (0, 1/2)");
  require(newton_tol > 0, "newton_tol must be positive");
  require(newton_max_iter > 0, "newton_max_iter must be positive");
  require(min_separation > 0, "min_separation must be positive");
}

CurveValues curve_xy(int a, ComplexPoint z) {
  require(a >= 1, "a must be positive");
  require_finite(z, "z");
  const CL w = widen<LD>(z);
  const CL wa = ipow(w, a);
  const CL e = std::exp(-wa);
  return {narrow(w * e), narrow(wa), narrow((LD(1) - LD(a) * wa) * e)};
}

SpectralCurve branch_points(int a) {
  require(a >= 1, "a must be positive");
  SpectralCurve c;
  c.a = a;
  std::vector<ComplexPoint> seeds;
  const LD r = branch_modulus<LD>(a);
  for (int j = 0; j < a; ++j)
    seeds.push_back(narrow(std::polar(r, LD(2) * std::numbers::pi_v<LD> * static_cast<LD>(j) / static_cast<LD>(a))));
  c.branch_points = seeds;
  const Engine<LD> e(c, EOConfig{});
  c.branch_points.clear();
  for (const CL& al : e.alphas()) c.branch_points.push_back(narrow(al));
  return c;
}

Involution involution(const SpectralCurve& curve, ComplexPoint alpha, ComplexPoint z, const EOConfig& cfg) {
  require_finite(alpha, "alpha");
  require_finite(z, "z");
  const Engine<LD> e(curve, cfg);
  const auto [zh, d] = e.involution(widen<LD>(alpha), widen<LD>(z));
  return {narrow(zh), narrow(d)};
}

ComplexPoint kernel(const SpectralCurve& curve, ComplexPoint z1, ComplexPoint z, ComplexPoint alpha,
                    const EOConfig& cfg) {
  require_finite(z1, "z1");
  const Engine<LD> e(curve, cfg);
  const CL w = widen<LD>(z), u = widen<LD>(z1);
  const CL zh = e.involution(widen<LD>(alpha), w).first;
  const LD sep = static_cast<LD>(cfg.min_separation) * branch_modulus<LD>(curve.a);
  if (std::abs(u - w) < sep || std::abs(u - zh) < sep) fail(ErrorKind::PointsTooClose, "kernel evaluated at its pole");
  return narrow(e.kernel(u, w, zh));
}

ComplexPoint omega_eval(const SpectralCurve& curve, int g, int n, const std::vector<ComplexPoint>& zs,
                        const EOConfig& cfg) {
  require(g >= 0 && n >= 1, "need g >= 0 and n >= 1");
  require(2 * g - 2 + n > 0 || (g == 0 && n <= 2), "(g, n) must be stable, (0,1) or (0,2)");
  require(static_cast<int>(zs.size()) == n, "wrong number of points");
  check_separation(curve.a, zs, curve, cfg);
  if (cfg.method == EOMethod::Nested || 2 * g - 2 + n <= 0) {
    const Engine<LD> e(curve, cfg);
    std::vector<CL> w;
    for (const auto& z : zs) w.push_back(widen<LD>(z));
    return narrow(e.omega(g, w));
  }
  const auto pp = principal_parts(curve, cfg, g, n);
  std::vector<std::complex<__float128>> w;
  for (const auto& z : zs) w.push_back(widen<__float128>(z));
  return narrow(pp->eval(g, w));
}

ComplexPoint residue_identity(const SpectralCurve& curve, ResidueKind kind, int r, int k, const EOConfig& cfg) {
  const int a = curve.a;
  require(k >= 0 && r >= 1 && r <= a, "need k >= 0 and 1 <= r <= a");
  const Engine<LD> e(curve, cfg);
  const RatFunc xi = xi_ratfunc(a, r, k, XiConvention::Box);
  return narrow(e.residue_sum({}, cfg.quad_points, static_cast<LD>(cfg.radius_factor), [&](CL, CL z) {
    const CL za = ipow(z, a);
    const CL weight = kind == ResidueKind::StringY ? za : za / LD(a) - za * za / LD(2);
    return weight * xi.eval<LD>(z, LD(0)) * (LD(1) - LD(a) * za) / z;
  }));
}

std::vector<std::vector<ComplexPoint>> sample_tuples(int a, int n, int count, std::uint64_t seed) {
  require(a >= 1 && n >= 1 && count >= 0, "bad sampling parameters");
  std::mt19937_64 rng(seed);
  const double scale = static_cast<double>(branch_modulus<LD>(a));
  std::uniform_real_distribution<double> modulus(0.1 * scale, 0.5 * scale);
  std::uniform_real_distribution<double> angle(0.0, 2 * std::numbers::pi);
  std::vector<std::vector<ComplexPoint>> out;
  while (static_cast<int>(out.size()) < count) {
    std::vector<ComplexPoint> t;
    for (int i = 0; i < n; ++i) {
      const double rho = modulus(rng);
      t.push_back(std::polar(rho, angle(rng)));
    }
    bool ok = true;
    for (int i = 0; i < n && ok; ++i)
      for (int j = i + 1; j < n && ok; ++j) ok = std::abs(t[static_cast<std::size_t>(i)] - t[static_cast<std::size_t>(j)]) >= 0.05 * scale;
    if (ok) out.push_back(std::move(t));
  }
  return out;
}

VerificationReport verify_theorem1(int a, int g, int n, int samples, double tol, std::uint64_t seed,
                                   const EOConfig& cfg) {
  require(2 * g - 2 + n > 0, "the numeric comparison needs a stable (g, n)");
  require(samples >= 1 && tol > 0, "need at least one sample and a positive tolerance");
  VerificationReport rep;
  rep.suite = "theorem1";
  rep.params = {{"a", a}, {"g", g}, {"n", n}, {"samples", samples}, {"tol", tol}, {"seed", seed}};
  const XiExpansion exp = fit_F(a, g, n);
  const ExactOmega exact(exp);
  const SpectralCurve curve = branch_points(a);
  int idx = 0;
  for (const auto& pts : sample_tuples(a, n, samples, seed)) {
    NumericSample s;
    s.points = pts;
    s.exact = exact(pts);
    s.numeric = omega_eval(curve, g, n, pts, cfg);
    s.rel_err = rel_err(s.numeric, s.exact);
    rep.samples.push_back(s);
    char buf[64];
    std::snprintf(buf, sizeof buf, "relative error %.3e", s.rel_err);
    rep.add({"sample " + std::to_string(idx++), s.rel_err <= tol, buf});
  }
  return rep;
}

VerificationReport check_eo_properties(int a, int g, int n, int samples, std::uint64_t seed, const EOConfig& cfg) {
  require(2 * g - 2 + n > 0, "property checks need a stable (g, n)");
  VerificationReport rep;
  rep.suite = "eo_properties";
  rep.params = {{"a", a}, {"g", g}, {"n", n}, {"samples", samples}, {"seed", seed}};
  const SpectralCurve curve = branch_points(a);

  double quad = 0, radius = 0, perm = 0, rot = 0, resid = 0;
  EOConfig doubled = cfg, halved = cfg;
  doubled.quad_points *= 2;
  halved.radius_factor /= 2;
  const ComplexPoint zeta = std::polar(1.0, 2 * std::numbers::pi / a);
  const ComplexPoint zeta_n = std::pow(zeta, n);

  for (const auto& pts : sample_tuples(a, n, samples, seed)) {
    const ComplexPoint w = omega_eval(curve, g, n, pts, cfg);
    quad = std::max(quad, rel_err(omega_eval(curve, g, n, pts, doubled), w));
    radius = std::max(radius, rel_err(omega_eval(curve, g, n, pts, halved), w));

    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    while (std::next_permutation(order.begin(), order.end())) {
      std::vector<ComplexPoint> p;
      for (int i : order) p.push_back(pts[static_cast<std::size_t>(i)]);
      perm = std::max(perm, rel_err(omega_eval(curve, g, n, p, cfg), w));
    }

    std::vector<ComplexPoint> turned;
    for (const auto& z : pts) turned.push_back(z * zeta);
    rot = std::max(rot, rel_err(omega_eval(curve, g, n, turned, cfg) * zeta_n, w));

    // Contour integral of W in z_1 about each branch point, scaled by the
    // circle radius times the mean modulus of W on it.
    const std::vector<ComplexPoint> rest(pts.begin() + 1, pts.end());
    const int nodes = std::max(16, cfg.quad_points / 2);
    for (const auto& alpha : curve.branch_points) {
      double d = std::abs(alpha);
      for (const auto& b : curve.branch_points)
        if (b != alpha) d = std::min(d, std::abs(b - alpha));
      for (const auto& p : rest) d = std::min(d, std::abs(p - alpha));
      const double rho = cfg.radius_factor * d;
      ComplexPoint acc(0);
      double mag = 0;
      for (int j = 0; j < nodes; ++j) {
        const ComplexPoint e = std::polar(1.0, 2 * std::numbers::pi * (j + 0.5) / nodes);
        std::vector<ComplexPoint> args{alpha + rho * e};
        args.insert(args.end(), rest.begin(), rest.end());
        const ComplexPoint v = omega_eval(curve, g, n, args, cfg);
        acc += v * e;
        mag += std::abs(v);
      }
      acc *= rho / nodes;
      mag /= nodes;
      resid = std::max(resid, std::abs(acc) / (rho * mag));
    }
  }

  auto line = [](const char* name, double value, double limit) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "max relative deviation %.3e (limit %.0e)", value, limit);
    return CheckResult{name, value <= limit, buf};
  };
  rep.add(line("quadrature doubling", quad, 1e-10));
  rep.add(line("radius halving", radius, 1e-9));
  if (n >= 2) rep.add(line("permutation symmetry", perm, 1e-9));
  rep.add(line("Z_a covariance", rot, 1e-8));
  rep.add(line("first-variable residues", resid, 1e-8));
  return rep;
}

}  // namespace hurwitz
