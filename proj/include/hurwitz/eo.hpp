#pragma once

#include <cstdint>
#include <vector>

#include "hurwitz/complex_point.hpp"
#include "hurwitz/report.hpp"

namespace hurwitz {

/// x = z exp(-z^a), y = z^a together with the zeros of dx.
struct SpectralCurve {
  int a = 1;
  std::vector<ComplexPoint> branch_points;  // a^(-1/a) exp(2 pi i j / a)
};

/// PrincipalParts builds each omega_{g,n} once as a tensor of principal-part
/// coefficients at the branch points (kernel expanded in the first
/// variable); circles avoid only the other branch points and the origin.
/// Nested evaluates the recursion pointwise, every inner residue on a circle
/// that also avoids the current arguments, so radii shrink with depth.
enum class EOMethod { PrincipalParts, Nested };

struct EOConfig {
  int quad_points = 64;
  /// Circle radius as a fraction of the distance from alpha to the nearest
  /// other branch point, the origin, or (Nested only) any argument.
  double radius_factor = 0.25;
  double newton_tol = 1e-13;
  int newton_max_iter = 60;
  /// Relative to the branch-point modulus a^(-1/a).
  double min_separation = 1e-3;
  EOMethod method = EOMethod::PrincipalParts;

  /// InvalidInput unless every field is positive and radius_factor < 1/2.
  void validate() const;
};

struct CurveValues {
  ComplexPoint x, y, dx_dz;
};

CurveValues curve_xy(int a, ComplexPoint z);

/// Roots of 1 - a z^a, Newton-refined, in order of increasing angle from 0.
SpectralCurve branch_points(int a);

struct Involution {
  ComplexPoint zhat;
  ComplexPoint dzhat_dz;  // x'(z)/x'(zhat)
};

/// The other preimage of x(z) near alpha, by Newton from 2 alpha - z.
/// NoConvergence or CollapsedToIdentity on failure.
Involution involution(const SpectralCurve& curve, ComplexPoint alpha, ComplexPoint z, const EOConfig& cfg = {});

/// Scalar k with K(z1, z) = k dz1/dz:
/// z / (2 (zhat^a - z^a)(1 - a z^a)) * (1/(z - z1) - 1/(zhat - z1)).
ComplexPoint kernel(const SpectralCurve& curve, ComplexPoint z1, ComplexPoint z, ComplexPoint alpha,
                    const EOConfig& cfg = {});

/// W with omega_{g,n} = W dz_1 ... dz_n, by the topological recursion with
/// residues taken by trapezoidal quadrature. Base cases (0,1) and (0,2) are
/// returned directly. PointsTooClose when two arguments, or an argument and
/// a branch point, are closer than min_separation * a^(-1/a).
ComplexPoint omega_eval(const SpectralCurve& curve, int g, int n, const std::vector<ComplexPoint>& zs,
                        const EOConfig& cfg = {});

enum class ResidueKind { StringY, DilatonPhi };

/// sum_alpha Res y xi_k^{(r)} dx/x (StringY) or the same with
/// Phi = z^a/a - z^(2a)/2 in place of y (DilatonPhi), with the box-seeded
/// ladder xi.
ComplexPoint residue_identity(const SpectralCurve& curve, ResidueKind kind, int r, int k, const EOConfig& cfg = {});

/// Deterministic sample tuples: modulus uniform in [0.1, 0.5] a^(-1/a),
/// uniform angle, redrawn until pairwise distances reach 0.05 a^(-1/a).
std::vector<std::vector<ComplexPoint>> sample_tuples(int a, int n, int count, std::uint64_t seed);

/// Compares omega_eval against the exact expansion from fit_F at `samples`
/// sample tuples; passes when every relative error is at most tol.
VerificationReport verify_theorem1(int a, int g, int n, int samples, double tol, std::uint64_t seed,
                                   const EOConfig& cfg = {});

/// Numerical self-consistency of omega_eval at the sample tuples: quadrature
/// doubling, radius halving, argument permutation, Z_a rotation and the
/// vanishing of residues in the first variable.
VerificationReport check_eo_properties(int a, int g, int n, int samples, std::uint64_t seed,
                                       const EOConfig& cfg = {});

}  // namespace hurwitz
