#pragma once

#include <vector>

#include "hurwitz/report.hpp"

namespace hurwitz {

// Report-producing wrappers over the exact and numeric checks, one per
// `verify` subcommand. Failures are recorded in the report; only invalid
// parameters throw.

/// Cut-and-join against the permutation oracle, and the fatgraph oracle
/// against the permutation oracle times |Aut mu| (m >= 1), on every ordered mu
/// with |mu| <= max_degree divisible by a, genus 0..max_genus and at most
/// max_m simple branch points.
VerificationReport verify_oracle(const std::vector<int>& as, int max_degree, int max_m = 3, int max_genus = 1);

/// Series identities below `order`: x(z(x)) = x, the one- and two-point
/// genus-zero formulas, and the xi basis against its defining series.
VerificationReport verify_series(const std::vector<int>& as, int order);

/// fit_F followed by an independent comparison with the cut-and-join values on
/// every grid point with b_i <= kmax + 1.
VerificationReport verify_fit(int a, int g, int n);

/// Residue identities for r <= a, k <= k_max: the y-weighted sum is 1 at
/// (k, r) = (1, a) and the Phi-weighted sum is -1 at (2, a), zero otherwise.
VerificationReport verify_residues(int a, int k_max = 3, double tol = 1e-8);

}  // namespace hurwitz
