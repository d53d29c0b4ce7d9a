#pragma once

#include "hurwitz/report.hpp"

namespace hurwitz {

// Exact series identities tying the cut-and-join numbers and the xi basis to
// the curve x = z exp(-z^a). Each returns a single pass/fail check.

/// x(z(x)) = x below the given order.
CheckResult check_inverse_series(int a, int order);

/// sum_mu H_0((mu)) x^mu equals z^a/a - z^(2a)/2 pulled back by z(x), below `order`.
CheckResult check_one_point_genus0(int a, int order);

/// x_1 d/dx_1 H_{0,2} = x_2/(x_2-x_1) - z_2/((z_2-z_1)(1-a z_1^a)) on all
/// coefficients of total degree <= degree. Both sides are multiplied by
/// (x_2-x_1)(z_2-z_1)(1-a z_1^a), whose lowest term (x_2-x_1)^2 makes the
/// comparison through degree+2 equivalent to the original identity.
CheckResult check_two_point_genus0(int a, int degree);

/// The K-form of the recursion (K = H m!, split factor (m-1)!/(m_1! m_2!))
/// on every (g, mu) with m <= max_m and |mu| <= max_degree.
CheckResult check_k_form(int a, int max_m, int max_degree);

/// xi_k^{(r)} expanded in z and composed with z(x) equals f_{r,k}, r <= a, k <= k_max.
CheckResult check_basis_consistency(int a, int k_max, int order);

/// (ab+1)! [x^(ab+1)] z(x) equals the number of cactus-node trees of type
/// (1, a, ..., a) for ab+1 <= max_points. Meaningful for a >= 2 only: for
/// a = 1 the series counts trees with a distinguished point.
CheckResult check_cactus_series(int a, int max_points);

}  // namespace hurwitz
