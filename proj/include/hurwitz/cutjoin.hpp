#pragma once

#include <map>

#include "hurwitz/mu_tuple.hpp"
#include "hurwitz/rational.hpp"

namespace hurwitz {

/// Normalised orbifold Hurwitz number H_g(mu) = H_{g;mu} |Aut mu| / m!,
/// computed by the cut-and-join recursion with a process-wide memo table.
///
/// Zero when a does not divide |mu| or m < 0. The recursion lowers m by one
/// per step and terminates at m = 0, where the only cover is z -> z^a over a
/// single point at infinity (g = 0, mu = (a)), of weight 1/a.
///
/// Throws InvalidInput for a < 1, g < 0, an empty tuple or a non-positive part.
/// Safe to call from several threads.
Rational hurwitz_normalized(int a, int g, const MuTuple& mu);

/// Unnormalised count H_{g;mu} = H_g(mu) m! / |Aut mu|.
Rational hurwitz_raw(int a, int g, const MuTuple& mu);

/// Coefficients of x_1^mu_1 ... x_n^mu_n in the genus g, n-point generating
/// series, for every ordered tuple with parts in [1, mu_max].
std::map<MuTuple, Rational> series_coefficients(int a, int g, int n, int mu_max);

/// Number of memoised entries; mainly for diagnostics.
std::size_t cutjoin_cache_size();
void cutjoin_clear_cache();

}  // namespace hurwitz
