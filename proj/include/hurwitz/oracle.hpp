#pragma once

#include <vector>

#include "hurwitz/mu_tuple.hpp"
#include "hurwitz/rational.hpp"

namespace hurwitz {

/// Size caps for the brute-force enumerations.
struct OracleLimits {
  int max_degree = 6;
  int max_transpositions = 4;
};

/// H_{g;mu} by direct enumeration of monodromy tuples in S_d: sigma_0 of type
/// (a, ..., a), m transpositions, product of cycle type mu, transitive group.
///
/// sigma_0 is fixed to one representative of its conjugacy class and the
/// count rescaled by the class size, which leaves the total unchanged.
/// InvalidInput when a does not divide |mu| or m < 0; LimitExceeded past limits.
Rational count_connected_covers(int a, int g, const MuTuple& mu, const OracleLimits& limits = {});

/// Weighted count sum 1/|Aut| of edge-labelled fatgraphs with |mu|/a vertices of
/// valence a*m (half-edges cyclically labelled 1..m), one edge per label and
/// face perimeters mu_i*m. Equals H_{g;mu} |Aut mu|.
///
/// Only defined for m >= 1 (InvalidInput otherwise); zero when a does not
/// divide |mu|.
Rational count_fatgraphs(int a, int g, const MuTuple& mu, const OracleLimits& limits = {});

/// Cactus-node trees of type nu on |nu| labelled points, counted by decoding
/// every Pruefer-style code in M x {1..d}^(l-2). Each decoded tree is
/// validated and re-encoded; the result is the number of distinct trees.
Integer count_cactus_trees_bruteforce(const MuTuple& nu, int d_limit = 7);

/// Same count by enumerating node structures and branch sets directly,
/// without the encoding. Used to cross-check the bijection.
Integer count_cactus_trees_direct(const MuTuple& nu, int d_limit = 7);

/// d!/|Aut nu| * d^(l-2), with d^(-1) taken as an exact rational when l = 1.
Rational cactus_formula(const MuTuple& nu);

}  // namespace hurwitz
